#include <catch2/catch_amalgamated.hpp>

#include "freeknot/generate.hpp"
#include "freeknot/invariant.hpp"
#include "support/raw_invariant.hpp"

using namespace freeknot;

TEST_CASE("split smoothing") {
  CHECK(serialize(split_smooth(parse_gauss_words("1 1"), "1")) == "- | -");
  CHECK(serialize(split_smooth(parse_gauss_words("1 2 3 1 2 3"), "1")) == "2 3 | 2 3");
  CHECK(serialize(split_smooth(parse_gauss_words("1 2 1 2"), "1")) == "2 | 2");
  CHECK_THROWS_AS(split_smooth(parse_gauss_words("a | a"), "a"), Error);
}

TEST_CASE("split smoothing raises the circle count by one") {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = random_link_diagram(1 + (int)rng.below(3), 1 + (int)rng.below(7), rng);
    for (const auto& label : d.chord_labels()) {
      if (!d.is_self_chord(d.chord_id(label))) continue;
      CHECK(split_smooth(d, label).num_circles() == d.num_circles() + 1);
    }
  }
}

TEST_CASE("linear combinations cancel over Z2") {
  LinearCombination x;
  x.toggle(parse_gauss_words("1 2 1 2"));
  x.toggle(parse_gauss_words("2 1 2 1"));  // isomorphic: cancels
  CHECK(x.is_zero());
  x.toggle(parse_gauss_words("1 1 2 2"));
  CHECK(x.size() == 1);
}

TEST_CASE("delta basics") {
  CHECK(delta(LinearCombination(parse_gauss_words("1 2 1 2"))).is_zero());

  auto loop = delta(LinearCombination(parse_gauss_words("1 1")));
  REQUIRE(loop.size() == 1);
  CHECK(loop.terms().begin()->first.word == "- | -");

  // three isomorphic smoothings collapse to one class
  auto torus = delta(LinearCombination(parse_gauss_words("1 2 3 1 2 3")));
  REQUIRE(torus.size() == 1);
  CHECK(torus.terms().begin()->first.word == "1 2 | 1 2");

  CHECK(delta_n(parse_gauss_words("1 1"), 2).is_zero());
}

TEST_CASE("delta is linear") {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    LinearCombination x, y;
    for (int i = 0; i < 2; ++i) x.toggle(random_knot_diagram(1 + (int)rng.below(5), rng));
    for (int i = 0; i < 2; ++i) y.toggle(random_knot_diagram(1 + (int)rng.below(5), rng));
    auto lhs = delta(x + y);
    auto rhs = delta(x) + delta(y);
    CHECK(lhs.terms().size() == rhs.terms().size());
    CHECK(std::equal(lhs.terms().begin(), lhs.terms().end(), rhs.terms().begin(),
                     [](const auto& a, const auto& b) { return a.first == b.first; }));
  }
  CHECK(delta(LinearCombination()).is_zero());
}

TEST_CASE("gamma graph and j") {
  auto g1 = gamma_graph(parse_gauss_words("2 | 2"));
  CHECK(g1.vertices == 2);
  CHECK(g1.edges == std::set<std::pair<int, int>>{{0, 1}});
  CHECK(j_number(parse_gauss_words("2 | 2")) == 1);

  auto g2 = gamma_graph(parse_gauss_words("2 3 | 2 3"));
  CHECK(g2.edges.empty());
  CHECK(j_number(parse_gauss_words("2 3 | 2 3")) == 0);

  CHECK(j_number(parse_gauss_words("1 2 | 1 3 | 2 3")) == 3);
  CHECK(j_number(parse_gauss_words("1 2 1 2")) == 0);  // one circle, no edges
  CHECK(j_number(parse_gauss_words("1 1 | -")) == 0);  // isolated vertex
}

TEST_CASE("gamma ignores even multiplicities and self-chords") {
  auto d = parse_gauss_words("a b a c | b d d c");
  auto g = gamma_graph(d);
  // b and c cross the two circles once each: weight 2, even, no edge
  CHECK(g.edges.empty());
}

TEST_CASE("invariant of single diagrams") {
  CHECK(i_of_diagram(parse_gauss_words("2 | 2")).support == std::set<int>{1});
  CHECK(i_of_diagram(parse_gauss_words("1 2 1 2")).is_zero());
  CHECK(i_of_diagram(parse_gauss_words("1 2 | 1 3 | 2 3")).support == std::set<int>{3});
}

TEST_CASE("i_n basics") {
  CHECK(i_n(parse_gauss_words("1 2 3 1 2 3"), 1).is_zero());
  for (int n = 1; n <= 4; ++n) CHECK(i_n(parse_gauss_words("-"), n).is_zero());
  CHECK_THROWS_AS(i_n(parse_gauss_words("1 | 1"), 1), Error);
  auto series = i_series(parse_gauss_words("1 2 3 1 2 3"), 3);
  REQUIRE(series.size() == 3);
  CHECK(series[0] == i_n(parse_gauss_words("1 2 3 1 2 3"), 1));
  CHECK(series[2] == i_n(parse_gauss_words("1 2 3 1 2 3"), 3));
}

TEST_CASE("deduplicated pipeline matches raw enumeration") {
  Rng rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    auto d = random_knot_diagram((int)rng.below(7), rng);
    for (int n = 1; n <= 3; ++n)
      CHECK(i_n(d, n) == freeknot::testing::i_n_raw(d, n));
  }
}

TEST_CASE("invariant value arithmetic and rendering") {
  InvariantValue v;
  CHECK(v.to_string() == "0");
  v.toggle(4);
  CHECK(v.to_string() == "a_4");
  v.toggle(2);
  CHECK(v.to_string() == "a_2 + a_4");
  v.toggle(4);
  CHECK(v.support == std::set<int>{2});
  InvariantValue w;
  w.toggle(2);
  CHECK((v + w).is_zero());
}
