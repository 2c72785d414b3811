#pragma once

// Seeded diagram generators and exhaustive enumeration helpers.
// mt19937_64 gives a platform-stable stream; bounded draws use rejection
// sampling so results are identical everywhere.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"

namespace freeknot {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw Error("empty range");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 gen_;
};

namespace detail {

// partner[s] over slots 0..2m-1: repeatedly mate the smallest free slot
// with a uniformly random free one
inline std::vector<int> random_matching(int m, Rng& rng) {
  int width = 2 * m;
  std::vector<int> partner(width, -1), free_slots;
  for (int s = width - 1; s >= 0; --s) free_slots.push_back(s);
  while (!free_slots.empty()) {
    int a = free_slots.back();
    free_slots.pop_back();
    int pick = static_cast<int>(rng.below(free_slots.size()));
    int b = free_slots[pick];
    free_slots.erase(free_slots.begin() + pick);
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

inline ChordDiagram matching_to_diagram(const std::vector<int>& partner,
                                        const std::vector<int>& circle_sizes) {
  std::vector<std::string> slot_label(partner.size());
  int next = 1;
  for (size_t s = 0; s < partner.size(); ++s) {
    if (!slot_label[s].empty()) continue;
    std::string label = std::to_string(next++);
    slot_label[s] = slot_label[partner[s]] = label;
  }
  std::vector<std::vector<std::string>> words;
  size_t at = 0;
  for (int size : circle_sizes) {
    words.emplace_back(slot_label.begin() + at, slot_label.begin() + at + size);
    at += size;
  }
  return ChordDiagram::from_words(words);
}

}  // namespace detail

/// Uniformly random perfect matching on the 2m slots of one circle.
inline ChordDiagram random_knot_diagram(int chords, Rng& rng) {
  if (chords < 0) throw Error("chord count must be nonnegative");
  auto partner = detail::random_matching(chords, rng);
  return detail::matching_to_diagram(partner, {2 * chords});
}

inline ChordDiagram random_knot_diagram(int chords, std::uint64_t seed) {
  Rng rng(seed);
  return random_knot_diagram(chords, rng);
}

/// Random diagram on the given number of circles: slots are dealt to the
/// circles uniformly, then matched uniformly.
inline ChordDiagram random_link_diagram(int circles, int chords, Rng& rng) {
  if (circles < 1) throw Error("need at least one circle");
  if (chords < 0) throw Error("chord count must be nonnegative");
  std::vector<int> sizes(circles, 0);
  for (int s = 0; s < 2 * chords; ++s) sizes[rng.below(circles)]++;
  auto partner = detail::random_matching(chords, rng);
  return detail::matching_to_diagram(partner, sizes);
}

/// Calls fn with every perfect matching (partner array) on 2m slots.
inline void enumerate_matchings(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> partner(2 * m, -1);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int s = 0; s < 2 * m; ++s)
      if (partner[s] < 0) { a = s; break; }
    if (a < 0) {
      fn(partner);
      return;
    }
    for (int b = a + 1; b < 2 * m; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = -1;
      partner[b] = -1;
    }
  };
  rec();
}

/// All one-circle diagrams with exactly m chords, one representative per
/// canonical class, sorted by canonical word.
inline std::vector<ChordDiagram> enumerate_knot_classes(int m) {
  std::map<CanonicalKey, ChordDiagram> classes;
  enumerate_matchings(m, [&](const std::vector<int>& partner) {
    ChordDiagram d = detail::matching_to_diagram(partner, {2 * m});
    classes.emplace(canonical_key(d), std::move(d));
  });
  std::vector<ChordDiagram> out;
  for (auto& [key, d] : classes) out.push_back(std::move(d));
  return out;
}

/// All matchings on 2t slots invariant under the reflection s -> 2t-1-s;
/// exactly the blocks insert_configuration accepts.
inline std::vector<std::vector<std::pair<int, int>>> palindromic_blocks(int t) {
  std::vector<std::vector<std::pair<int, int>>> out;
  enumerate_matchings(t, [&](const std::vector<int>& partner) {
    int width = 2 * t;
    for (int s = 0; s < width; ++s)
      if (partner[width - 1 - s] != width - 1 - partner[s]) return;
    std::vector<std::pair<int, int>> block;
    for (int s = 0; s < width; ++s)
      if (s < partner[s]) block.push_back({s, partner[s]});
    out.push_back(std::move(block));
  });
  return out;
}

}  // namespace freeknot
