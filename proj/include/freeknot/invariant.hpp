#pragma once

// The smoothing map and the cobordism obstruction built on top of it:
//   split_smooth  — the component-raising resolution at a self-chord
//   delta         — Z2 sum of split smoothings at all even self-chords
//   gamma_graph   — one vertex per circle, edges = odd shared-chord parity
//   j_number      — 0 when gamma is disconnected, else its edge count
//   i_n           — value of a_{j} summed over delta^n, in the Z2 span of
//                   formal basis vectors a_1, a_2, ...

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"

namespace freeknot {

/// Splits the chord's circle into the two arcs between its endpoints.
/// The chord is deleted, every other chord keeps its endpoints, and the
/// circle count rises by exactly one.  Mixed chords cannot be smoothed here.
inline ChordDiagram split_smooth(const ChordDiagram& d, const std::string& label) {
  int id = d.chord_id(label);
  if (!d.is_self_chord(id))
    throw Error("split smoothing requires a self-chord, '" + label + "' is mixed");
  auto [e1, e2] = d.chord_ends(id);
  int c = e1.circle;
  auto words = d.to_words();
  const auto& w = words[c];
  int n = static_cast<int>(w.size());
  std::vector<std::string> arc1, arc2;
  for (int p = e1.pos + 1; p < e2.pos; ++p) arc1.push_back(w[p]);
  for (int p = (e2.pos + 1) % n; p != e1.pos; p = (p + 1) % n) arc2.push_back(w[p]);
  words[c] = std::move(arc1);
  words.insert(words.begin() + c + 1, std::move(arc2));
  return ChordDiagram::from_words(words);
}

/// Z2-linear combination of diagrams, accumulated by canonical key.
class LinearCombination {
 public:
  LinearCombination() = default;
  explicit LinearCombination(const ChordDiagram& d) { toggle(d); }

  /// Adds one diagram mod 2.
  void toggle(const ChordDiagram& d) {
    CanonicalKey key = canonical_key(d);
    auto it = terms_.find(key);
    if (it == terms_.end())
      terms_.emplace(std::move(key), d);
    else
      terms_.erase(it);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, d] : other.terms_) {
      auto it = terms_.find(key);
      if (it == terms_.end())
        terms_.emplace(key, d);
      else
        terms_.erase(it);
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a += b;
    return a;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Terms keyed by canonical form, one representative diagram each.
  const std::map<CanonicalKey, ChordDiagram>& terms() const { return terms_; }

 private:
  std::map<CanonicalKey, ChordDiagram> terms_;
};

/// One application of the smoothing map: every diagram with coefficient 1
/// contributes the split smoothing at each of its even self-chords.
/// Parity is recomputed on the diagram at hand, never inherited.
inline LinearCombination delta(const LinearCombination& x) {
  LinearCombination out;
  for (const auto& [key, d] : x.terms())
    for (const std::string& label : even_self_chords(d))
      out.toggle(split_smooth(d, label));
  return out;
}

inline LinearCombination delta_n(const ChordDiagram& d, int n) {
  if (n < 0) throw Error("iteration depth must be nonnegative");
  LinearCombination x(d);
  for (int i = 0; i < n; ++i) x = delta(x);
  return x;
}

struct GammaGraph {
  int vertices = 0;
  std::set<std::pair<int, int>> edges;  // (i, j) with i < j

  bool connected() const {
    if (vertices <= 1) return true;
    std::vector<int> root(vertices);
    for (int i = 0; i < vertices; ++i) root[i] = i;
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (auto [a, b] : edges) root[find(a)] = find(b);
    for (int i = 1; i < vertices; ++i)
      if (find(i) != find(0)) return false;
    return true;
  }

  std::string to_dot() const {
    std::ostringstream out;
    out << "graph gamma {\n";
    for (int i = 0; i < vertices; ++i) out << "  " << i << ";\n";
    for (auto [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
  }
};

/// Vertices are the circles; an edge joins two circles sharing an odd
/// number of chords.  No loops, no multiplicities.
inline GammaGraph gamma_graph(const ChordDiagram& d) {
  GammaGraph g;
  g.vertices = d.num_circles();
  auto w = crossing_weights(d);
  for (int i = 0; i < g.vertices; ++i)
    for (int j = i + 1; j < g.vertices; ++j)
      if (w[i][j] % 2 == 1) g.edges.insert({i, j});
  return g;
}

/// 0 when gamma is disconnected, otherwise its edge count.
inline int j_number(const ChordDiagram& d) {
  GammaGraph g = gamma_graph(d);
  if (!g.connected()) return 0;
  return static_cast<int>(g.edges.size());
}

/// Finitely supported Z2 vector over basis symbols a_1, a_2, ...
struct InvariantValue {
  std::set<int> support;

  void toggle(int j) {
    auto it = support.find(j);
    if (it == support.end())
      support.insert(j);
    else
      support.erase(it);
  }

  bool is_zero() const { return support.empty(); }
  friend auto operator<=>(const InvariantValue&, const InvariantValue&) = default;

  friend InvariantValue operator+(InvariantValue a, const InvariantValue& b) {
    for (int j : b.support) a.toggle(j);
    return a;
  }

  std::string to_string() const {
    if (support.empty()) return "0";
    std::string out;
    for (int j : support) {
      if (!out.empty()) out += " + ";
      out += "a_" + std::to_string(j);
    }
    return out;
  }
};

/// a_{j(d)} when j(d) != 0, zero otherwise.
inline InvariantValue i_of_diagram(const ChordDiagram& d) {
  InvariantValue v;
  int j = j_number(d);
  if (j != 0) v.toggle(j);
  return v;
}

inline InvariantValue i_of(const LinearCombination& x) {
  InvariantValue v;
  for (const auto& [key, d] : x.terms()) v = v + i_of_diagram(d);
  return v;
}

/// The cobordism obstruction of a one-circle diagram at depth n.
inline InvariantValue i_n(const ChordDiagram& d, int n) {
  if (d.num_circles() != 1)
    throw Error("invariant is defined for one-circle diagrams");
  return i_of(delta_n(d, n));
}

/// i_n for every n in 1..max_n, sharing one delta chain.
inline std::vector<InvariantValue> i_series(const ChordDiagram& d, int max_n) {
  if (d.num_circles() != 1)
    throw Error("invariant is defined for one-circle diagrams");
  std::vector<InvariantValue> out;
  LinearCombination x(d);
  for (int n = 1; n <= max_n; ++n) {
    x = delta(x);
    out.push_back(i_of(x));
  }
  return out;
}

}  // namespace freeknot
