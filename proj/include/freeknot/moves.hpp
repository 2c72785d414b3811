#pragma once

// Reidemeister moves on Gauss diagrams and elementary cobordisms.
//
// R1 removes/adds a chord whose endpoints are adjacent.  R2 removes/adds a
// pair of chords whose four endpoints form two adjacent slot pairs, in
// parallel (a b ... b a) or crossed (a b ... a b) arrangement.  R3 finds
// three chords meeting in three disjoint adjacent slot pairs with the
// triangle pattern (a,b)(b,c)(c,a) and transposes each pair.
//
// An even symmetric configuration is a set of disjoint circle segments,
// each with an even number of chord endpoints, closed under the chord
// matching, whose per-segment reflection maps the chord set onto itself.
// Deleting all its chords (or the inverse insertion) is an elementary
// cobordism; chords split into fixed ones (beta), swapped pairs
// (alpha/alpha-bar), and untouched ones (gamma).

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"

namespace freeknot {

enum class MoveKind { R1, R2, R3 };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

struct MoveSite {
  MoveKind kind = MoveKind::R1;
  std::vector<std::string> chords;                 // sorted labels
  std::vector<std::pair<Slot, Slot>> slot_pairs;   // adjacent pairs, sorted

  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

class MoveError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::pair<Slot, Slot> ordered(Slot a, Slot b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

inline bool slots_adjacent(const ChordDiagram& d, Slot a, Slot b) {
  if (a.circle != b.circle || a == b) return false;
  return d.next_slot(a) == b || d.next_slot(b) == a;
}

/// All unordered pairs of consecutive slots, over every circle.
inline std::set<std::pair<Slot, Slot>> adjacent_slot_pairs(const ChordDiagram& d) {
  std::set<std::pair<Slot, Slot>> out;
  for (int c = 0; c < d.num_circles(); ++c) {
    int n = d.circle_size(c);
    if (n < 2) continue;
    for (int p = 0; p < n; ++p)
      out.insert(ordered(Slot{c, p}, Slot{c, (p + 1) % n}));
  }
  return out;
}

inline ChordDiagram remove_chords(const ChordDiagram& d, const std::set<std::string>& labels) {
  auto words = d.to_words();
  for (auto& w : words) {
    std::vector<std::string> keep;
    for (auto& label : w)
      if (!labels.count(label)) keep.push_back(label);
    w = std::move(keep);
  }
  return ChordDiagram::from_words(words);
}

inline void check_gap(const ChordDiagram& d, int circle, int gap) {
  if (circle < 0 || circle >= d.num_circles()) throw MoveError("circle index out of range");
  int n = d.circle_size(circle);
  int gaps = n == 0 ? 1 : n;
  if (gap < 0 || gap >= gaps) throw MoveError("gap index out of range");
}

inline void check_fresh_label(const ChordDiagram& d, const std::string& label) {
  if (!is_label_token(label)) throw MoveError("malformed label '" + label + "'");
  if (d.has_chord(label)) throw MoveError("label '" + label + "' already in use");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// R1

inline std::vector<MoveSite> find_r1_sites(const ChordDiagram& d) {
  std::vector<MoveSite> out;
  std::set<int> seen;
  for (const auto& [a, b] : detail::adjacent_slot_pairs(d)) {
    int id = d.chord_at(a);
    if (id != d.chord_at(b) || seen.count(id)) continue;
    seen.insert(id);
    out.push_back(MoveSite{MoveKind::R1, {d.chord_label(id)}, {{a, b}}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ChordDiagram apply_r1(const ChordDiagram& d, const MoveSite& site) {
  if (site.kind != MoveKind::R1 || site.chords.size() != 1)
    throw MoveError("not an R1 site");
  if (!d.has_chord(site.chords[0])) throw MoveError("unknown chord in R1 site");
  int id = d.chord_id(site.chords[0]);
  auto [a, b] = d.chord_ends(id);
  if (!detail::slots_adjacent(d, a, b)) throw MoveError("chord endpoints are not adjacent");
  return detail::remove_chords(d, {site.chords[0]});
}

/// Inserts a new loop chord: two adjacent slots right after the given gap.
inline ChordDiagram apply_r1_insert(const ChordDiagram& d, int circle, int gap,
                                    const std::string& label) {
  detail::check_gap(d, circle, gap);
  detail::check_fresh_label(d, label);
  auto words = d.to_words();
  auto& w = words[circle];
  int at = w.empty() ? 0 : gap + 1;
  w.insert(w.begin() + at, {label, label});
  return ChordDiagram::from_words(words);
}

// ---------------------------------------------------------------------------
// R2

inline std::vector<MoveSite> find_r2_sites(const ChordDiagram& d) {
  using Pair = std::pair<Slot, Slot>;
  std::map<std::pair<int, int>, std::vector<Pair>> by_chords;
  for (const auto& [a, b] : detail::adjacent_slot_pairs(d)) {
    int ia = d.chord_at(a), ib = d.chord_at(b);
    if (ia == ib) continue;
    by_chords[{std::min(ia, ib), std::max(ia, ib)}].push_back({a, b});
  }
  std::vector<MoveSite> out;
  for (auto& [chords, pairs] : by_chords) {
    std::sort(pairs.begin(), pairs.end());
    bool found = false;
    for (size_t i = 0; i < pairs.size() && !found; ++i) {
      for (size_t j = i + 1; j < pairs.size() && !found; ++j) {
        const auto& [a1, b1] = pairs[i];
        const auto& [a2, b2] = pairs[j];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
        // two disjoint adjacent pairs on two distinct chords use all four
        // endpoints; that is the bigon
        std::vector<std::string> labels = {d.chord_label(chords.first),
                                           d.chord_label(chords.second)};
        std::sort(labels.begin(), labels.end());
        out.push_back(MoveSite{MoveKind::R2, labels, {pairs[i], pairs[j]}});
        found = true;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ChordDiagram apply_r2(const ChordDiagram& d, const MoveSite& site) {
  if (site.kind != MoveKind::R2 || site.chords.size() != 2 || site.slot_pairs.size() != 2)
    throw MoveError("not an R2 site");
  for (const auto& label : site.chords)
    if (!d.has_chord(label)) throw MoveError("unknown chord in R2 site");
  int ia = d.chord_id(site.chords[0]);
  int ib = d.chord_id(site.chords[1]);
  if (ia == ib) throw MoveError("R2 site needs two distinct chords");
  std::set<Slot> used;
  for (const auto& [a, b] : site.slot_pairs) {
    if (!detail::slots_adjacent(d, a, b)) throw MoveError("R2 slots are not adjacent");
    std::set<int> pair_chords = {d.chord_at(a), d.chord_at(b)};
    if (pair_chords != std::set<int>{ia, ib}) throw MoveError("R2 slots do not match chords");
    used.insert(a);
    used.insert(b);
  }
  if (used.size() != 4) throw MoveError("R2 slot pairs overlap");
  return detail::remove_chords(d, {site.chords[0], site.chords[1]});
}

struct GapRef {
  int circle = 0;
  int gap = 0;
};

/// Inserts a bigon: slots "a b" after gap1 and, after gap2, "b a" when
/// parallel or "a b" when crossed.  Equal gaps produce the contiguous bigon.
inline ChordDiagram apply_r2_insert(const ChordDiagram& d, GapRef gap1, GapRef gap2,
                                    const std::string& label_a, const std::string& label_b,
                                    bool crossed = false) {
  detail::check_gap(d, gap1.circle, gap1.gap);
  detail::check_gap(d, gap2.circle, gap2.gap);
  detail::check_fresh_label(d, label_a);
  detail::check_fresh_label(d, label_b);
  if (label_a == label_b) throw MoveError("bigon labels must differ");

  std::vector<std::string> block1 = {label_a, label_b};
  std::vector<std::string> block2 = crossed ? std::vector<std::string>{label_a, label_b}
                                            : std::vector<std::string>{label_b, label_a};
  auto words = d.to_words();
  auto insert_at = [&](int circle, int gap, const std::vector<std::string>& block) {
    auto& w = words[circle];
    int at = w.empty() ? 0 : gap + 1;
    w.insert(w.begin() + at, block.begin(), block.end());
  };
  if (gap1.circle == gap2.circle && gap1.gap == gap2.gap) {
    insert_at(gap1.circle, gap1.gap, crossed
                  ? std::vector<std::string>{label_a, label_b, label_a, label_b}
                  : std::vector<std::string>{label_a, label_b, label_b, label_a});
  } else if (gap1.circle == gap2.circle) {
    // splice the higher position first so the lower gap index stays valid
    if (gap1.gap > gap2.gap) {
      insert_at(gap1.circle, gap1.gap, block1);
      insert_at(gap2.circle, gap2.gap, block2);
    } else {
      insert_at(gap2.circle, gap2.gap, block2);
      insert_at(gap1.circle, gap1.gap, block1);
    }
  } else {
    insert_at(gap1.circle, gap1.gap, block1);
    insert_at(gap2.circle, gap2.gap, block2);
  }
  return ChordDiagram::from_words(words);
}

// ---------------------------------------------------------------------------
// R3

inline std::vector<MoveSite> find_r3_sites(const ChordDiagram& d) {
  using Pair = std::pair<Slot, Slot>;
  std::vector<Pair> pairs;
  for (const auto& p : detail::adjacent_slot_pairs(d)) {
    if (d.chord_at(p.first) != d.chord_at(p.second)) pairs.push_back(p);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<MoveSite> out;
  int n = static_cast<int>(pairs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::set<Slot> slots;
        for (const auto& p : {pairs[i], pairs[j], pairs[k]}) {
          slots.insert(p.first);
          slots.insert(p.second);
        }
        if (slots.size() != 6) continue;
        // triangle pattern: three distinct chords, each in exactly two pairs
        std::map<int, int> count;
        std::set<std::pair<int, int>> chord_pairs;
        for (const auto& p : {pairs[i], pairs[j], pairs[k]}) {
          int a = d.chord_at(p.first), b = d.chord_at(p.second);
          count[a]++;
          count[b]++;
          chord_pairs.insert({std::min(a, b), std::max(a, b)});
        }
        if (count.size() != 3 || chord_pairs.size() != 3) continue;
        bool ok = true;
        for (auto [id, c] : count)
          if (c != 2) ok = false;
        if (!ok) continue;
        std::vector<std::string> labels;
        for (auto [id, c] : count) labels.push_back(d.chord_label(id));
        std::sort(labels.begin(), labels.end());
        out.push_back(MoveSite{MoveKind::R3, labels, {pairs[i], pairs[j], pairs[k]}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Transposes the two slots of each adjacent pair; an involution.
inline ChordDiagram apply_r3(const ChordDiagram& d, const MoveSite& site) {
  if (site.kind != MoveKind::R3 || site.chords.size() != 3 || site.slot_pairs.size() != 3)
    throw MoveError("not an R3 site");
  std::set<int> wanted;
  for (const auto& label : site.chords) {
    if (!d.has_chord(label)) throw MoveError("unknown chord in R3 site");
    wanted.insert(d.chord_id(label));
  }
  if (wanted.size() != 3) throw MoveError("R3 site needs three distinct chords");
  std::set<Slot> slots;
  std::map<int, int> count;
  std::set<std::pair<int, int>> chord_pairs;
  for (const auto& [a, b] : site.slot_pairs) {
    if (!detail::slots_adjacent(d, a, b)) throw MoveError("R3 slots are not adjacent");
    int ia = d.chord_at(a), ib = d.chord_at(b);
    if (ia == ib || !wanted.count(ia) || !wanted.count(ib))
      throw MoveError("R3 slots do not match chords");
    slots.insert(a);
    slots.insert(b);
    count[ia]++;
    count[ib]++;
    chord_pairs.insert({std::min(ia, ib), std::max(ia, ib)});
  }
  if (slots.size() != 6 || chord_pairs.size() != 3) throw MoveError("invalid R3 pattern");
  for (auto [id, c] : count)
    if (c != 2) throw MoveError("invalid R3 pattern");

  auto words = d.to_words();
  for (const auto& [a, b] : site.slot_pairs)
    std::swap(words[a.circle][a.pos], words[b.circle][b.pos]);
  return ChordDiagram::from_words(words);
}

// ---------------------------------------------------------------------------
// Even symmetric configurations

/// Circle segment given by its two boundary gaps; gap g sits between slot g
/// and slot g+1.  The arc covers slots gap_before+1 .. gap_after (cyclic);
/// equal gaps mean the whole circle.
struct Segment {
  int gap_before = 0;
  int gap_after = 0;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

class ConfigurationError : public Error {
 public:
  ConfigurationError(const std::string& msg, std::vector<int> conds)
      : Error(msg), conditions(std::move(conds)) {}
  std::vector<int> conditions;
};

struct SymmetricConfiguration {
  std::vector<Segment> segments;
  std::vector<int> involution;  // slot -> slot on the single circle
  std::vector<std::string> gamma;
  std::vector<std::string> beta;
  std::vector<std::pair<std::string, std::string>> alpha_pairs;

  /// Chords removed by the elementary cobordism: beta and both alphas.
  std::vector<std::string> deleted_chords() const {
    std::vector<std::string> out = beta;
    for (const auto& [a, b] : alpha_pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline std::vector<int> arc_slots(int n, const Segment& seg) {
  int len = ((seg.gap_after - seg.gap_before) % n + n) % n;
  if (len == 0) len = n;
  std::vector<int> out(len);
  for (int i = 0; i < len; ++i) out[i] = (seg.gap_before + 1 + i) % n;
  return out;
}

}  // namespace detail

/// Checks the segment conditions and classifies the chords.  Violations are
/// reported by condition number: 3 = odd endpoint count in a segment,
/// 4 = chord crossing a segment boundary, 5 = reflection does not preserve
/// the chord set.
inline SymmetricConfiguration verify_symmetric_configuration(
    const ChordDiagram& d, const std::vector<Segment>& segments) {
  if (d.num_circles() != 1)
    throw Error("symmetric configurations are defined on one-circle diagrams");
  int n = d.circle_size(0);
  for (const auto& seg : segments) {
    if (n == 0) throw Error("no gaps on an empty circle");
    if (seg.gap_before < 0 || seg.gap_before >= n || seg.gap_after < 0 || seg.gap_after >= n)
      throw Error("segment gap index out of range");
  }

  SymmetricConfiguration out;
  out.segments = segments;
  std::sort(out.segments.begin(), out.segments.end());
  out.involution.resize(n);
  for (int s = 0; s < n; ++s) out.involution[s] = s;

  std::vector<char> covered(n, 0);
  std::set<int> violated;
  for (const auto& seg : segments) {
    auto arc = detail::arc_slots(n, seg);
    for (size_t i = 0; i < arc.size(); ++i) {
      if (covered[arc[i]]) throw Error("segments overlap");
      covered[arc[i]] = 1;
      out.involution[arc[i]] = arc[arc.size() - 1 - i];
    }
    if (arc.size() % 2 != 0) violated.insert(3);
  }

  for (int id = 0; id < d.num_chords(); ++id) {
    auto [a, b] = d.chord_ends(id);
    if (covered[a.pos] != covered[b.pos]) violated.insert(4);
  }

  // i(D) = D: the reflected image of every chord must again be a chord
  for (int id = 0; id < d.num_chords(); ++id) {
    auto [a, b] = d.chord_ends(id);
    Slot ia{0, out.involution[a.pos]};
    Slot ib{0, out.involution[b.pos]};
    int image = d.chord_at(ia);
    if (d.other_end(image, ia) != ib) violated.insert(5);
  }

  if (!violated.empty()) {
    std::string msg = "violated condition(s):";
    for (int c : violated) msg += " " + std::to_string(c);
    throw ConfigurationError(msg, {violated.begin(), violated.end()});
  }

  for (int id = 0; id < d.num_chords(); ++id) {
    auto [a, b] = d.chord_ends(id);
    if (!covered[a.pos] && !covered[b.pos]) {
      out.gamma.push_back(d.chord_label(id));
      continue;
    }
    int image = d.chord_at(Slot{0, out.involution[a.pos]});
    if (image == id) {
      out.beta.push_back(d.chord_label(id));
    } else if (id < image) {
      std::string la = d.chord_label(id), lb = d.chord_label(image);
      if (lb < la) std::swap(la, lb);
      out.alpha_pairs.push_back({la, lb});
    }
  }
  std::sort(out.gamma.begin(), out.gamma.end());
  std::sort(out.beta.begin(), out.beta.end());
  std::sort(out.alpha_pairs.begin(), out.alpha_pairs.end());
  return out;
}

/// Enumerates all segment placements over the inter-slot gaps with at most
/// max_segments segments and returns the valid configurations, one per
/// distinct deleted-chord set.
inline std::vector<SymmetricConfiguration> find_symmetric_configurations(
    const ChordDiagram& d, int max_segments = 2) {
  if (d.num_circles() != 1)
    throw Error("symmetric configurations are defined on one-circle diagrams");
  if (max_segments < 1) throw Error("max_segments must be at least 1");
  int n = d.circle_size(0);
  std::vector<SymmetricConfiguration> found;
  std::set<std::vector<std::string>> seen;
  auto try_segments = [&](const std::vector<Segment>& segs) {
    try {
      SymmetricConfiguration cfg = verify_symmetric_configuration(d, segs);
      if (seen.insert(cfg.deleted_chords()).second) found.push_back(std::move(cfg));
    } catch (const Error&) {
    }
  };

  std::vector<std::pair<int, int>> arcs;  // (start slot, length)
  for (int start = 0; start < n; ++start)
    for (int len = 2; len <= n; len += 2) arcs.push_back({start, len});
  auto to_segment = [&](std::pair<int, int> arc) {
    return Segment{(arc.first - 1 + n) % n, (arc.first + arc.second - 1) % n};
  };
  auto overlap = [&](std::pair<int, int> x, std::pair<int, int> y) {
    for (int i = 0; i < y.second; ++i) {
      int slot = (y.first + i) % n;
      if (((slot - x.first) % n + n) % n < x.second) return true;
    }
    return false;
  };

  for (const auto& arc : arcs) try_segments({to_segment(arc)});
  if (max_segments >= 2) {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j)
        if (!overlap(arcs[i], arcs[j]))
          try_segments({to_segment(arcs[i]), to_segment(arcs[j])});
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    auto dx = x.deleted_chords(), dy = y.deleted_chords();
    if (dx.size() != dy.size()) return dx.size() < dy.size();
    if (dx != dy) return dx < dy;
    return x.segments < y.segments;
  });
  return found;
}

/// Deletes every beta and alpha chord of a verified configuration.
inline ChordDiagram apply_elementary_cobordism(const ChordDiagram& d,
                                               const SymmetricConfiguration& c) {
  SymmetricConfiguration fresh = verify_symmetric_configuration(d, c.segments);
  auto del = fresh.deleted_chords();
  return detail::remove_chords(d, {del.begin(), del.end()});
}

/// Splices a palindromic block (a matching on 2t slots invariant under
/// s -> 2t-1-s) into the circle at the given gap, with fresh labels.  The
/// block then forms a single-segment even symmetric configuration of the
/// result, and deleting it recovers the input.
inline ChordDiagram insert_configuration(const ChordDiagram& d,
                                         const std::vector<std::pair<int, int>>& block,
                                         int circle, int gap) {
  detail::check_gap(d, circle, gap);
  int t = static_cast<int>(block.size());
  if (t == 0) throw MoveError("empty configuration block");
  int width = 2 * t;
  std::vector<int> mate(width, -1);
  for (auto [u, v] : block) {
    if (u < 0 || v < 0 || u >= width || v >= width || u == v)
      throw MoveError("block is not a matching on 2t slots");
    if (mate[u] != -1 || mate[v] != -1) throw MoveError("block is not a matching on 2t slots");
    mate[u] = v;
    mate[v] = u;
  }
  for (int s = 0; s < width; ++s) {
    if (mate[s] < 0) throw MoveError("block is not a matching on 2t slots");
    if (mate[width - 1 - s] != width - 1 - mate[s])
      throw MoveError("non-palindromic block");
  }

  // fresh labels: smallest unused decimal strings, one per block chord in
  // order of first slot
  std::vector<std::string> slot_label(width);
  int next = 1;
  for (int s = 0; s < width; ++s) {
    if (!slot_label[s].empty()) continue;
    std::string label;
    while (true) {
      label = std::to_string(next++);
      if (!d.has_chord(label)) break;
    }
    slot_label[s] = slot_label[mate[s]] = label;
  }

  auto words = d.to_words();
  auto& w = words[circle];
  int at = w.empty() ? 0 : gap + 1;
  w.insert(w.begin() + at, slot_label.begin(), slot_label.end());
  return ChordDiagram::from_words(words);
}

/// Breadth-first search over R3 moves and elementary-cobordism deletions,
/// bounded by a node-expansion budget.  Returns a diagram of minimum chord
/// count reachable; insertions are never explored.
inline ChordDiagram shrink(const ChordDiagram& d, int budget) {
  if (d.num_circles() != 1) throw Error("shrink operates on one-circle diagrams");
  ChordDiagram best = d;
  CanonicalKey best_key = canonical_key(d);
  std::set<CanonicalKey> visited = {best_key};
  std::deque<ChordDiagram> frontier = {d};
  int expansions = 0;
  while (!frontier.empty() && expansions < budget) {
    ChordDiagram cur = std::move(frontier.front());
    frontier.pop_front();
    ++expansions;
    std::vector<ChordDiagram> next;
    for (const auto& site : find_r3_sites(cur)) next.push_back(apply_r3(cur, site));
    for (const auto& cfg : find_symmetric_configurations(cur, 2))
      next.push_back(apply_elementary_cobordism(cur, cfg));
    for (auto& nd : next) {
      CanonicalKey key = canonical_key(nd);
      if (!visited.insert(key).second) continue;
      if (nd.num_chords() < best.num_chords() ||
          (nd.num_chords() == best.num_chords() && key < best_key)) {
        best = nd;
        best_key = key;
      }
      frontier.push_back(std::move(nd));
    }
  }
  return best;
}

}  // namespace freeknot
