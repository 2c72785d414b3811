#pragma once

// Independent component-count oracle.  The number of circles produced by
// smoothing a set of chords of a one-circle diagram can be read off the
// interlacement matrix: it is the GF(2) kernel dimension of the submatrix
// on the smoothed chords, plus one.  trace_components counts the same thing
// directly by following the reconnected strands, so the two routes check
// each other.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "freeknot/diagram.hpp"

namespace freeknot {

/// Symmetric 0/1 matrix over GF(2), rows as bitmasks.  Indexed by a subset
/// of chord labels.
struct Gf2Matrix {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> rows;

  int size() const { return static_cast<int>(rows.size()); }

  /// Interlacement submatrix of a one-circle diagram on the given chords.
  static Gf2Matrix interlacement(const ChordDiagram& d,
                                 const std::set<std::string>& subset) {
    if (d.num_circles() != 1) throw Error("interlacement oracle requires one circle");
    Gf2Matrix m;
    for (const std::string& label : subset) {
      if (!d.has_chord(label)) throw Error("unknown chord label '" + label + "'");
      m.labels.push_back(label);
    }
    int n = static_cast<int>(m.labels.size());
    if (n > 64) throw Error("interlacement oracle limited to 64 chords");
    m.rows.assign(n, 0);
    std::vector<int> ids;
    for (const auto& label : m.labels) ids.push_back(d.chord_id(label));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (linked(d, ids[i], ids[j])) {
          m.rows[i] |= std::uint64_t{1} << j;
          m.rows[j] |= std::uint64_t{1} << i;
        }
    return m;
  }
};

/// Kernel dimension over GF(2): size minus rank, by elimination.
inline int gf2_nullity(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows = m.rows;
  int n = m.size();
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (rows[r] >> col & 1) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return n - rank;
}

/// Circle count after simultaneously smoothing every chord of the subset
/// with the resolution that splits when applied to a single chord alone.
/// Counted by orbits of the successor map on inter-slot gaps: the strand
/// leaving gap g-1 into slot g either continues to gap g (chord kept) or
/// jumps to the gap after the partner slot (chord smoothed).
inline int trace_components(const ChordDiagram& d, const std::set<std::string>& subset) {
  if (d.num_circles() != 1) throw Error("component trace requires one circle");
  for (const auto& label : subset)
    if (!d.has_chord(label)) throw Error("unknown chord label '" + label + "'");
  int n = d.circle_size(0);
  if (n == 0) return 1;

  std::vector<int> partner(n), smoothed(n, 0);
  for (int id = 0; id < d.num_chords(); ++id) {
    auto [a, b] = d.chord_ends(id);
    partner[a.pos] = b.pos;
    partner[b.pos] = a.pos;
    if (subset.count(d.chord_label(id))) smoothed[a.pos] = smoothed[b.pos] = 1;
  }

  // succ[g] = gap reached from gap g through slot g+1
  std::vector<int> succ(n);
  for (int s = 0; s < n; ++s) {
    int g = (s - 1 + n) % n;
    succ[g] = smoothed[s] ? partner[s] : s;
  }

  std::vector<char> seen(n, 0);
  int orbits = 0;
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    ++orbits;
    for (int x = g; !seen[x]; x = succ[x]) seen[x] = 1;
  }
  return orbits;
}

/// The interlacement route to the same count: GF(2) nullity plus one.
inline int nullity_components(const ChordDiagram& d, const std::set<std::string>& subset) {
  return gf2_nullity(Gf2Matrix::interlacement(d, subset)) + 1;
}

}  // namespace freeknot
