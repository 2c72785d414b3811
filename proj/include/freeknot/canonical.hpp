#pragma once

// Canonical form of a chord diagram under its full symmetry group:
// rotation and reflection of every circle, permutation of circles, and
// relabeling of chords.  Two diagrams have equal keys iff they are
// isomorphic.  Computed as the lexicographic minimum over the group by a
// depth-first search with prefix pruning; fine for desk-scale diagrams.

#include <string>
#include <vector>

#include "freeknot/diagram.hpp"

namespace freeknot {

struct CanonicalKey {
  std::string word;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

// Token stream: chord labels are 1,2,... by first occurrence, 0 ends a
// circle.  Empty circles therefore sort first.
class Canonicalizer {
 public:
  explicit Canonicalizer(const ChordDiagram& d) : d_(d) {
    int nc = d.num_circles();
    readings_.resize(nc);
    for (int c = 0; c < nc; ++c) {
      int n = d.circle_size(c);
      if (n == 0) {
        readings_[c].push_back({});
        continue;
      }
      std::vector<int> base(n);
      for (int p = 0; p < n; ++p) base[p] = d.chord_at(Slot{c, p});
      for (int rot = 0; rot < n; ++rot) {
        for (int dir : {1, -1}) {
          std::vector<int> seq(n);
          for (int i = 0; i < n; ++i) seq[i] = base[((rot + dir * i) % n + n) % n];
          bool seen = false;
          for (const auto& r : readings_[c])
            if (r == seq) { seen = true; break; }
          if (!seen) readings_[c].push_back(std::move(seq));
        }
      }
    }
    used_.assign(nc, false);
    relabel_.assign(d.num_chords(), 0);
    cur_.reserve(d.total_slots() + nc);
  }

  std::vector<int> run() {
    dfs(0, false);
    return best_;
  }

 private:
  void dfs(int depth, bool already_less) {
    if (depth == d_.num_circles()) {
      if (best_.empty() || already_less) best_ = cur_;
      return;
    }
    for (int c = 0; c < d_.num_circles(); ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      for (const auto& seq : readings_[c]) {
        size_t mark = cur_.size();
        std::vector<int> assigned;
        bool less = already_less;
        bool greater = false;
        auto push = [&](int tok) {
          if (!less && !best_.empty()) {
            int ref = best_[cur_.size()];
            if (tok > ref) { greater = true; return; }
            if (tok < ref) less = true;
          }
          cur_.push_back(tok);
        };
        for (int id : seq) {
          if (relabel_[id] == 0) {
            relabel_[id] = next_label_++;
            assigned.push_back(id);
          }
          push(relabel_[id]);
          if (greater) break;
        }
        if (!greater) push(0);
        if (!greater) dfs(depth + 1, less);
        cur_.resize(mark);
        for (int id : assigned) relabel_[id] = 0;
        next_label_ -= static_cast<int>(assigned.size());
      }
      used_[c] = false;
    }
  }

  const ChordDiagram& d_;
  std::vector<std::vector<std::vector<int>>> readings_;
  std::vector<bool> used_;
  std::vector<int> relabel_;
  int next_label_ = 1;
  std::vector<int> cur_;
  std::vector<int> best_;
};

inline std::string stream_to_word(const std::vector<int>& stream) {
  std::string out;
  bool circle_empty = true;
  bool first_circle = true;
  for (int tok : stream) {
    if (tok == 0) {
      if (circle_empty) {
        if (!first_circle) out += " | ";
        out += "-";
      }
      first_circle = false;
      circle_empty = true;
      continue;
    }
    if (circle_empty) {
      if (!first_circle) out += " | ";
    } else {
      out += ' ';
    }
    out += std::to_string(tok);
    circle_empty = false;
  }
  return out;
}

}  // namespace detail

inline CanonicalKey canonical_key(const ChordDiagram& d) {
  if (d.num_circles() == 0) return CanonicalKey{""};
  detail::Canonicalizer canon(d);
  return CanonicalKey{detail::stream_to_word(canon.run())};
}

}  // namespace freeknot
