#pragma once

// Multi-circle Gauss diagrams (chord diagrams) for free knots and links.
//
// A diagram is a list of circles, each carrying a cyclic sequence of endpoint
// slots, together with a perfect matching of the slots into labeled chords.
// Text form: chord labels in slot order, circles separated by '|', an empty
// circle written as '-'.  Example: "1 2 1 2", "a b | b a", "- | -".

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace freeknot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Position of one chord endpoint: circle index + slot index on that circle.
struct Slot {
  int circle = 0;
  int pos = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

class ChordDiagram {
 public:
  ChordDiagram() = default;

  // circles_of_labels[c] lists the chord labels in slot order; an empty
  // vector is an endpointless circle.  Every label must occur exactly twice
  // in the whole input.
  static ChordDiagram from_words(
      const std::vector<std::vector<std::string>>& circles_of_labels) {
    ChordDiagram d;
    for (int c = 0; c < static_cast<int>(circles_of_labels.size()); ++c) {
      std::vector<int> circle;
      for (int p = 0; p < static_cast<int>(circles_of_labels[c].size()); ++p) {
        const std::string& label = circles_of_labels[c][p];
        auto it = d.id_by_label_.find(label);
        int id;
        if (it == d.id_by_label_.end()) {
          id = static_cast<int>(d.labels_.size());
          d.labels_.push_back(label);
          d.id_by_label_.emplace(label, id);
          d.ends_.push_back({Slot{c, p}, Slot{-1, -1}});
          d.end_count_.push_back(1);
        } else {
          id = it->second;
          if (d.end_count_[id] == 2)
            throw ParseError("label '" + label + "' occurs more than twice");
          d.ends_[id][1] = Slot{c, p};
          d.end_count_[id] = 2;
        }
        circle.push_back(id);
      }
      d.circles_.push_back(std::move(circle));
    }
    for (int id = 0; id < static_cast<int>(d.labels_.size()); ++id) {
      if (d.end_count_[id] != 2)
        throw ParseError("label '" + d.labels_[id] + "' occurs once, expected twice");
    }
    return d;
  }

  int num_circles() const { return static_cast<int>(circles_.size()); }
  int num_chords() const { return static_cast<int>(labels_.size()); }
  int circle_size(int c) const { return static_cast<int>(circles_.at(c).size()); }
  int total_slots() const { return 2 * num_chords(); }

  int chord_at(Slot s) const { return circles_.at(s.circle).at(s.pos); }
  const std::string& chord_label(int id) const { return labels_.at(id); }

  bool has_chord(const std::string& label) const {
    return id_by_label_.count(label) != 0;
  }

  int chord_id(const std::string& label) const {
    auto it = id_by_label_.find(label);
    if (it == id_by_label_.end()) throw Error("unknown chord label '" + label + "'");
    return it->second;
  }

  // Both endpoints, ordered by (circle, pos).
  std::pair<Slot, Slot> chord_ends(int id) const {
    auto e = ends_.at(id);
    if (e[1] < e[0]) std::swap(e[0], e[1]);
    return {e[0], e[1]};
  }

  bool is_self_chord(int id) const {
    return ends_.at(id)[0].circle == ends_.at(id)[1].circle;
  }

  Slot other_end(int id, Slot s) const {
    const auto& e = ends_.at(id);
    return (e[0] == s) ? e[1] : e[0];
  }

  Slot next_slot(Slot s) const {
    int n = circle_size(s.circle);
    return Slot{s.circle, (s.pos + 1) % n};
  }

  Slot prev_slot(Slot s) const {
    int n = circle_size(s.circle);
    return Slot{s.circle, (s.pos - 1 + n) % n};
  }

  /// Chord labels in first-occurrence order.
  const std::vector<std::string>& chord_labels() const { return labels_; }

  /// Chord labels sorted by label string.
  std::vector<std::string> sorted_chord_labels() const {
    std::vector<std::string> out = labels_;
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Self-chord ids of one circle, in slot order of first endpoint.
  std::vector<int> self_chords_of_circle(int c) const {
    std::vector<int> out;
    for (int p = 0; p < circle_size(c); ++p) {
      int id = circles_[c][p];
      auto [a, b] = chord_ends(id);
      if (a.circle == c && b.circle == c && a.pos == p) out.push_back(id);
    }
    return out;
  }

  std::vector<std::vector<std::string>> to_words() const {
    std::vector<std::vector<std::string>> out(circles_.size());
    for (int c = 0; c < num_circles(); ++c)
      for (int id : circles_[c]) out[c].push_back(labels_[id]);
    return out;
  }

 private:
  std::vector<std::vector<int>> circles_;       // chord id occupying each slot
  std::vector<std::string> labels_;             // by chord id
  std::vector<std::array<Slot, 2>> ends_;       // by chord id
  std::vector<int> end_count_;                  // construction bookkeeping
  std::unordered_map<std::string, int> id_by_label_;
};

namespace detail {

inline bool is_label_token(std::string_view tok) {
  if (tok.empty()) return false;
  for (char ch : tok)
    if (!std::isalnum(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace detail

inline ChordDiagram parse_gauss_words(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
  if (tokens.empty()) throw ParseError("empty input");

  std::vector<std::vector<std::string>> sections(1);
  for (auto& tok : tokens) {
    if (tok == "|")
      sections.emplace_back();
    else
      sections.back().push_back(std::move(tok));
  }

  std::vector<std::vector<std::string>> circles;
  for (auto& sec : sections) {
    if (sec.empty()) throw ParseError("empty circle section; write '-' for an empty circle");
    if (sec.size() == 1 && sec[0] == "-") {
      circles.emplace_back();
      continue;
    }
    for (auto& tok : sec)
      if (!detail::is_label_token(tok))
        throw ParseError("malformed token '" + tok + "'");
    circles.push_back(std::move(sec));
  }
  return ChordDiagram::from_words(circles);
}

inline std::string serialize(const ChordDiagram& d) {
  std::ostringstream out;
  auto words = d.to_words();
  for (size_t c = 0; c < words.size(); ++c) {
    if (c) out << " | ";
    if (words[c].empty()) {
      out << "-";
      continue;
    }
    for (size_t p = 0; p < words[c].size(); ++p) {
      if (p) out << ' ';
      out << words[c][p];
    }
  }
  return out.str();
}

/// Two self-chords of the same circle are linked when their endpoints
/// alternate around that circle.
inline bool linked(const ChordDiagram& d, int a, int b) {
  if (a == b) return false;
  auto [a1, a2] = d.chord_ends(a);
  auto [b1, b2] = d.chord_ends(b);
  if (a1.circle != a2.circle || b1.circle != b2.circle || a1.circle != b1.circle)
    return false;
  bool in1 = a1.pos < b1.pos && b1.pos < a2.pos;
  bool in2 = a1.pos < b2.pos && b2.pos < a2.pos;
  return in1 != in2;
}

struct InterlacementMatrix {
  std::vector<std::string> chords;          // label-sorted self-chords of the circle
  std::vector<std::vector<int>> m;          // symmetric 0/1, zero diagonal

  int size() const { return static_cast<int>(chords.size()); }
};

/// Interlacement of the self-chords of one circle; mixed chords are excluded.
inline InterlacementMatrix self_interlacement(const ChordDiagram& d, int circle) {
  if (circle < 0 || circle >= d.num_circles()) throw Error("circle index out of range");
  std::vector<int> ids = d.self_chords_of_circle(circle);
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    return d.chord_label(x) < d.chord_label(y);
  });
  InterlacementMatrix out;
  int n = static_cast<int>(ids.size());
  out.m.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) out.chords.push_back(d.chord_label(ids[i]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.m[i][j] = out.m[j][i] = linked(d, ids[i], ids[j]) ? 1 : 0;
  return out;
}

/// Parity of a self-chord: even iff it is linked with an even number of
/// self-chords of its own circle.
inline bool is_even_chord(const ChordDiagram& d, const std::string& label) {
  int id = d.chord_id(label);
  if (!d.is_self_chord(id)) throw Error("parity undefined for mixed chord '" + label + "'");
  int circle = d.chord_ends(id).first.circle;
  int count = 0;
  for (int other : d.self_chords_of_circle(circle))
    if (other != id && linked(d, id, other)) ++count;
  return count % 2 == 0;
}

/// All even self-chords of the diagram, label-sorted.
inline std::vector<std::string> even_self_chords(const ChordDiagram& d) {
  std::vector<std::string> out;
  for (const std::string& label : d.sorted_chord_labels()) {
    int id = d.chord_id(label);
    if (d.is_self_chord(id) && is_even_chord(d, label)) out.push_back(label);
  }
  return out;
}

/// Symmetric matrix over circle indices: off-diagonal (i,j) counts mixed
/// chords between circles i and j, diagonal counts self-chords of circle i.
inline std::vector<std::vector<int>> crossing_weights(const ChordDiagram& d) {
  int k = d.num_circles();
  std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
  for (int id = 0; id < d.num_chords(); ++id) {
    auto [a, b] = d.chord_ends(id);
    if (a.circle == b.circle) {
      w[a.circle][a.circle] += 1;
    } else {
      w[a.circle][b.circle] += 1;
      w[b.circle][a.circle] += 1;
    }
  }
  return w;
}

}  // namespace freeknot
