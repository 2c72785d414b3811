#pragma once

// JSON shapes used by the command line tool.
//
//   slot            [circle, pos]
//   gap             [circle, gap]           gap g lies between slot g and g+1
//   MoveSite        {"kind": "R1|R2|R3", "chords": [...], "slot_pairs": [[slot, slot], ...]}
//   configuration   {"segments": [[gap_before, gap_after], ...],
//                    "beta": [...], "alpha_pairs": [[a, b], ...], "gamma": [...]}
//   combination     [{"diagram": word, "count_mod2": 1}, ...]
//   invariant       {"support": [j, ...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "freeknot/invariant.hpp"
#include "freeknot/moves.hpp"

namespace freeknot {

using jsonv = nlohmann::json;

inline jsonv slot_to_json(const Slot& s) { return jsonv::array({s.circle, s.pos}); }

inline Slot slot_from_json(const jsonv& j) {
  if (!j.is_array() || j.size() != 2) throw Error("slot must be [circle, pos]");
  return Slot{j[0].get<int>(), j[1].get<int>()};
}

inline jsonv site_to_json(const MoveSite& site) {
  jsonv pairs = jsonv::array();
  for (const auto& [a, b] : site.slot_pairs)
    pairs.push_back(jsonv::array({slot_to_json(a), slot_to_json(b)}));
  return jsonv{{"kind", to_string(site.kind)}, {"chords", site.chords}, {"slot_pairs", pairs}};
}

inline MoveSite site_from_json(const jsonv& j) {
  MoveSite site;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "R1")
    site.kind = MoveKind::R1;
  else if (kind == "R2")
    site.kind = MoveKind::R2;
  else if (kind == "R3")
    site.kind = MoveKind::R3;
  else
    throw Error("unknown move kind '" + kind + "'");
  site.chords = j.at("chords").get<std::vector<std::string>>();
  for (const auto& p : j.at("slot_pairs"))
    site.slot_pairs.push_back({slot_from_json(p.at(0)), slot_from_json(p.at(1))});
  return site;
}

inline jsonv config_to_json(const SymmetricConfiguration& cfg) {
  jsonv segments = jsonv::array();
  for (const auto& seg : cfg.segments)
    segments.push_back(jsonv::array({seg.gap_before, seg.gap_after}));
  jsonv alphas = jsonv::array();
  for (const auto& [a, b] : cfg.alpha_pairs) alphas.push_back(jsonv::array({a, b}));
  return jsonv{{"segments", segments},
               {"beta", cfg.beta},
               {"alpha_pairs", alphas},
               {"gamma", cfg.gamma}};
}

inline std::vector<Segment> segments_from_json(const jsonv& j) {
  std::vector<Segment> out;
  for (const auto& seg : j.at("segments"))
    out.push_back(Segment{seg.at(0).get<int>(), seg.at(1).get<int>()});
  return out;
}

inline jsonv combination_to_json(const LinearCombination& x) {
  jsonv out = jsonv::array();
  for (const auto& [key, d] : x.terms())
    out.push_back(jsonv{{"diagram", key.word}, {"count_mod2", 1}});
  return out;
}

inline jsonv invariant_to_json(const InvariantValue& v) {
  return jsonv{{"support", std::vector<int>(v.support.begin(), v.support.end())}};
}

}  // namespace freeknot
