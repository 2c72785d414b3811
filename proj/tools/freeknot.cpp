// freeknot — compute cobordism obstructions of free knots from Gauss words.
//
// Subcommands: invariant, delta, moves (list|apply|shrink), random, survey,
// oracle.  Gauss words are passed as one quoted argument or via --file.
// Exit codes: invariant returns 0 when the obstruction is nonzero, 1 when it
// vanishes; every command returns 2 on input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"
#include "freeknot/generate.hpp"
#include "freeknot/invariant.hpp"
#include "freeknot/json_io.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/oracle.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string word;
  std::string file;
  int n = 3;
  std::uint64_t seed = 0;
  int chords = 6;
  int max_segments = 2;
  std::string format = "text";
  int budget = 256;
  std::string site_json;
  std::string config_json;
  std::string insert_json;
  std::string subset;
};

freeknot::ChordDiagram load_diagram(const RunConfig& cfg) {
  std::string text = cfg.word;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw freeknot::Error("cannot open file '" + cfg.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return freeknot::parse_gauss_words(text);
}

void add_word_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("word", cfg.word, "Gauss word, e.g. \"1 2 1 2\"");
  cmd->add_option("--file", cfg.file, "read the Gauss word from a file");
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
}

int cmd_invariant(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  freeknot::InvariantValue v = freeknot::i_n(d, cfg.n);
  if (cfg.format == "json")
    std::cout << freeknot::invariant_to_json(v).dump() << "\n";
  else
    std::cout << "I^(" << cfg.n << ") = " << v.to_string() << "\n";
  return v.is_zero() ? 1 : 0;
}

int cmd_delta(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  freeknot::LinearCombination x = freeknot::delta_n(d, cfg.n);
  if (cfg.format == "json") {
    json words = json::array();
    for (const auto& [key, term] : x.terms()) words.push_back(key.word);
    std::cout << words.dump() << "\n";
  } else {
    for (const auto& [key, term] : x.terms()) std::cout << key.word << "\n";
    if (x.is_zero()) std::cout << "0\n";
  }
  return 0;
}

int cmd_moves_list(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  auto r1 = freeknot::find_r1_sites(d);
  auto r2 = freeknot::find_r2_sites(d);
  auto r3 = freeknot::find_r3_sites(d);
  std::vector<freeknot::SymmetricConfiguration> cfgs;
  if (d.num_circles() == 1) cfgs = freeknot::find_symmetric_configurations(d, cfg.max_segments);

  if (cfg.format == "json") {
    json out;
    out["r1"] = json::array();
    out["r2"] = json::array();
    out["r3"] = json::array();
    out["configurations"] = json::array();
    for (const auto& s : r1) out["r1"].push_back(freeknot::site_to_json(s));
    for (const auto& s : r2) out["r2"].push_back(freeknot::site_to_json(s));
    for (const auto& s : r3) out["r3"].push_back(freeknot::site_to_json(s));
    for (const auto& c : cfgs) out["configurations"].push_back(freeknot::config_to_json(c));
    std::cout << out.dump() << "\n";
    return 0;
  }
  auto print_sites = [](const char* name, const std::vector<freeknot::MoveSite>& sites) {
    std::cout << name << " sites: " << sites.size() << "\n";
    for (const auto& s : sites) {
      std::cout << "  chords";
      for (const auto& c : s.chords) std::cout << " " << c;
      std::cout << "  slots";
      for (const auto& [a, b] : s.slot_pairs)
        std::cout << " (" << a.circle << "," << a.pos << ")-(" << b.circle << "," << b.pos << ")";
      std::cout << "\n";
    }
  };
  print_sites("R1", r1);
  print_sites("R2", r2);
  print_sites("R3", r3);
  std::cout << "configurations: " << cfgs.size() << "\n";
  for (const auto& c : cfgs) {
    std::cout << "  segments";
    for (const auto& seg : c.segments) std::cout << " [" << seg.gap_before << "," << seg.gap_after << "]";
    std::cout << "  deletes";
    for (const auto& label : c.deleted_chords()) std::cout << " " << label;
    std::cout << "\n";
  }
  return 0;
}

int cmd_moves_apply(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  std::optional<freeknot::ChordDiagram> result;
  if (!cfg.site_json.empty()) {
    freeknot::MoveSite site = freeknot::site_from_json(json::parse(cfg.site_json));
    switch (site.kind) {
      case freeknot::MoveKind::R1: result = freeknot::apply_r1(d, site); break;
      case freeknot::MoveKind::R2: result = freeknot::apply_r2(d, site); break;
      case freeknot::MoveKind::R3: result = freeknot::apply_r3(d, site); break;
    }
  } else if (!cfg.config_json.empty()) {
    auto segments = freeknot::segments_from_json(json::parse(cfg.config_json));
    auto config = freeknot::verify_symmetric_configuration(d, segments);
    result = freeknot::apply_elementary_cobordism(d, config);
  } else if (!cfg.insert_json.empty()) {
    json j = json::parse(cfg.insert_json);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "R1") {
      result = freeknot::apply_r1_insert(d, j.at("circle").get<int>(), j.at("gap").get<int>(),
                                         j.at("label").get<std::string>());
    } else if (kind == "R2") {
      auto g1 = j.at("gap1");
      auto g2 = j.at("gap2");
      auto labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != 2) throw freeknot::Error("R2 insert needs two labels");
      bool crossed = j.value("crossed", false);
      result = freeknot::apply_r2_insert(
          d, freeknot::GapRef{g1.at(0).get<int>(), g1.at(1).get<int>()},
          freeknot::GapRef{g2.at(0).get<int>(), g2.at(1).get<int>()}, labels[0], labels[1],
          crossed);
    } else if (kind == "COBORDISM") {
      std::vector<std::pair<int, int>> block;
      for (const auto& p : j.at("block")) block.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      result = freeknot::insert_configuration(d, block, j.at("circle").get<int>(),
                                              j.at("gap").get<int>());
    } else {
      throw freeknot::Error("unknown insert kind '" + kind + "'");
    }
  } else {
    throw freeknot::Error("apply needs --site, --config, or --insert");
  }
  if (cfg.format == "json")
    std::cout << json{{"diagram", freeknot::serialize(*result)}}.dump() << "\n";
  else
    std::cout << freeknot::serialize(*result) << "\n";
  return 0;
}

int cmd_moves_shrink(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  freeknot::ChordDiagram out = freeknot::shrink(d, cfg.budget);
  if (cfg.format == "json")
    std::cout << json{{"diagram", freeknot::serialize(out)},
                      {"chords", out.num_chords()}}
                     .dump()
              << "\n";
  else
    std::cout << freeknot::serialize(out) << "\n";
  return 0;
}

int cmd_random(const RunConfig& cfg) {
  freeknot::ChordDiagram d = freeknot::random_knot_diagram(cfg.chords, cfg.seed);
  if (cfg.format == "json")
    std::cout << json{{"diagram", freeknot::serialize(d)}}.dump() << "\n";
  else
    std::cout << freeknot::serialize(d) << "\n";
  return 0;
}

int cmd_survey(const RunConfig& cfg) {
  json rows = json::array();
  for (int m = 0; m <= cfg.chords; ++m) {
    for (const auto& d : freeknot::enumerate_knot_classes(m)) {
      auto series = freeknot::i_series(d, cfg.n);
      bool nonzero = false;
      for (const auto& v : series) nonzero = nonzero || !v.is_zero();
      if (!nonzero) continue;
      json invariants;
      for (int n = 1; n <= cfg.n; ++n)
        invariants[std::to_string(n)] =
            std::vector<int>(series[n - 1].support.begin(), series[n - 1].support.end());
      rows.push_back({{"diagram", freeknot::canonical_key(d).word}, {"invariants", invariants}});
    }
  }
  if (cfg.format == "json") {
    std::cout << rows.dump() << "\n";
    return 0;
  }
  if (rows.empty()) {
    std::cout << "no diagrams with <= " << cfg.chords << " chords have nonzero I^(n) for n <= "
              << cfg.n << "\n";
    return 0;
  }
  for (const auto& row : rows) {
    std::cout << row["diagram"].get<std::string>() << "  ";
    for (auto& [n, support] : row["invariants"].items()) {
      std::cout << " I^(" << n << ")=[";
      for (size_t i = 0; i < support.size(); ++i)
        std::cout << (i ? " " : "") << support[i].get<int>();
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  auto d = load_diagram(cfg);
  if (cfg.format == "dot") {
    std::cout << freeknot::gamma_graph(d).to_dot();
    return 0;
  }
  std::set<std::string> subset;
  if (!cfg.subset.empty()) {
    std::string item;
    std::istringstream in(cfg.subset);
    while (std::getline(in, item, ','))
      if (!item.empty()) subset.insert(item);
  }
  freeknot::GammaGraph g = freeknot::gamma_graph(d);
  json out;
  out["circles"] = d.num_circles();
  out["gamma_edges"] = json::array();
  for (auto [a, b] : g.edges) out["gamma_edges"].push_back(json::array({a, b}));
  out["j"] = freeknot::j_number(d);
  if (d.num_circles() == 1) {
    out["subset"] = std::vector<std::string>(subset.begin(), subset.end());
    out["trace_components"] = freeknot::trace_components(d, subset);
    out["nullity_components"] = freeknot::nullity_components(d, subset);
  }
  if (cfg.format == "json") {
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "circles: " << d.num_circles() << "\n";
  std::cout << "gamma edges:";
  for (auto [a, b] : g.edges) std::cout << " (" << a << "," << b << ")";
  std::cout << "\nj = " << out["j"].get<int>() << "\n";
  if (out.contains("trace_components")) {
    std::cout << "trace components:   " << out["trace_components"].get<int>() << "\n";
    std::cout << "nullity components: " << out["nullity_components"].get<int>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"cobordism obstructions of free knots from Gauss diagrams"};
  app.require_subcommand(1);

  auto* invariant = app.add_subcommand("invariant", "compute I^(n) of a one-circle diagram");
  add_word_options(invariant, cfg);
  invariant->add_option("--n", cfg.n, "iteration depth")->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format_option(invariant, cfg);

  auto* delta = app.add_subcommand("delta", "expand Delta^n as canonical Gauss words");
  add_word_options(delta, cfg);
  delta->add_option("--n", cfg.n, "iteration depth")->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format_option(delta, cfg);

  auto* moves = app.add_subcommand("moves", "Reidemeister moves and elementary cobordisms");
  moves->require_subcommand(1);
  auto* list = moves->add_subcommand("list", "list move sites and symmetric configurations");
  add_word_options(list, cfg);
  list->add_option("--max-segments", cfg.max_segments, "segment bound for the search")
      ->check(CLI::Range(1, 2))->capture_default_str();
  add_format_option(list, cfg);
  auto* apply = moves->add_subcommand("apply", "apply a move, configuration, or insertion");
  add_word_options(apply, cfg);
  apply->add_option("--site", cfg.site_json, "MoveSite JSON from 'moves list'");
  apply->add_option("--config", cfg.config_json, "configuration JSON (segments)");
  apply->add_option("--insert", cfg.insert_json, "insertion JSON (R1 | R2 | COBORDISM)");
  add_format_option(apply, cfg);
  auto* shrink = moves->add_subcommand("shrink", "search for a smaller cobordant diagram");
  add_word_options(shrink, cfg);
  shrink->add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format_option(shrink, cfg);

  auto* random = app.add_subcommand("random", "seeded random one-circle diagram");
  random->add_option("--chords", cfg.chords, "chord count")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  random->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  add_format_option(random, cfg);

  auto* survey = app.add_subcommand("survey", "hunt for nonzero invariants up to a chord bound");
  survey->add_option("--chords", cfg.chords, "max chord count")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  survey->add_option("--n", cfg.n, "max iteration depth")->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format_option(survey, cfg);

  auto* oracle = app.add_subcommand("oracle", "component counts and the gamma graph");
  add_word_options(oracle, cfg);
  oracle->add_option("--subset", cfg.subset, "comma-separated chord labels to smooth");
  add_format_option(oracle, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*invariant) return cmd_invariant(cfg);
    if (*delta) return cmd_delta(cfg);
    if (*moves) {
      if (*list) return cmd_moves_list(cfg);
      if (*apply) return cmd_moves_apply(cfg);
      if (*shrink) return cmd_moves_shrink(cfg);
    }
    if (*random) return cmd_random(cfg);
    if (*survey) return cmd_survey(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const freeknot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
