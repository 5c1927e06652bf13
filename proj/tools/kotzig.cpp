// Copyright 2026 The kotzig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kotzig/boolean_forms.hpp"
#include "kotzig/capacity.hpp"
#include "kotzig/classify.hpp"
#include "kotzig/clique_atlas.hpp"
#include "kotzig/events.hpp"
#include "kotzig/game.hpp"
#include "kotzig/orbit.hpp"
#include "kotzig/report.hpp"

namespace {

using namespace kotzig;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

void apply_thread_override() {
  if (const char* t = std::getenv("THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
}

Graph connected_graph(const std::string& text) {
  Graph g = parse_graph(text);
  if (!g.connected()) throw std::invalid_argument("graph " + text + " is not connected");
  return g;
}

int run_classify(int n, const std::string& format, bool allow_long) {
  write_rows(std::cout, classify(n, allow_long), parse_table_format(format));
  return 0;
}

int run_report(const std::string& graph, const std::string& sections) {
  const Report r = build_report(connected_graph(graph), ReportSections::parse(sections));
  std::cout << r.text;
  return r.verified ? 0 : kExitVerification;
}

int run_orbit(const std::string& graph, bool json) {
  const OrbitReport orbit = kotzig_orbit(connected_graph(graph));
  if (json) {
    nlohmann::json members = nlohmann::json::array();
    for (int m = 0; m < orbit.orbit_size; ++m) {
      const auto& mem = orbit.members[static_cast<std::size_t>(m)];
      members.push_back({{"canonical", format_graph(mem.canonical)},
                         {"witness", format_graph(mem.witness)},
                         {"pivots", orbit.pivot_path(m)},
                         {"beta", mem.beta}});
    }
    std::cout << nlohmann::json{{"orbit_size", orbit.orbit_size},
                                {"representative", format_graph(orbit.representative().canonical)},
                                {"beta_min", orbit.beta_min},
                                {"beta_max", orbit.beta_max},
                                {"members", members}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "orbit size " << orbit.orbit_size << ", representative "
            << format_graph(orbit.representative().canonical) << ", beta " << orbit.beta_min << "-"
            << orbit.beta_max << "\n";
  for (int m = 0; m < orbit.orbit_size; ++m) {
    const auto& mem = orbit.members[static_cast<std::size_t>(m)];
    std::cout << "  " << format_graph(mem.canonical) << "\tbeta " << mem.beta << "\tpivots";
    for (int v : orbit.pivot_path(m)) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

int run_hgraph(const std::string& graph, const std::string& out_path, std::string format) {
  const EventGraph h = build_H(parse_graph(graph));
  if (format.empty()) {
    format = "g6";
    if (out_path.ends_with(".tsv")) format = "tsv";
    if (out_path.ends_with(".adj")) format = "adjacency";
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "g6") {
    out << to_graph6(h) << "\n";
  } else if (format == "tsv") {
    write_vertex_table(out, h);
  } else if (format == "adjacency") {
    write_adjacency_list(out, h);
  } else {
    throw std::invalid_argument("unknown H format '" + format + "' (g6 | tsv | adjacency)");
  }
  return 0;
}

int run_beta(const std::string& graph, int cycle, int complete) {
  const int chosen = !graph.empty() + (cycle > 0) + (complete > 0);
  if (chosen != 1) throw std::invalid_argument("give exactly one of --graph, --cycle, --complete");
  Graph g = !graph.empty() ? parse_graph(graph) : cycle > 0 ? Graph::cycle(cycle) : Graph::complete(complete);
  bool ok = true;
  std::cout << "graph " << format_graph(g) << "\n";
  std::cout << "f_G = " << cubic_form(g).str() << "\n";
  if (g.size() <= 10) {
    const BetaCheck b = beta_equivalence_check(g);
    std::cout << "beta = " << b.beta << ", wt(f_G) = " << b.form_weight << ", signs "
              << (b.signs_match ? "match" : "MISMATCH") << "\n";
    ok = b.ok();
  } else {
    std::cout << "wt(f_G) = " << weight(cubic_form(g)) << "\n";
  }
  if (cycle > 0) {
    const std::int64_t r = cycle_beta(cycle), w = weight(cubic_form(g));
    std::cout << "recurrence " << r << (r == w ? " (agrees)" : " (DISAGREES)") << "\n";
    ok = ok && r == w;
  }
  if (complete > 0) {
    const std::int64_t b = beta_Kn_binomial(complete), w = weight(cubic_form(g));
    std::cout << "binomial sum " << b << (b == w ? " (agrees)" : " (DISAGREES)") << "\n";
    ok = ok && b == w;
  }
  return ok ? 0 : kExitVerification;
}

int run_capacity(const std::string& graph, const std::string& mode, const std::string& fixture) {
  if (!fixture.empty()) {
    std::ifstream in(fixture);
    if (!in) throw std::runtime_error("cannot read " + fixture);
    const Fixture fx = fixture_from_json(nlohmann::json::parse(in));
    const ProtocolVerdict v = verify_protocol(fx.family);
    const bool matches =
        v.orthogonality_ok == fx.expect_orthogonality && v.completeness_ok == fx.expect_completeness;
    nlohmann::json j = v.to_json();
    j["fixture"] = fx.family.name;
    j["matches_expectation"] = matches;
    std::cout << j.dump(2) << "\n";
    return matches ? 0 : kExitVerification;
  }
  const Graph g = connected_graph(graph);
  nlohmann::json j = {{"graph", format_graph(g)}, {"upper_bound", capacity_upper_bound(g)}};
  bool ok = true;
  for (AncillaMode m : {AncillaMode::PerPosition, AncillaMode::Shared}) {
    if (mode != "both" && parse_ancilla_mode(mode) != m) continue;
    const ProtocolVerdict v = verify_protocol(build_measurement_family(g, m));
    j["verdicts"][ancilla_mode_name(m)] = v.to_json();
    ok = ok && v.ok();
  }
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : kExitVerification;
}

int run_cliques(const std::string& graph) {
  const Graph g = connected_graph(graph);
  const CliqueBoundsReport r = clique_bounds_check(g);
  std::cout << r.to_json(build_H(g)).dump(2) << "\n";
  return r.bounds_hold() ? 0 : kExitVerification;
}

int run_game(const std::string& graph) {
  const Graph g = connected_graph(graph);
  const GraphGame game = GraphGame::from_graph(g);
  const ClassicalValue cv = classical_value(game);
  const QuantumCheck q = verify_quantum_perfect(game, g);
  std::cout << game.card();
  std::cout << "classical value " << cv.value.str() << "\n" << format_strategy(cv.witness);
  std::cout << "quantum value 1: " << (q.ok() ? "verified" : "FAILED: " + q.first_failure) << "\n";
  return q.ok() ? 0 : kExitVerification;
}

int run_conjecture(int n, bool json) {
  const ConjectureReport r = check_connectedness_conjecture(n);
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    for (const auto& row : r.rows) {
      std::cout << row.representative << "\t" << row.components << (row.star_orbit ? "\tstar" : "")
                << (row.consistent ? "" : "\tINCONSISTENT") << "\n";
    }
    std::cout << (r.holds() ? "holds" : "violated by " + r.witness()) << " for n = " << n << "\n";
  }
  return r.holds() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph states, exclusivity graphs and their parameters"};
  app.require_subcommand(1);

  int n = 0;
  std::string graph, out = "tsv", sections = "all", path, format, mode = "both", fixture;
  bool allow_long = false, json = false;
  int cycle = 0, complete = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Table of LC orbits of connected graphs");
  classify_cmd->add_option("--n", n, "vertex count")->required();
  classify_cmd->add_option("--out", out, "tsv | text | json");
  classify_cmd->add_flag("--long", allow_long, "allow n > 6");

  auto* report_cmd = app.add_subcommand("report", "Full report on one graph");
  report_cmd->add_option("--graph", graph, "edge list, e.g. 12,23")->required();
  report_cmd->add_option("--sections", sections, "comma list of sections or 'all'");

  auto* orbit_cmd = app.add_subcommand("orbit", "Local-complementation orbit");
  orbit_cmd->add_option("--graph", graph)->required();
  orbit_cmd->add_flag("--json", json);

  auto* hgraph_cmd = app.add_subcommand("hgraph", "Export the exclusivity graph H(G)");
  hgraph_cmd->add_option("--graph", graph)->required();
  hgraph_cmd->add_option("--out", path, "output file (.g6, .tsv, .adj); stdout if omitted");
  hgraph_cmd->add_option("--format", format, "g6 | tsv | adjacency");

  auto* beta_cmd = app.add_subcommand("beta", "Negative-sign count and its cubic form");
  beta_cmd->add_option("--graph", graph);
  beta_cmd->add_option("--cycle", cycle);
  beta_cmd->add_option("--complete", complete);

  auto* capacity_cmd = app.add_subcommand("capacity-verify", "Exact check of the measurement protocol");
  capacity_cmd->add_option("--graph", graph);
  capacity_cmd->add_option("--ancilla-dim", mode, "per-position | shared | both");
  capacity_cmd->add_option("--fixture", fixture, "verify a JSON measurement family instead");

  auto* cliques_cmd = app.add_subcommand("cliques", "Maximal clique bounds of H(G) as JSON");
  cliques_cmd->add_option("--graph", graph)->required();

  auto* game_cmd = app.add_subcommand("game", "Classical and quantum value of the graph game");
  game_cmd->add_option("--graph", graph)->required();

  auto* conjecture_cmd = app.add_subcommand("conjecture", "Connectedness of H over all orbits");
  conjecture_cmd->add_option("--n", n)->required();
  conjecture_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  apply_thread_override();

  try {
    if (*classify_cmd) return run_classify(n, out, allow_long);
    if (*report_cmd) return run_report(graph, sections);
    if (*orbit_cmd) return run_orbit(graph, json);
    if (*hgraph_cmd) return run_hgraph(graph, path, format);
    if (*beta_cmd) return run_beta(graph, cycle, complete);
    if (*capacity_cmd) {
      if (graph.empty() == fixture.empty()) throw std::invalid_argument("give exactly one of --graph, --fixture");
      return run_capacity(graph, mode, fixture);
    }
    if (*cliques_cmd) return run_cliques(graph);
    if (*game_cmd) return run_game(graph);
    if (*conjecture_cmd) return run_conjecture(n, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
