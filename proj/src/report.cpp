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

#include "kotzig/report.hpp"

#include <sstream>

#include "kotzig/boolean_forms.hpp"
#include "kotzig/capacity.hpp"
#include "kotzig/clique_atlas.hpp"
#include "kotzig/events.hpp"
#include "kotzig/game.hpp"
#include "kotzig/orbit.hpp"

namespace kotzig {

const std::vector<std::string>& ReportSections::names() {
  static const std::vector<std::string> kNames = {"stabilizers", "h",        "alpha",    "sandwich",
                                                  "beta",        "cliques",  "capacity", "game"};
  return kNames;
}

ReportSections ReportSections::parse(const std::string& text) {
  if (text == "all" || text.empty()) return {};
  ReportSections s{false, false, false, false, false, false, false, false};
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name == "stabilizers") s.stabilizers = true;
    else if (name == "h") s.hgraph = true;
    else if (name == "alpha") s.alpha = true;
    else if (name == "sandwich") s.sandwich = true;
    else if (name == "beta") s.beta = true;
    else if (name == "cliques") s.cliques = true;
    else if (name == "capacity") s.capacity = true;
    else if (name == "game") s.game = true;
    else throw std::invalid_argument("unknown report section '" + name + "'");
  }
  return s;
}

std::string format_strategy(const Strategy& t) {
  std::string out;
  for (int k = 1; k <= t.n; ++k) {
    out += "  player " + std::to_string(k) + ":";
    for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
      out += std::string(" ") + letter_char(l) + (t.output(k, l) > 0 ? "+1" : "-1");
    }
    out += "\n";
  }
  return out;
}

Report build_report(const Graph& g, const ReportSections& sections) {
  if (!g.connected()) throw std::invalid_argument("report needs a connected graph");
  const int n = g.size();
  const std::int64_t messages = (std::int64_t{1} << n) - 1;
  const EventGraph h = build_H(g);
  const auto& group = h.group();
  Report rep;
  std::ostringstream out;
  out << "graph " << format_graph(g) << "  (n = " << n << ", " << g.edge_count() << " edges)\n";

  if (sections.stabilizers) {
    out << "\n[stabilizers]\n";
    for (std::size_t j = 0; j < group.size(); ++j) {
      const auto& s = group[j];
      out << "  s" << j + 1 << " = " << s.str() << "  weight " << s.weight() << "\n";
    }
    out << "  beta(G) = " << beta(group) << ", d_H = " << min_distance(group) << "\n";
  }

  if (sections.hgraph) {
    out << "\n[H(G)]\n";
    out << "  vertices " << h.vertex_count() << ", edges " << h.edge_count() << "\n";
    out << "  components " << components(h).str() << "\n";
    out << "  degrees " << degree_sequence(h) << "\n";
  }

  if (sections.alpha) {
    out << "\n[independence number]\n";
    const AlphaResult a = alpha_by_strategies(group);
    out << "  alpha = " << a.alpha << " of " << messages << "\n";
    if (a.alpha == messages) {
      out << "  n = 2 exception: alpha reaches 2^n - 1, no classical/quantum gap\n";
    }
    out << "  witness strategy:\n" << format_strategy(a.witness);
    if (h.vertex_count() <= kDefaultMisVertexLimit) {
      const MisResult m = alpha_mis_bb(h);
      out << "  branch-and-bound alpha = " << m.alpha << (m.alpha == a.alpha ? " (agrees)" : " (DISAGREES)") << "\n";
      rep.verified = rep.verified && m.alpha == a.alpha;
    }
  }

  if (sections.sandwich) {
    out << "\n[sandwich certificate]\n";
    const SandwichCertificate c = sandwich_certificate(g);
    out << "  lower (sum of event probabilities) = " << c.lower_value.str() << "\n";
    out << "  upper (clique partition size) = " << c.upper_value << "\n";
    out << "  zero-probability events " << c.zero_probability_events << "\n";
    out << "  certificate " << (c.valid ? "valid" : "REJECTED") << "\n";
    rep.verified = rep.verified && c.valid;
  }

  if (sections.beta) {
    out << "\n[beta]\n";
    const BetaCheck b = beta_equivalence_check(g);
    const OrbitReport orbit = kotzig_orbit(g);
    out << "  beta = " << b.beta << ", orbit range " << orbit.beta_min << "-" << orbit.beta_max << "\n";
    out << "  f_G = " << cubic_form(g).str() << "\n";
    out << "  wt(f_G) = " << b.form_weight << ", signs " << (b.signs_match ? "match" : "MISMATCH") << "\n";
    out << "  alpha lower bound 2^n - 1 - beta_min = " << messages - orbit.beta_min << "\n";
    rep.verified = rep.verified && b.ok();
  }

  if (sections.cliques) {
    out << "\n[cliques]\n";
    const CliqueBoundsReport c = clique_bounds_check(g);
    out << "  bounds [" << c.lower_bound << ", " << c.upper_bound << "], d_H = " << c.d_H << "\n";
    if (c.enumerated) {
      out << "  " << c.maximal_clique_count << " maximal cliques, sizes " << c.observed_min << ".."
          << c.observed_max << "\n";
    }
    out << "  lower bound " << attainment_name(c.lower) << ", upper bound " << attainment_name(c.upper) << "\n";
    for (const auto& v : c.violations) out << "  VIOLATION " << v << "\n";
    rep.verified = rep.verified && c.bounds_hold();
  }

  if (sections.capacity) {
    out << "\n[capacity]\n";
    out << "  upper bound 2^n - 1 = " << capacity_upper_bound(g) << "\n";
    if (n <= kMaxProtocolQubits) {
      for (AncillaMode mode : {AncillaMode::PerPosition, AncillaMode::Shared}) {
        const ProtocolVerdict v = verify_protocol(build_measurement_family(g, mode));
        std::size_t incomplete = 0;
        for (const auto& f : v.failures) incomplete += f.kind == "completeness";
        out << "  " << ancilla_mode_name(mode) << " ancilla (dimension " << v.dimension << "): orthogonality "
            << (v.orthogonality_ok ? "ok" : "FAILS") << ", completeness "
            << (v.completeness_ok ? "ok" : "fails for " + std::to_string(incomplete) + " messages") << "\n";
      }
    }
  }

  if (sections.game) {
    out << "\n[game]\n";
    const GraphGame game = GraphGame::from_graph(g);
    std::istringstream card(game.card());
    for (std::string line; std::getline(card, line);) out << "  " << line << "\n";
    const ClassicalValue cv = classical_value(game);
    const QuantumCheck q = verify_quantum_perfect(game, g);
    out << "  classical value " << cv.value.str() << ", quantum value 1 ("
        << (q.ok() ? "verified" : "FAILED: " + q.first_failure) << ")\n";
    rep.verified = rep.verified && q.ok();
  }

  rep.text = out.str();
  return rep;
}

}  // namespace kotzig
