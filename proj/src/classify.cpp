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

#include "kotzig/classify.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "kotzig/events.hpp"
#include "kotzig/parameters.hpp"

namespace kotzig {

nlohmann::json ClassificationRow::to_json() const {
  return {{"n", n},
          {"representative", representative},
          {"orbit_size", orbit_size},
          {"vertex_count", vertex_count},
          {"components", components},
          {"alpha", alpha},
          {"beta_range", beta_range},
          {"degree_sequence", degree_sequence}};
}

ClassificationRow classify_orbit(const OrbitReport& orbit) {
  const OrbitMember& rep = orbit.representative();
  const EventGraph h = build_H(rep.canonical);
  ClassificationRow row;
  row.n = rep.canonical.size();
  row.representative = format_graph(rep.canonical);
  row.orbit_size = orbit.orbit_size;
  row.vertex_count = h.vertex_count();
  row.components = components(h).str();
  row.alpha = alpha_by_strategies(h.group()).alpha;
  row.beta_range = std::to_string(orbit.beta_min) + "-" + std::to_string(orbit.beta_max);
  row.degree_sequence = degree_sequence(h);
  return row;
}

std::vector<ClassificationRow> classify(int n, bool allow_long) {
  if (n < 2) throw std::invalid_argument("classification needs n >= 2");
  if (n > kDefaultMaxClassifyVertices && !allow_long) {
    throw CapabilityError("n > " + std::to_string(kDefaultMaxClassifyVertices) +
                          " is long-running; pass the long-running flag");
  }
  std::vector<ClassificationRow> rows;
  for (const auto& orbit : connected_orbits(n)) rows.push_back(classify_orbit(orbit));
  return rows;
}

TableFormat parse_table_format(const std::string& text) {
  if (text == "tsv") return TableFormat::Tsv;
  if (text == "text") return TableFormat::Text;
  if (text == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format '" + text + "' (tsv | text | json)");
}

void write_rows(std::ostream& out, const std::vector<ClassificationRow>& rows, TableFormat format) {
  static const char* kHeader[] = {"n", "G", "|G^L|", "|V^H|", "lambda_H", "alpha", "beta", "D_H"};
  const auto cells = [](const ClassificationRow& r) {
    return std::vector<std::string>{std::to_string(r.n),        r.representative,
                                    std::to_string(r.orbit_size), std::to_string(r.vertex_count),
                                    r.components,               std::to_string(r.alpha),
                                    r.beta_range,               r.degree_sequence};
  };
  if (format == TableFormat::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rows) a.push_back(r.to_json());
    out << a.dump(2) << "\n";
    return;
  }
  if (format == TableFormat::Tsv) {
    for (std::size_t k = 0; k < 8; ++k) out << (k ? "\t" : "") << kHeader[k];
    out << "\n";
    for (const auto& r : rows) {
      const auto c = cells(r);
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "\t" : "") << c[k];
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(8);
  for (std::size_t k = 0; k < 8; ++k) width[k] = std::string(kHeader[k]).size();
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t k = 0; k < 7; ++k) width[k] = std::max(width[k], c[k].size());
  }
  const auto line = [&](const std::vector<std::string>& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << "  ";
      if (k + 1 < c.size()) {
        out << std::left << std::setw(static_cast<int>(width[k])) << c[k];
      } else {
        out << c[k];
      }
    }
    out << "\n";
  };
  line({kHeader, kHeader + 8});
  for (const auto& r : rows) line(cells(r));
}

bool ConjectureReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.consistent; });
}

std::string ConjectureReport::witness() const {
  for (const auto& r : rows) {
    if (!r.consistent) return r.representative + " " + r.components;
  }
  return {};
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) {
    a.push_back({{"representative", r.representative},
                 {"orbit_size", r.orbit_size},
                 {"star_orbit", r.star_orbit},
                 {"components", r.components},
                 {"consistent", r.consistent}});
  }
  return {{"n", n}, {"holds", holds()}, {"witness", witness()}, {"orbits", a}};
}

ConjectureReport check_connectedness_conjecture(int n) {
  if (n < 2 || n > kDefaultMaxClassifyVertices) {
    throw CapabilityError("connectedness check supports 2 <= n <= " + std::to_string(kDefaultMaxClassifyVertices));
  }
  const std::uint64_t star = canonical_code(Graph::star(n));
  ConjectureReport rep;
  rep.n = n;
  for (const auto& orbit : connected_orbits(n)) {
    const EventGraph h = build_H(orbit.representative().canonical);
    const ComponentSummary cs = components(h);
    ConjectureRow row;
    row.representative = format_graph(orbit.representative().canonical);
    row.orbit_size = orbit.orbit_size;
    row.star_orbit = orbit.contains(star);
    row.components = cs.str();
    row.component_count = cs.count();
    const std::size_t expected = row.star_orbit ? (n == 2 ? 3 : 2) : 1;
    row.consistent = row.component_count == expected;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace kotzig
