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

#ifndef KOTZIG_CLASSIFY_HPP
#define KOTZIG_CLASSIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "kotzig/orbit.hpp"

namespace kotzig {

struct ClassificationRow {
  int n = 0;
  std::string representative;  // edge list of the least canonical member
  int orbit_size = 0;
  std::size_t vertex_count = 0;
  std::string components;
  int alpha = 0;
  std::string beta_range;  // "min-max"
  std::string degree_sequence;

  nlohmann::json to_json() const;
  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

/// Largest n classified without the long-running opt-in.
inline constexpr int kDefaultMaxClassifyVertices = 6;

ClassificationRow classify_orbit(const OrbitReport& orbit);

/// One row per LC orbit of connected n-vertex graphs, ordered by the
/// canonical code of the representative.
std::vector<ClassificationRow> classify(int n, bool allow_long = false);

enum class TableFormat { Tsv, Text, Json };
TableFormat parse_table_format(const std::string& text);
void write_rows(std::ostream& out, const std::vector<ClassificationRow>& rows, TableFormat format);

struct ConjectureRow {
  std::string representative;
  int orbit_size = 0;
  bool star_orbit = false;
  std::string components;
  std::size_t component_count = 0;
  bool consistent = false;
};

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureRow> rows;
  bool holds() const;
  std::string witness() const;  // first inconsistent orbit, empty when none
  nlohmann::json to_json() const;
};

/// H(G) is connected for every orbit except the star's, which splits into
/// three components at n = 2 and two for n >= 3.
ConjectureReport check_connectedness_conjecture(int n);

}  // namespace kotzig

#endif  // KOTZIG_CLASSIFY_HPP
