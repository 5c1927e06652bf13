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

#ifndef KOTZIG_REPORT_HPP
#define KOTZIG_REPORT_HPP

#include <string>
#include <vector>

#include "kotzig/graph.hpp"
#include "kotzig/parameters.hpp"

namespace kotzig {

struct ReportSections {
  bool stabilizers = true;
  bool hgraph = true;
  bool alpha = true;
  bool sandwich = true;
  bool beta = true;
  bool cliques = true;
  bool capacity = true;
  bool game = true;

  static const std::vector<std::string>& names();
  /// Comma-separated subset of names(), or "all".
  static ReportSections parse(const std::string& text);
};

struct Report {
  std::string text;
  bool verified = true;  // every exact check in the selected sections passed
};

/// Plain-text report on one connected graph. Deterministic for fixed input.
Report build_report(const Graph& g, const ReportSections& sections = {});

std::string format_strategy(const Strategy& t);

}  // namespace kotzig

#endif  // KOTZIG_REPORT_HPP
