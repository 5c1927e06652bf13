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

#include "kotzig/orbit.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "kotzig/pauli.hpp"

namespace kotzig {

const OrbitMember& OrbitReport::representative() const {
  return *std::min_element(members.begin(), members.end(),
                           [](const auto& a, const auto& b) { return a.code < b.code; });
}

std::vector<int> OrbitReport::pivot_path(int index) const {
  std::vector<int> path;
  for (int at = index; members.at(static_cast<std::size_t>(at)).parent >= 0;
       at = members[static_cast<std::size_t>(at)].parent) {
    path.push_back(members[static_cast<std::size_t>(at)].pivot);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool OrbitReport::contains(std::uint64_t canonical) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const auto& m) { return m.code == canonical; });
}

OrbitReport kotzig_orbit(const Graph& g) {
  if (g.size() > kMaxCanonicalVertices) {
    throw CapabilityError("orbit enumeration supports n <= " +
                          std::to_string(kMaxCanonicalVertices));
  }
  if (!g.connected()) {
    throw std::invalid_argument("orbit enumeration requires a connected graph; got " +
                                format_graph(g));
  }
  OrbitReport report;
  std::unordered_map<std::uint64_t, int> index;
  std::deque<int> queue;

  auto admit = [&](const Graph& witness, int parent, int pivot) {
    const std::uint64_t code = canonical_code(witness);
    if (index.contains(code)) return;
    OrbitMember m;
    m.code = code;
    m.canonical = graph_from_code(witness.size(), code);
    m.witness = witness;
    m.parent = parent;
    m.pivot = pivot;
    m.beta = beta(enumerate_group(witness));
    const int id = static_cast<int>(report.members.size());
    index.emplace(code, id);
    report.members.push_back(std::move(m));
    queue.push_back(id);
  };

  admit(g, -1, 0);
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Graph witness = report.members[static_cast<std::size_t>(id)].witness;
    for (int v = 1; v <= witness.size(); ++v) admit(local_complement(witness, v), id, v);
  }

  report.orbit_size = static_cast<int>(report.members.size());
  auto [lo, hi] = std::minmax_element(report.members.begin(), report.members.end(),
                                      [](const auto& a, const auto& b) { return a.beta < b.beta; });
  report.beta_min = lo->beta;
  report.beta_max = hi->beta;
  return report;
}

namespace {

// True iff no relabeling yields a smaller adjacency code; exits on the first
// smaller code found.
bool is_canonical(const Graph& g, std::uint64_t code) {
  const int n = g.size();
  std::array<int, kMaxCanonicalVertices> pos{};
  std::iota(pos.begin(), pos.begin() + n, 0);
  const auto& rows = g.rows();
  const int total = n * (n - 1) / 2;
  while (std::next_permutation(pos.begin(), pos.begin() + n)) {
    std::uint64_t prefix = 0;
    int used = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++used) prefix = (prefix << 1) | ((rows[pos[i]] >> pos[j]) & 1);
      const std::uint64_t target = code >> (total - used);
      if (prefix < target) return false;
      if (prefix > target) break;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> connected_graph_classes(int n) {
  if (n < 1 || n > kMaxCanonicalVertices) {
    throw CapabilityError("graph class enumeration supports 1 <= n <= " +
                          std::to_string(kMaxCanonicalVertices));
  }
  const int pairs = n * (n - 1) / 2;
  const std::int64_t limit = std::int64_t{1} << pairs;
  std::vector<std::uint64_t> out;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t c = 0; c < limit; ++c) {
      const auto code = static_cast<std::uint64_t>(c);
      Graph g = graph_from_code(n, code);
      if (g.connected() && is_canonical(g, code)) local.push_back(code);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitReport> connected_orbits(int n) {
  std::vector<OrbitReport> orbits;
  std::unordered_set<std::uint64_t> covered;
  for (std::uint64_t code : connected_graph_classes(n)) {
    if (covered.contains(code)) continue;
    OrbitReport orbit = kotzig_orbit(graph_from_code(n, code));
    for (const auto& m : orbit.members) covered.insert(m.code);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return a.representative().code < b.representative().code;
  });
  return orbits;
}

}  // namespace kotzig
