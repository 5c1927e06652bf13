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

#ifndef KOTZIG_ORBIT_HPP
#define KOTZIG_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "kotzig/graph.hpp"

namespace kotzig {

/// One isomorphism class of a local-complementation orbit.
struct OrbitMember {
  std::uint64_t code = 0;  // canonical adjacency code
  Graph canonical;
  /// A labeled graph in this class, reached from the seed by the LC moves
  /// recorded through `parent` / `pivot`.
  Graph witness;
  int parent = -1;  // index of the member the witness was derived from
  int pivot = 0;    // LC vertex applied to the parent's witness
  int beta = 0;
};

struct OrbitReport {
  std::vector<OrbitMember> members;  // members[0] holds the seed
  int orbit_size = 0;
  int beta_min = 0;
  int beta_max = 0;

  /// Member whose canonical code is smallest.
  const OrbitMember& representative() const;
  /// LC pivots leading from the seed to members[index].witness, in order.
  std::vector<int> pivot_path(int index) const;
  bool contains(std::uint64_t canonical) const;
};

/// Breadth-first closure under local complementation, deduplicated by
/// canonical form. Rejects disconnected graphs and n > kMaxCanonicalVertices.
OrbitReport kotzig_orbit(const Graph& g);

/// Every LC orbit of connected n-vertex graphs, sorted by the canonical
/// code of each orbit's representative.
std::vector<OrbitReport> connected_orbits(int n);

/// Canonical codes of all connected n-vertex graphs up to isomorphism,
/// ascending.
std::vector<std::uint64_t> connected_graph_classes(int n);

}  // namespace kotzig

#endif  // KOTZIG_ORBIT_HPP
