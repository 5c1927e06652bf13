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

#ifndef KOTZIG_LC_MAP_HPP
#define KOTZIG_LC_MAP_HPP

#include <vector>

#include "kotzig/events.hpp"
#include "kotzig/graph.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

/// Letter action of local complementation at `pivot`:
///   pivot:        X -> X, Z -> Y, Y -> -Z
///   neighbours:   Z -> Z, X -> Y, Y -> -X
/// Each Y inside {pivot} u N(pivot) contributes one sign flip.
struct LcLetterMap {
  int pivot = 0;
  Mask neighbourhood = 0;

  static LcLetterMap at(const Graph& g, int v) { return {v, g.neighbours(v)}; }

  Mask region() const noexcept { return bit(pivot - 1) | neighbourhood; }
  /// Y letters of s inside region(), i.e. the positions whose outcome flips.
  Mask flipped_positions(const PauliOperator& s) const noexcept { return s.x & s.z & region(); }
  PauliOperator apply(const PauliOperator& s) const;
};

PauliOperator transform_stabilizer(const PauliOperator& s, int v, const Graph& g);

/// Image of every vertex of H(G) in H(G^v) under the LC relabeling
/// (letters permuted, outcomes flipped where a Y changed letter), given as
/// (stabilizer index in S(G^v), outcome mask). Throws std::logic_error if a
/// transformed element is missing from S(G^v).
struct TransportedEvent {
  int stab_index = 0;
  Mask outcomes = 0;
};
std::vector<TransportedEvent> transport_events(const StabilizerGroup& from, const LcLetterMap& map,
                                               const StabilizerGroup& to);

/// {transform_stabilizer(s, v, G)} == S(G^v), signs included.
bool verify_group_transport(const Graph& g, int v);

/// For every member of the Kotzig orbit of G, composes the LC event
/// relabelings along the BFS path and checks that the result is a bijection
/// V(H(G)) -> V(H(G')) preserving adjacency and non-adjacency.
bool verify_H_invariance(const Graph& g);

/// Same check between G and one labeled graph reached by the given pivots.
bool verify_H_transport(const Graph& g, const std::vector<int>& pivots);

}  // namespace kotzig

#endif  // KOTZIG_LC_MAP_HPP
