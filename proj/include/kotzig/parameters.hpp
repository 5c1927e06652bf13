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

#ifndef KOTZIG_PARAMETERS_HPP
#define KOTZIG_PARAMETERS_HPP

#include <cstdint>
#include <vector>

#include "kotzig/events.hpp"
#include "kotzig/exact_scalar.hpp"
#include "kotzig/graph.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

/// Deterministic classical answer table: bit 3(k-1) + {X:0, Y:1, Z:2} set
/// means player k answers -1 when asked that letter.
struct Strategy {
  int n = 0;
  std::uint64_t bits = 0;

  static int slot(int position, Letter letter);
  int output(int position, Letter letter) const;  // +1 or -1
  void set(int position, Letter letter, int value);
};

/// Bits of the strategy table read by `s` (one per support position).
std::uint64_t strategy_mask(const PauliOperator& s);

int satisfied_count(const StabilizerGroup& s, const Strategy& t);

/// Largest n accepted by the exhaustive strategy search (2^(3n) tables).
inline constexpr int kMaxStrategyQubits = 8;

struct AlphaResult {
  int alpha = 0;
  Strategy witness;  // smallest table (as an integer) attaining alpha
};

/// max over strategies of satisfied_count, which equals alpha(H(G)).
/// Letters that never occur at a position stay fixed to +1.
AlphaResult alpha_by_strategies(const StabilizerGroup& s);
/// Single-threaded reference for the same search.
AlphaResult alpha_by_strategies_serial(const StabilizerGroup& s);

/// Events of H selected by the satisfied inputs of a strategy.
std::vector<std::size_t> strategy_to_independent_set(const EventGraph& h, const Strategy& t);
/// Strategy answering every input covered by an independent set as the set
/// dictates (unconstrained answers +1). Throws if the set is not independent.
Strategy independent_set_to_strategy(const EventGraph& h, const std::vector<std::size_t>& set);

inline constexpr std::size_t kDefaultMisVertexLimit = 320;

struct MisResult {
  int alpha = 0;
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;  // search tree size
};

/// Exact maximum independent set of H by branch and bound over its
/// per-element clique partition: at most one vertex per clique, bounded by
/// the number of cliques still holding a candidate.
MisResult alpha_mis_bb(const EventGraph& h, std::size_t max_vertices = kDefaultMisVertexLimit);

struct SandwichCertificate {
  int n = 0;
  std::vector<ExactScalar> clique_sums;  // per element, each exactly 1
  ExactScalar lower_value;               // sum of all event probabilities
  std::int64_t upper_value = 0;          // size of the clique partition
  std::size_t zero_probability_events = 0;
  bool valid = false;
};

/// Exact certificate that theta(H) = alpha*(H) = 2^n - 1: the probability
/// weights <G|P_e|G> form a feasible point of value 2^n - 1 and the 2^n - 1
/// per-element cliques cover V(H).
SandwichCertificate sandwich_certificate(const Graph& g);

/// 2^n - 1 - min beta over the Kotzig orbit of G.
std::int64_t beta_lower_bound(const Graph& g);

/// Closed form for alpha(H(K_n)), n >= 3.
std::int64_t alpha_Kn_formula(int n);

}  // namespace kotzig

#endif  // KOTZIG_PARAMETERS_HPP
