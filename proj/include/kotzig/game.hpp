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

#ifndef KOTZIG_GAME_HPP
#define KOTZIG_GAME_HPP

#include <cstdint>
#include <string>

#include "kotzig/amplitudes.hpp"
#include "kotzig/graph.hpp"
#include "kotzig/parameters.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

/// Reduced non-negative fraction.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  std::string str() const;  // "6/7", "1" when den == 1
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
};

/// n players each receive one letter of a stabilizer element drawn uniformly
/// from S(G) and answer +-1; they win when the product of the answers on the
/// element's support equals its sign.
struct GraphGame {
  StabilizerGroup group;

  static GraphGame from_graph(const Graph& g);
  int players() const { return group.qubits(); }
  std::int64_t input_count() const { return static_cast<std::int64_t>(group.size()); }
  std::string card() const;  // inputs and winning rule, one element per line
};

Fraction evaluate_classical(const GraphGame& game, const Strategy& t);

struct ClassicalValue {
  Fraction value;
  Strategy witness;
};

/// Best deterministic strategy (alpha(H) / (2^n - 1)).
ClassicalValue classical_value(const GraphGame& game);

struct QuantumCheck {
  bool expectations_ok = false;  // <psi|s|psi> = 1 for every element
  bool outcomes_ok = false;      // no losing outcome has nonzero probability
  std::string first_failure;
  bool ok() const { return expectations_ok && outcomes_ok; }
};

/// Graph-state strategy: each player measures the requested Pauli on its
/// qubit of |G>.
QuantumCheck verify_quantum_perfect(const GraphGame& game, const Graph& g);
/// Same test for an arbitrary shared state.
QuantumCheck verify_quantum_perfect(const GraphGame& game, const StateVector& psi);

}  // namespace kotzig

#endif  // KOTZIG_GAME_HPP
