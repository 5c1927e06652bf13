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

#include "kotzig/game.hpp"

#include <numeric>

namespace kotzig {

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("fraction needs num >= 0 and den > 0");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

GraphGame GraphGame::from_graph(const Graph& g) { return {enumerate_group(g)}; }

std::string GraphGame::card() const {
  std::string out = std::to_string(players()) + " players, " + std::to_string(input_count()) +
                    " equally likely inputs; win iff the product of answers on the support equals the sign\n";
  for (std::size_t j = 0; j < group.size(); ++j) {
    const auto& s = group[j];
    out += "  " + std::string(s.negative() ? "-" : "+") + s.letters() + "  product " +
           (s.negative() ? "-1" : "+1") + "\n";
  }
  return out;
}

Fraction evaluate_classical(const GraphGame& game, const Strategy& t) {
  if (t.n != game.players()) throw std::invalid_argument("strategy is for a different player count");
  return Fraction::make(satisfied_count(game.group, t), game.input_count());
}

ClassicalValue classical_value(const GraphGame& game) {
  const AlphaResult a = alpha_by_strategies(game.group);
  return {Fraction::make(a.alpha, game.input_count()), a.witness};
}

QuantumCheck verify_quantum_perfect(const GraphGame& game, const StateVector& psi) {
  if (psi.n != game.players()) throw std::invalid_argument("state size differs from player count");
  QuantumCheck c{true, true, {}};
  const ExactScalar one = 1;
  for (const auto& s : game.group) {
    if (c.expectations_ok && !(expectation(psi, s) == one)) {
      c.expectations_ok = false;
      if (c.first_failure.empty()) c.first_failure = "expectation of " + s.str() + " is not 1";
    }
    const Mask support = s.support();
    const int w = popcount(support);
    for (Mask t = 0; t < bit(w) && c.outcomes_ok; ++t) {
      if (parity(t) == s.negative()) continue;  // winning outcome
      const Mask outcomes = deposit_bits(t, support);
      const ExactScalar p = event_probability(psi, s, outcomes);
      if (!p.is_zero()) {
        c.outcomes_ok = false;
        if (c.first_failure.empty()) {
          c.first_failure = "losing outcome " + render_event(s, outcomes) + " has probability " + p.str();
        }
      }
    }
  }
  return c;
}

QuantumCheck verify_quantum_perfect(const GraphGame& game, const Graph& g) {
  return verify_quantum_perfect(game, graph_state(g));
}

}  // namespace kotzig
