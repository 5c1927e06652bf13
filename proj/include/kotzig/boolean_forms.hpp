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

#ifndef KOTZIG_BOOLEAN_FORMS_HPP
#define KOTZIG_BOOLEAN_FORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kotzig/graph.hpp"

namespace kotzig {

/// Cubic form over GF(2): XOR of products z_i z_j z_k, one per stored triple.
/// Triples are 3-bit masks (bit k-1 for z_k), kept sorted and unique.
struct CubicForm {
  int n = 0;
  std::vector<Mask> monomials;

  bool evaluate(Mask z) const;
  std::string str() const;  // "z1z2z3 + z2z3z4", "0" when empty
  friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

/// One monomial per two-edge path i - j - k (any centre j), reduced mod 2.
CubicForm cubic_form(const Graph& g);

inline constexpr int kMaxTruthTableVariables = 24;

/// Number of ones in the truth table (parallel over input blocks).
std::int64_t weight(const CubicForm& f);
/// Single-threaded reference.
std::int64_t weight_serial(const CubicForm& f);

struct BetaCheck {
  std::int64_t form_weight = 0;
  std::int64_t beta = 0;
  bool signs_match = false;  // sign of element(z) == (-1)^{f(z)} for every z
  bool ok() const { return signs_match && form_weight == beta; }
};

/// Compares wt(f_G) with the negative-sign count of S(G) and checks the sign
/// of every generator product against f_G. n <= 10.
BetaCheck beta_equivalence_check(const Graph& g);

/// Negative-sign count of S(C_n) from the cycle recurrence seeded at
/// n = 3, 4, 5 with 1, 4, 6.
std::int64_t cycle_beta(int n);

/// sum_{k >= 1, 4k-1 <= n} binom(n, 4k-1).
std::int64_t beta_Kn_binomial(int n);

}  // namespace kotzig

#endif  // KOTZIG_BOOLEAN_FORMS_HPP
