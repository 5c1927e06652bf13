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

#include "kotzig/boolean_forms.hpp"

#include <algorithm>
#include <map>

#include "kotzig/pauli.hpp"

namespace kotzig {

bool CubicForm::evaluate(Mask z) const {
  bool value = false;
  for (Mask m : monomials) value ^= (z & m) == m;
  return value;
}

std::string CubicForm::str() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (Mask m : monomials) {
    if (!out.empty()) out += " + ";
    for (Mask r = m; r != 0; r &= r - 1) out += "z" + std::to_string(std::countr_zero(r) + 1);
  }
  return out;
}

CubicForm cubic_form(const Graph& g) {
  std::map<Mask, int> multiplicity;
  const int n = g.size();
  for (int j = 1; j <= n; ++j) {
    const Mask nb = g.neighbours(j);
    for (Mask a = nb; a != 0; a &= a - 1) {
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        ++multiplicity[bit(j - 1) | (a & -a) | (b & -b)];
      }
    }
  }
  CubicForm f{n, {}};
  for (auto [m, count] : multiplicity) {
    if (count % 2) f.monomials.push_back(m);
  }
  return f;
}

namespace {

void check_size(const CubicForm& f) {
  if (f.n < 0 || f.n > kMaxTruthTableVariables) {
    throw CapabilityError("truth table limited to " + std::to_string(kMaxTruthTableVariables) + " variables");
  }
}

}  // namespace

std::int64_t weight(const CubicForm& f) {
  check_size(f);
  const std::int64_t total = std::int64_t{1} << f.n;
  const Mask* mons = f.monomials.data();
  const std::size_t count = f.monomials.size();
  std::int64_t ones = 0;
#pragma omp parallel for schedule(static) reduction(+ : ones)
  for (std::int64_t z = 0; z < total; ++z) {
    const Mask zz = static_cast<Mask>(z);
    bool value = false;
    for (std::size_t k = 0; k < count; ++k) value ^= (zz & mons[k]) == mons[k];
    ones += value;
  }
  return ones;
}

std::int64_t weight_serial(const CubicForm& f) {
  check_size(f);
  std::int64_t ones = 0;
  for (Mask z = 0; z < bit(f.n); ++z) ones += f.evaluate(z);
  return ones;
}

BetaCheck beta_equivalence_check(const Graph& g) {
  if (g.size() > 10) throw CapabilityError("beta equivalence check supports n <= 10");
  const CubicForm f = cubic_form(g);
  const StabilizerGroup s = enumerate_group(g);
  BetaCheck c;
  c.form_weight = weight(f);
  c.beta = beta(s);
  c.signs_match = true;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const Mask z = StabilizerGroup::subset_of(idx);
    if (s[idx].negative() != f.evaluate(z)) {
      c.signs_match = false;
      break;
    }
  }
  return c;
}

std::int64_t cycle_beta(int n) {
  if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  if (n > 60) throw CapabilityError("cycle recurrence overflows past n = 60");
  std::vector<std::int64_t> b = {0, 0, 0, 1, 4, 6};
  for (int m = 3; static_cast<int>(b.size()) <= n; ++m) {
    b.push_back(2 * (b[static_cast<std::size_t>(m + 1)] + b[static_cast<std::size_t>(m)] + (std::int64_t{1} << (m - 1))));
  }
  return b[static_cast<std::size_t>(n)];
}

std::int64_t beta_Kn_binomial(int n) {
  if (n < 1) throw std::invalid_argument("complete graphs need n >= 1");
  if (n > 62) throw CapabilityError("binomial sum overflows past n = 62");
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int k = r; k > 0; --k) row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
  }
  std::int64_t sum = 0;
  for (int k = 1; 4 * k - 1 <= n; ++k) sum += row[static_cast<std::size_t>(4 * k - 1)];
  return sum;
}

}  // namespace kotzig
