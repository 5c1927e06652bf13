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


#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "kotzig/exact_scalar.hpp"

using namespace kotzig;

namespace {

std::complex<double> approx(const ExactScalar& s) {
  const double r2 = std::sqrt(2.0);
  const double scale = std::ldexp(1.0, -s.denominator_log2());
  return {(static_cast<double>(s.rational_part().re) + r2 * static_cast<double>(s.sqrt2_part().re)) * scale,
          (static_cast<double>(s.rational_part().im) + r2 * static_cast<double>(s.sqrt2_part().im)) * scale};
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("basic constants") {
  CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == ExactScalar(2));
  CHECK(ExactScalar::inv_sqrt2() * ExactScalar::sqrt2() == ExactScalar(1));
  CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
  CHECK(ExactScalar::pow_inv_sqrt2(4) == ExactScalar::parse("1/4"));
  CHECK(ExactScalar::pow_inv_sqrt2(3) * ExactScalar::pow_inv_sqrt2(1) == ExactScalar::parse("1/4"));
  CHECK(ExactScalar::gaussian_dyadic(1, 1, 1) == ExactScalar::inv_sqrt2() * (ExactScalar(1) + ExactScalar::i()));
  CHECK(ExactScalar::gaussian_dyadic(3, 0, -2) == ExactScalar(6));
}

TEST_CASE("equality is structural after reduction") {
  CHECK(ExactScalar::parse("2/4") == ExactScalar::parse("1/2"));
  CHECK(ExactScalar(GaussInt{4, 0}, GaussInt{}, 3) == ExactScalar::parse("1/2"));
  CHECK((ExactScalar::inv_sqrt2() - ExactScalar::inv_sqrt2()).is_zero());
  CHECK(ExactScalar::parse("1/4").dyadic_numerator() == 1);
  CHECK(ExactScalar(7).to_integer() == 7);
  CHECK_THROWS(ExactScalar::parse("1/2").to_integer());
  CHECK(ExactScalar(-1).to_integer() == -1);
  CHECK_THROWS(ExactScalar::sqrt2().to_integer());
}

TEST_CASE("text round trip") {
  for (const char* t : {"0", "-3", "1/4", "(1+i)/2", "r2/2", "-ir2/4", "i", "(3+r2)/8"}) {
    const ExactScalar s = ExactScalar::parse(t);
    CHECK(ExactScalar::parse(s.str()) == s);
  }
  CHECK(ExactScalar::parse("r2/2") == ExactScalar::inv_sqrt2());
  CHECK_THROWS(ExactScalar::parse("1/3"));
  CHECK_THROWS(ExactScalar::parse("abc"));
}

TEST_CASE("ring operations agree with floating point") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), shift(0, 5);
  auto random_scalar = [&] {
    return ExactScalar(GaussInt{coeff(rng), coeff(rng)}, GaussInt{coeff(rng), coeff(rng)}, shift(rng));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const ExactScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(near(approx(a + b), approx(a) + approx(b)));
    CHECK(near(approx(a - b), approx(a) - approx(b)));
    CHECK(near(approx(a * b), approx(a) * approx(b)));
    CHECK(near(approx(a.conj()), std::conj(approx(a))));
    CHECK(near(approx(a.scaled_pow2(2)), approx(a) / 4.0));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(near({a.to_double(), 0.0}, {approx(a).real(), 0.0}));
  }
}
