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

#ifndef KOTZIG_EXACT_SCALAR_HPP
#define KOTZIG_EXACT_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace kotzig {

/// Gaussian integer with overflow-checked arithmetic.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

/// Exact element of Z[i, sqrt2][1/2]:
///   value = (p + q*sqrt2) / 2^k,  p, q Gaussian integers, k >= 0.
/// Kept reduced (k minimal), so equality is structural. Graph-state
/// amplitudes (+-2^(-n/2)), Pauli eigenvector entries and every projector
/// trace used here live in this ring.
class ExactScalar {
 public:
  constexpr ExactScalar() = default;
  ExactScalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactScalar(GaussInt p, GaussInt q, int k);

  /// (re + im*i) * 2^(-h/2); h may be odd or negative.
  static ExactScalar gaussian_dyadic(std::int64_t re, std::int64_t im, int h);
  static ExactScalar i();
  static ExactScalar sqrt2();
  static ExactScalar inv_sqrt2();
  /// 2^(-e/2)
  static ExactScalar pow_inv_sqrt2(int e);

  /// Parses the format produced by str(): "0", "-3", "1/4", "(1+i)/2",
  /// "r2/2", "-ir2/4". Terms: integer coefficient with suffix "", "i",
  /// "r2" (sqrt2) or "ir2".
  static ExactScalar parse(std::string_view text);

  const GaussInt& rational_part() const noexcept { return p_; }
  const GaussInt& sqrt2_part() const noexcept { return q_; }
  int denominator_log2() const noexcept { return k_; }

  bool is_zero() const noexcept { return p_ == GaussInt{} && q_ == GaussInt{}; }
  bool is_real() const noexcept { return p_.im == 0 && q_.im == 0; }
  /// True iff the value is a real dyadic rational (no sqrt2, no i).
  bool is_dyadic_rational() const noexcept { return is_real() && q_.re == 0; }
  /// Numerator over 2^denominator_log2(); requires is_dyadic_rational().
  std::int64_t dyadic_numerator() const;
  /// Integer value; throws unless the value is one.
  std::int64_t to_integer() const;
  double to_double() const noexcept;

  ExactScalar conj() const;
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Divides by 2^e.
  ExactScalar scaled_pow2(int e) const;

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  std::string str() const;

 private:
  void normalize();

  GaussInt p_{};
  GaussInt q_{};
  int k_ = 0;
};

}  // namespace kotzig

#endif  // KOTZIG_EXACT_SCALAR_HPP
