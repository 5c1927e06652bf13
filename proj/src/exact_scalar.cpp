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

#include "kotzig/exact_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kotzig/common.hpp"

namespace kotzig {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ExactScalar overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("ExactScalar overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ExactScalar overflow");
  return r;
}

std::int64_t shl(std::int64_t a, int e) {
  if (e >= 62) {
    if (a == 0) return 0;
    throw std::overflow_error("ExactScalar overflow");
  }
  return checked_mul(a, std::int64_t{1} << e);
}

GaussInt add(GaussInt a, GaussInt b) { return {checked_add(a.re, b.re), checked_add(a.im, b.im)}; }
GaussInt mul(GaussInt a, GaussInt b) {
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}
GaussInt shl(GaussInt a, int e) { return {shl(a.re, e), shl(a.im, e)}; }

}  // namespace

ExactScalar::ExactScalar(std::int64_t value) : p_{value, 0} {}

ExactScalar::ExactScalar(GaussInt p, GaussInt q, int k) : p_(p), q_(q), k_(k) {
  if (k < 0) {
    p_ = shl(p_, -k);
    q_ = shl(q_, -k);
    k_ = 0;
  }
  normalize();
}

ExactScalar ExactScalar::gaussian_dyadic(std::int64_t re, std::int64_t im, int h) {
  if (h % 2 == 0) return ExactScalar({re, im}, {}, h / 2);
  // 2^(-h/2) = sqrt2 * 2^(-(h+1)/2)
  return ExactScalar({}, {re, im}, (h + 1) / 2);
}

ExactScalar ExactScalar::i() { return ExactScalar({0, 1}, {}, 0); }
ExactScalar ExactScalar::sqrt2() { return ExactScalar({}, {1, 0}, 0); }
ExactScalar ExactScalar::inv_sqrt2() { return gaussian_dyadic(1, 0, 1); }
ExactScalar ExactScalar::pow_inv_sqrt2(int e) { return gaussian_dyadic(1, 0, e); }

void ExactScalar::normalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && ((p_.re | p_.im | q_.re | q_.im) & 1) == 0) {
    p_ = {p_.re / 2, p_.im / 2};
    q_ = {q_.re / 2, q_.im / 2};
    --k_;
  }
}

std::int64_t ExactScalar::dyadic_numerator() const {
  if (!is_dyadic_rational()) throw std::domain_error(str() + " is not a dyadic rational");
  return p_.re;
}

std::int64_t ExactScalar::to_integer() const {
  if (!is_dyadic_rational() || k_ != 0) throw std::domain_error(str() + " is not an integer");
  return p_.re;
}

double ExactScalar::to_double() const noexcept {
  return (static_cast<double>(p_.re) + std::sqrt(2.0) * static_cast<double>(q_.re)) /
         std::ldexp(1.0, k_);
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.p_.im = -out.p_.im;
  out.q_.im = -out.q_.im;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.p_ = {-p_.re, -p_.im};
  out.q_ = {-q_.re, -q_.im};
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  const int k = std::max(k_, o.k_);
  p_ = add(shl(p_, k - k_), shl(o.p_, k - o.k_));
  q_ = add(shl(q_, k - k_), shl(o.q_, k - o.k_));
  k_ = k;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // (p1 + q1 r)(p2 + q2 r) = p1 p2 + 2 q1 q2 + (p1 q2 + q1 p2) r,  r = sqrt2
  const GaussInt p = add(mul(p_, o.p_), shl(mul(q_, o.q_), 1));
  const GaussInt q = add(mul(p_, o.q_), mul(q_, o.p_));
  p_ = p;
  q_ = q;
  k_ += o.k_;
  normalize();
  return *this;
}

ExactScalar ExactScalar::scaled_pow2(int e) const { return ExactScalar(p_, q_, k_ + e); }

std::string ExactScalar::str() const {
  struct Term {
    std::int64_t coef;
    const char* suffix;
  };
  std::vector<Term> terms;
  for (Term t : {Term{p_.re, ""}, Term{p_.im, "i"}, Term{q_.re, "r2"}, Term{q_.im, "ir2"}}) {
    if (t.coef != 0) terms.push_back(t);
  }
  if (terms.empty()) return "0";
  std::string body;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto [coef, suffix] = terms[t];
    if (coef < 0)
      body += '-';
    else if (t > 0)
      body += '+';
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1 || suffix[0] == '\0') body += std::to_string(mag);
    body += suffix;
  }
  if (k_ == 0) return body;
  if (terms.size() > 1) body = "(" + body + ")";
  return body + "/" + std::to_string(std::int64_t{1} << k_);
}

ExactScalar ExactScalar::parse(std::string_view text) {
  auto fail = [&](std::size_t at, const char* why) -> ExactScalar {
    throw ParseError(std::string("bad exact scalar '") + std::string(text) + "': " + why, at);
  };
  std::string_view body = text;
  int k = 0;
  std::size_t body_offset = 0;
  if (!text.empty() && text.front() == '(') {
    auto close = text.find(')');
    if (close == std::string_view::npos) return fail(0, "unbalanced parenthesis");
    body = text.substr(1, close - 1);
    body_offset = 1;
    auto rest = text.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '/') return fail(close + 1, "expected '/'");
      rest.remove_prefix(1);
      std::int64_t den = 0;
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail(close + 2, "bad denominator");
        den = den * 10 + (c - '0');
      }
      if (den <= 0 || (den & (den - 1)) != 0) return fail(close + 2, "denominator must be 2^k");
      k = std::countr_zero(static_cast<std::uint64_t>(den));
    }
  } else if (auto slash = text.find('/'); slash != std::string_view::npos) {
    body = text.substr(0, slash);
    std::int64_t den = 0;
    for (char c : text.substr(slash + 1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail(slash + 1, "bad denominator");
      den = den * 10 + (c - '0');
    }
    if (den <= 0 || (den & (den - 1)) != 0) return fail(slash + 1, "denominator must be 2^k");
    k = std::countr_zero(static_cast<std::uint64_t>(den));
  }
  if (body.empty()) return fail(body_offset, "empty value");

  GaussInt p{}, q{};
  std::size_t at = 0;
  while (at < body.size()) {
    std::int64_t sign = 1;
    if (body[at] == '+' || body[at] == '-') {
      if (body[at] == '-') sign = -1;
      ++at;
    } else if (at != 0) {
      return fail(body_offset + at, "expected sign between terms");
    }
    std::int64_t coef = 0;
    bool digits = false;
    while (at < body.size() && std::isdigit(static_cast<unsigned char>(body[at]))) {
      coef = checked_add(checked_mul(coef, 10), body[at] - '0');
      digits = true;
      ++at;
    }
    if (!digits) coef = 1;
    coef *= sign;
    auto rest = body.substr(at);
    if (rest.starts_with("ir2")) {
      q.im = checked_add(q.im, coef);
      at += 3;
    } else if (rest.starts_with("r2")) {
      q.re = checked_add(q.re, coef);
      at += 2;
    } else if (rest.starts_with("i")) {
      p.im = checked_add(p.im, coef);
      at += 1;
    } else if (digits) {
      p.re = checked_add(p.re, coef);
    } else {
      return fail(body_offset + at, "expected a term");
    }
  }
  return ExactScalar(p, q, k);
}

}  // namespace kotzig
