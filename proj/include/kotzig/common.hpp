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

#ifndef KOTZIG_COMMON_HPP
#define KOTZIG_COMMON_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kotzig {

using Mask = std::uint64_t;

/// Maximum number of qubits / graph vertices representable in one mask word.
inline constexpr int kMaxWordBits = 64;

/// Raised when an input is valid but exceeds what an operation supports
/// (qubit count, vertex count, exhaustive search size).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed edge lists, graph6 strings and fixture files.
/// `position()` is the 0-based character offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline bool parity(Mask m) noexcept { return (std::popcount(m) & 1) != 0; }
inline Mask bit(int k) noexcept { return Mask{1} << k; }
inline Mask low_bits(int n) noexcept { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// Scatters the low popcount(positions) bits of `value` onto the set bits of
/// `positions`, lowest first (software pdep).
inline Mask deposit_bits(Mask value, Mask positions) noexcept {
  Mask out = 0;
  for (Mask p = positions; p != 0; p &= p - 1) {
    if (value & 1) out |= p & (~p + 1);
    value >>= 1;
  }
  return out;
}

/// Inverse of deposit_bits: gathers the bits of `value` found at `positions`.
inline Mask extract_bits(Mask value, Mask positions) noexcept {
  Mask out = 0;
  int k = 0;
  for (Mask p = positions; p != 0; p &= p - 1, ++k) {
    if (value & p & (~p + 1)) out |= bit(k);
  }
  return out;
}

}  // namespace kotzig

#endif  // KOTZIG_COMMON_HPP
