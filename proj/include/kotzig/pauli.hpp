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

#ifndef KOTZIG_PAULI_HPP
#define KOTZIG_PAULI_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kotzig/common.hpp"
#include "kotzig/graph.hpp"

namespace kotzig {

enum class Letter : unsigned char { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l) noexcept;

/// n-qubit Pauli word i^phase * P_1 (x) ... (x) P_n with P_k in {I,X,Y,Z}.
/// Position k (1-based) is bit k-1 of both masks; Y sets both bits.
struct PauliOperator {
  int n = 0;
  Mask x = 0;
  Mask z = 0;
  int phase = 0;  // exponent of i, mod 4

  static PauliOperator identity(int n);
  /// Parses "XZI", "-YXY", "+ZZ", "iX". Whitespace is not allowed.
  static PauliOperator parse(std::string_view word);

  Mask support() const noexcept { return x | z; }
  int weight() const noexcept { return popcount(x | z); }
  Letter letter(int k) const;  // k is 1-based
  /// +1 / -1 for hermitian words; throws for phase 1 or 3.
  int sign() const;
  bool negative() const { return sign() < 0; }

  /// Letters only, no sign ("XZI").
  std::string letters() const;
  /// Signed form: "-YXY", "XZI"; odd phases render as "i"/"-i" prefixes.
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

/// Matrix product a*b with the usual single-qubit rules (X*Y = iZ, X*Z = -iY,
/// cyclic), phases accumulated mod 4.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// True iff a and b commute as operators.
bool commutes(const PauliOperator& a, const PauliOperator& b) noexcept;

/// g_i = X on vertex i, Z on each neighbour of i.
PauliOperator generator_from_graph(const Graph& g, int vertex);

/// Largest n for which the 2^n - 1 group elements are enumerated.
inline constexpr int kMaxGroupQubits = 24;

/// Non-identity stabilizer elements of a graph state. Element index a-1
/// holds the product of the generators g_i for the bits i-1 set in the
/// subset mask a (binary counting order).
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  StabilizerGroup(int n, std::vector<PauliOperator> elements);

  int qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const PauliOperator& operator[](std::size_t index) const { return elements_[index]; }
  const std::vector<PauliOperator>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Element for a nonempty generator subset mask.
  const PauliOperator& element(Mask subset) const;
  static Mask subset_of(std::size_t index) noexcept { return static_cast<Mask>(index + 1); }

 private:
  int n_ = 0;
  std::vector<PauliOperator> elements_;
};

StabilizerGroup enumerate_group(const Graph& g);

/// Number of elements with coefficient -1.
int beta(const StabilizerGroup& s);

struct WeightRange {
  int min = 0;
  int max = 0;
};
WeightRange weight_range(const StabilizerGroup& s);
/// Minimum distance of the associated additive code: the least weight.
int min_distance(const StabilizerGroup& s);

}  // namespace kotzig

#endif  // KOTZIG_PAULI_HPP
