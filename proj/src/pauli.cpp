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

#include "kotzig/pauli.hpp"

#include <algorithm>

namespace kotzig {

char letter_char(Letter l) noexcept {
  switch (l) {
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
    default: return 'I';
  }
}

PauliOperator PauliOperator::identity(int n) {
  if (n < 1 || n > kMaxWordBits) {
    throw CapabilityError("Pauli words support 1.." + std::to_string(kMaxWordBits) +
                          " qubits, got " + std::to_string(n));
  }
  return PauliOperator{n, 0, 0, 0};
}

PauliOperator PauliOperator::parse(std::string_view word) {
  int phase = 0;
  std::size_t at = 0;
  if (at < word.size() && (word[at] == '+' || word[at] == '-')) {
    if (word[at] == '-') phase = 2;
    ++at;
  }
  if (at < word.size() && word[at] == 'i') {
    phase = (phase + 1) & 3;
    ++at;
  }
  const int n = static_cast<int>(word.size() - at);
  PauliOperator p = identity(n);
  p.phase = phase;
  for (int k = 0; k < n; ++k) {
    switch (word[at + static_cast<std::size_t>(k)]) {
      case 'I': break;
      case 'X': p.x |= bit(k); break;
      case 'Z': p.z |= bit(k); break;
      case 'Y': p.x |= bit(k); p.z |= bit(k); break;
      default: throw ParseError("invalid Pauli letter", at + static_cast<std::size_t>(k));
    }
  }
  return p;
}

Letter PauliOperator::letter(int k) const {
  if (k < 1 || k > n) throw std::out_of_range("Pauli position out of range");
  return static_cast<Letter>(((x >> (k - 1)) & 1) | (((z >> (k - 1)) & 1) << 1));
}

int PauliOperator::sign() const {
  if (phase & 1) throw std::logic_error("Pauli word " + str() + " is not hermitian");
  return phase == 0 ? 1 : -1;
}

std::string PauliOperator::letters() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(letter_char(letter(k)));
  return out;
}

std::string PauliOperator::str() const {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[phase & 3] + letters();
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli size mismatch: " + std::to_string(a.n) + " vs " +
                                std::to_string(b.n));
  }
  const Mask ax = a.x & ~a.z, ay = a.x & a.z, az = ~a.x & a.z;
  const Mask bx = b.x & ~b.z, by = b.x & b.z, bz = ~b.x & b.z;
  // XY = iZ, YZ = iX, ZX = iY and the reversed products pick up -i.
  const Mask plus = (ax & by) | (ay & bz) | (az & bx);
  const Mask minus = (ay & bx) | (az & by) | (ax & bz);
  PauliOperator out{a.n, a.x ^ b.x, a.z ^ b.z, 0};
  out.phase = (a.phase + b.phase + popcount(plus) - popcount(minus)) & 3;
  return out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) noexcept {
  return !parity((a.x & b.z) ^ (a.z & b.x));
}

PauliOperator generator_from_graph(const Graph& g, int vertex) {
  PauliOperator p = PauliOperator::identity(g.size());
  p.x = bit(vertex - 1);
  p.z = g.neighbours(vertex);
  return p;
}

StabilizerGroup::StabilizerGroup(int n, std::vector<PauliOperator> elements)
    : n_(n), elements_(std::move(elements)) {}

const PauliOperator& StabilizerGroup::element(Mask subset) const {
  if (subset == 0 || subset > elements_.size()) {
    throw std::out_of_range("generator subset out of range");
  }
  return elements_[static_cast<std::size_t>(subset - 1)];
}

StabilizerGroup enumerate_group(const Graph& g) {
  const int n = g.size();
  if (n < 1) throw std::invalid_argument("stabilizer group needs at least one vertex");
  if (n > kMaxGroupQubits) {
    throw CapabilityError("group enumeration supports n <= " + std::to_string(kMaxGroupQubits));
  }
  std::vector<PauliOperator> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(generator_from_graph(g, v));

  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<PauliOperator> elements(count);
  for (std::size_t a = 1; a <= count; ++a) {
    const int low = std::countr_zero(a);
    const std::size_t rest = a & (a - 1);
    elements[a - 1] = rest == 0 ? gens[low] : multiply(gens[low], elements[rest - 1]);
    if (elements[a - 1].phase & 1) {
      throw std::logic_error("non-hermitian element " + elements[a - 1].str() +
                             " in graph-state stabilizer group");
    }
  }
  return StabilizerGroup(n, std::move(elements));
}

int beta(const StabilizerGroup& s) {
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [](const PauliOperator& p) { return p.phase == 2; }));
}

WeightRange weight_range(const StabilizerGroup& s) {
  WeightRange r{s.qubits() + 1, 0};
  for (const auto& p : s) {
    r.min = std::min(r.min, p.weight());
    r.max = std::max(r.max, p.weight());
  }
  return r;
}

int min_distance(const StabilizerGroup& s) { return weight_range(s).min; }

}  // namespace kotzig
