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

#ifndef KOTZIG_AMPLITUDES_HPP
#define KOTZIG_AMPLITUDES_HPP

#include <array>
#include <vector>

#include "kotzig/events.hpp"
#include "kotzig/exact_scalar.hpp"
#include "kotzig/graph.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

/// Pure n-qubit state with exact amplitudes. Basis index bit k-1 holds the
/// computational value of qubit k.
struct StateVector {
  int n = 0;
  std::vector<ExactScalar> amplitudes;

  ExactScalar inner(const StateVector& other) const;  // <this|other>
  ExactScalar norm_squared() const { return inner(*this); }
};

inline constexpr int kDefaultStateQubits = 10;

/// |G>: amplitude (-1)^{sum over edges z_i z_j} 2^(-n/2). Checked against
/// g_i|G> = |G> for every generator before returning.
StateVector graph_state(const Graph& g, int max_qubits = kDefaultStateQubits);

StateVector apply_pauli(const StateVector& psi, const PauliOperator& p);
ExactScalar expectation(const StateVector& psi, const PauliOperator& p);

/// Single-qubit eigenvector of `letter` with eigenvalue (-1)^minus:
/// |+>, |->, |y+>, |y->, |0>, |1>.
std::array<ExactScalar, 2> eigenvector(Letter letter, bool minus);

/// <psi| P |psi> with P projecting each support qubit of `s` onto the
/// eigenvector selected by `outcomes`, identity elsewhere. Applied as
/// per-qubit contractions on the state vector.
ExactScalar event_probability(const StateVector& psi, const PauliOperator& s, Mask outcomes);
ExactScalar event_probability(const Graph& g, const StabilizerGroup& group, const Event& e);

/// Unnormalized filler ray used at identity positions. The default (2, 1)
/// is non-orthogonal to all six Pauli eigenvectors.
struct FillerRay {
  ExactScalar a = 2;
  ExactScalar b = 1;
  ExactScalar norm_squared() const { return a.conj() * a + b.conj() * b; }
};

/// Full 2^n vector |s^(1)> (x) ... (x) |s^(n)> of an event.
std::vector<ExactScalar> canonical_vector(const PauliOperator& s, Mask outcomes,
                                          const FillerRay& filler = {});
/// <u|v> for two canonical vectors, computed factor by factor.
ExactScalar canonical_inner(const PauliOperator& s, Mask s_outcomes, const PauliOperator& t,
                            Mask t_outcomes, const FillerRay& filler = {});
ExactScalar vector_inner(const std::vector<ExactScalar>& u, const std::vector<ExactScalar>& v);

/// True iff canonical vectors of two events are orthogonal exactly when the
/// events are adjacent in H.
bool canonical_representation_faithful(const EventGraph& h, const FillerRay& filler = {});

}  // namespace kotzig

#endif  // KOTZIG_AMPLITUDES_HPP
