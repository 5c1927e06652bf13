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

#include "kotzig/amplitudes.hpp"

namespace kotzig {

ExactScalar StateVector::inner(const StateVector& other) const {
  if (n != other.n) throw std::invalid_argument("state size mismatch");
  ExactScalar acc;
  for (std::size_t z = 0; z < amplitudes.size(); ++z) acc += amplitudes[z].conj() * other.amplitudes[z];
  return acc;
}

StateVector graph_state(const Graph& g, int max_qubits) {
  const int n = g.size();
  if (n < 1 || n > max_qubits) {
    throw CapabilityError("graph state supports 1 <= n <= " + std::to_string(max_qubits) +
                          ", got " + std::to_string(n));
  }
  StateVector psi{n, std::vector<ExactScalar>(std::size_t{1} << n)};
  const ExactScalar base = ExactScalar::pow_inv_sqrt2(n);
  const auto& rows = g.rows();
  for (Mask z = 0; z < bit(n); ++z) {
    int doubled = 0;  // each edge inside z counted twice
    for (Mask r = z; r != 0; r &= r - 1) doubled += popcount(rows[std::countr_zero(r)] & z);
    psi.amplitudes[z] = (doubled / 2) % 2 ? -base : base;
  }
  for (int v = 1; v <= n; ++v) {
    if (!(apply_pauli(psi, generator_from_graph(g, v)).amplitudes == psi.amplitudes)) {
      throw std::logic_error("graph state is not stabilized by g_" + std::to_string(v));
    }
  }
  return psi;
}

StateVector apply_pauli(const StateVector& psi, const PauliOperator& p) {
  if (p.n != psi.n) throw std::invalid_argument("Pauli and state sizes differ");
  // P|z> = i^(phase + #Y) (-1)^{|z & zmask|} |z ^ x>
  static const ExactScalar kPowI[4] = {1, ExactScalar::i(), -1, -ExactScalar::i()};
  const ExactScalar global = kPowI[(p.phase + popcount(p.x & p.z)) & 3];
  StateVector out{psi.n, std::vector<ExactScalar>(psi.amplitudes.size())};
  for (Mask z = 0; z < psi.amplitudes.size(); ++z) {
    ExactScalar c = global * psi.amplitudes[z];
    out.amplitudes[z ^ p.x] = parity(z & p.z) ? -c : c;
  }
  return out;
}

ExactScalar expectation(const StateVector& psi, const PauliOperator& p) {
  return psi.inner(apply_pauli(psi, p));
}

std::array<ExactScalar, 2> eigenvector(Letter letter, bool minus) {
  const ExactScalar h = ExactScalar::inv_sqrt2();
  switch (letter) {
    case Letter::X: return {h, minus ? -h : h};
    case Letter::Y: return {h, (minus ? -ExactScalar::i() : ExactScalar::i()) * h};
    case Letter::Z: return minus ? std::array<ExactScalar, 2>{0, 1} : std::array<ExactScalar, 2>{1, 0};
    default: throw std::invalid_argument("identity has no eigenvector");
  }
}

ExactScalar event_probability(const StateVector& psi, const PauliOperator& s, Mask outcomes) {
  if (s.n != psi.n) throw std::invalid_argument("stabilizer and state sizes differ");
  if (outcomes & ~s.support()) throw std::invalid_argument("outcome outside stabilizer support");
  std::vector<ExactScalar> phi = psi.amplitudes;
  for (Mask r = s.support(); r != 0; r &= r - 1) {
    const int q = std::countr_zero(r);
    const auto v = eigenvector(s.letter(q + 1), (outcomes >> q) & 1);
    const ExactScalar c0 = v[0].conj(), c1 = v[1].conj();
    for (Mask z = 0; z < phi.size(); ++z) {
      if (z & bit(q)) continue;
      const ExactScalar amp = c0 * phi[z] + c1 * phi[z | bit(q)];
      phi[z] = v[0] * amp;
      phi[z | bit(q)] = v[1] * amp;
    }
  }
  return psi.inner(StateVector{psi.n, std::move(phi)});
}

ExactScalar event_probability(const Graph& g, const StabilizerGroup& group, const Event& e) {
  if (group.qubits() != g.size() || e.stab_index < 0 ||
      static_cast<std::size_t>(e.stab_index) >= group.size()) {
    throw std::invalid_argument("event does not belong to this stabilizer group");
  }
  return event_probability(graph_state(g), group[static_cast<std::size_t>(e.stab_index)], e.outcomes);
}

namespace {

std::array<ExactScalar, 2> factor(const PauliOperator& s, Mask outcomes, int q, const FillerRay& f) {
  const Letter l = s.letter(q + 1);
  if (l == Letter::I) return {f.a, f.b};
  return eigenvector(l, (outcomes >> q) & 1);
}

}  // namespace

std::vector<ExactScalar> canonical_vector(const PauliOperator& s, Mask outcomes, const FillerRay& filler) {
  std::vector<std::array<ExactScalar, 2>> factors;
  for (int q = 0; q < s.n; ++q) factors.push_back(factor(s, outcomes, q, filler));
  std::vector<ExactScalar> out(std::size_t{1} << s.n);
  for (Mask z = 0; z < out.size(); ++z) {
    ExactScalar amp = 1;
    for (int q = 0; q < s.n; ++q) amp *= factors[static_cast<std::size_t>(q)][(z >> q) & 1];
    out[z] = amp;
  }
  return out;
}

ExactScalar canonical_inner(const PauliOperator& s, Mask s_outcomes, const PauliOperator& t,
                            Mask t_outcomes, const FillerRay& filler) {
  if (s.n != t.n) throw std::invalid_argument("event sizes differ");
  ExactScalar acc = 1;
  for (int q = 0; q < s.n && !acc.is_zero(); ++q) {
    const auto a = factor(s, s_outcomes, q, filler);
    const auto b = factor(t, t_outcomes, q, filler);
    acc *= a[0].conj() * b[0] + a[1].conj() * b[1];
  }
  return acc;
}

ExactScalar vector_inner(const std::vector<ExactScalar>& u, const std::vector<ExactScalar>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector sizes differ");
  ExactScalar acc;
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k].conj() * v[k];
  return acc;
}

bool canonical_representation_faithful(const EventGraph& h, const FillerRay& filler) {
  const auto& group = h.group();
  for (std::size_t u = 0; u < h.vertex_count(); ++u) {
    const auto& eu = h.event(u);
    for (std::size_t v = u + 1; v < h.vertex_count(); ++v) {
      const auto& ev = h.event(v);
      const bool orthogonal =
          canonical_inner(group[static_cast<std::size_t>(eu.stab_index)], eu.outcomes,
                          group[static_cast<std::size_t>(ev.stab_index)], ev.outcomes, filler)
              .is_zero();
      if (orthogonal != h.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace kotzig
