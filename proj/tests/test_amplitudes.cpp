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


#include <vector>

#include "doctest.h"
#include "kotzig/amplitudes.hpp"
#include "kotzig/orbit.hpp"
#include "oracles.hpp"

using namespace kotzig;

namespace {

// 2^w * 2^n * <G|P_e|G> from integer matrices: P_e = prod_k (I + o_k sigma_k) / 2.
oracle::Cx scaled_probability(const Graph& g, const PauliOperator& s, Mask outcomes) {
  const int n = g.size();
  oracle::Matrix m{1, {oracle::Cx{1, 0}}};
  for (int k = 1; k <= n; ++k) {
    const char l = s.letters()[static_cast<std::size_t>(k - 1)];
    oracle::Matrix f = oracle::single('I');
    if (l != 'I') {
      const long long o = ((outcomes >> (k - 1)) & 1) ? -1 : 1;
      const oracle::Matrix p = oracle::single(l);
      for (std::size_t i = 0; i < 4; ++i) f.a[i] = f.a[i] + oracle::Cx{o, 0} * p.a[i];
    }
    m = oracle::kron(m, f);
  }
  const auto lsb = oracle::graph_state_signs(n, g.edges());
  std::vector<long long> psi(lsb.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    std::size_t z = 0;
    for (int k = 0; k < n; ++k)
      if ((i >> (n - 1 - k)) & 1) z |= std::size_t{1} << k;
    psi[i] = lsb[z];
  }
  oracle::Cx total;
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c)
      total = total + oracle::Cx{psi[static_cast<std::size_t>(r)], 0} * m.at(r, c) *
                          oracle::Cx{psi[static_cast<std::size_t>(c)], 0};
  return total;
}

}  // namespace

TEST_CASE("graph state amplitudes") {
  for (const char* text : {"12", "12,23", "12,13,14", "12,23,34,45,15"}) {
    const Graph g = parse_graph(text);
    const StateVector psi = graph_state(g);
    const auto signs = oracle::graph_state_signs(g.size(), g.edges());
    const ExactScalar norm = ExactScalar::pow_inv_sqrt2(g.size());
    for (std::size_t z = 0; z < signs.size(); ++z) CHECK(psi.amplitudes[z] == ExactScalar(signs[z]) * norm);
    CHECK(psi.norm_squared() == ExactScalar(1));
    for (const auto& s : enumerate_group(g)) CHECK(expectation(psi, s) == ExactScalar(1));
  }
  CHECK_THROWS_AS(graph_state(Graph::path(kDefaultStateQubits + 1)), CapabilityError);
}

TEST_CASE("event probabilities match dense projectors") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const Graph g = graph_from_code(n, code);
      const StabilizerGroup group = enumerate_group(g);
      const StateVector psi = graph_state(g);
      for (std::size_t j = 0; j < group.size(); ++j) {
        ExactScalar total;
        for (const Event& e : events_of_stabilizer(group[j], static_cast<int>(j))) {
          const ExactScalar p = event_probability(g, group, e);
          const oracle::Cx scaled = scaled_probability(g, group[j], e.outcomes);
          CHECK(scaled.im == 0);
          CHECK(p.scaled_pow2(-(group[j].weight() + n)) == ExactScalar(scaled.re));
          CHECK(event_probability(psi, group[j], e.outcomes) == p);
          total += p;
        }
        CHECK(total == ExactScalar(1));
      }
    }
  }
}

TEST_CASE("single-qubit eigenvectors") {
  for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
    for (bool minus : {false, true}) {
      const auto v = eigenvector(l, minus);
      CHECK(v[0].conj() * v[0] + v[1].conj() * v[1] == ExactScalar(1));
      const auto w = eigenvector(l, !minus);
      CHECK((v[0].conj() * w[0] + v[1].conj() * w[1]).is_zero());
    }
  }
}

TEST_CASE("canonical vectors represent exclusivity faithfully") {
  for (const char* text : {"12", "12,23", "12,13,14", "12,23,34"}) {
    const EventGraph h = build_H(parse_graph(text));
    CHECK(canonical_representation_faithful(h));
    for (std::size_t a = 0; a < h.vertex_count(); ++a) {
      const auto& sa = h.group()[static_cast<std::size_t>(h.event(a).stab_index)];
      const auto va = canonical_vector(sa, h.event(a).outcomes);
      for (std::size_t b = 0; b < h.vertex_count(); ++b) {
        const auto& sb = h.group()[static_cast<std::size_t>(h.event(b).stab_index)];
        const ExactScalar ip = canonical_inner(sa, h.event(a).outcomes, sb, h.event(b).outcomes);
        CHECK(ip == vector_inner(va, canonical_vector(sb, h.event(b).outcomes)));
        if (a != b) CHECK(ip.is_zero() == h.adjacent(a, b));
      }
    }
  }
}
