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


#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "kotzig/orbit.hpp"
#include "kotzig/parameters.hpp"
#include "oracles.hpp"

using namespace kotzig;

namespace {

std::vector<std::string> words(const StabilizerGroup& s) {
  std::vector<std::string> out;
  for (const auto& e : s) out.push_back(e.str());
  return out;
}

oracle::Adjacency adjacency(const EventGraph& h) {
  oracle::Adjacency adj(h.vertex_count());
  for (std::size_t a = 0; a < h.vertex_count(); ++a)
    for (std::size_t b = 0; b < h.vertex_count(); ++b)
      if (h.adjacent(a, b)) adj[a] |= std::uint64_t{1} << b;
  return adj;
}

bool independent(const EventGraph& h, const std::vector<std::size_t>& set) {
  for (std::size_t a : set)
    for (std::size_t b : set)
      if (h.adjacent(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("strategy table layout") {
  CHECK(Strategy::slot(1, Letter::X) == 0);
  CHECK(Strategy::slot(1, Letter::Y) == 1);
  CHECK(Strategy::slot(2, Letter::Z) == 5);
  Strategy t{3, 0};
  CHECK(t.output(2, Letter::Y) == 1);
  t.set(2, Letter::Y, -1);
  CHECK(t.bits == (std::uint64_t{1} << 4));
  CHECK(t.output(2, Letter::Y) == -1);
  t.set(2, Letter::Y, 1);
  CHECK(t.bits == 0);
  CHECK(strategy_mask(PauliOperator::parse("XIZ")) == ((std::uint64_t{1} << 0) | (std::uint64_t{1} << 8)));
}

TEST_CASE("all-plus strategy on the path on three vertices") {
  // every element except -YXY is won
  const StabilizerGroup s = enumerate_group(parse_graph("12,23"));
  CHECK(satisfied_count(s, Strategy{3, 0}) == 6);
}

TEST_CASE("independence numbers of small exclusivity graphs") {
  // published values: alpha 3 for the edge, 6 for P3, 13 for both n = 4 orbits
  CHECK(alpha_by_strategies(enumerate_group(parse_graph("12"))).alpha == 3);
  CHECK(alpha_by_strategies(enumerate_group(parse_graph("12,23"))).alpha == 6);
  CHECK(alpha_by_strategies(enumerate_group(parse_graph("14,24,34"))).alpha == 13);
  CHECK(alpha_by_strategies(enumerate_group(parse_graph("14,23,24,34"))).alpha == 13);
}

TEST_CASE("strategy search agrees with exhaustive oracles") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const Graph g = graph_from_code(n, code);
      const EventGraph h = build_H(g);
      const AlphaResult parallel = alpha_by_strategies(h.group());
      const AlphaResult serial = alpha_by_strategies_serial(h.group());
      CHECK(parallel.alpha == serial.alpha);
      CHECK(parallel.witness.bits == serial.witness.bits);
      CHECK(satisfied_count(h.group(), parallel.witness) == parallel.alpha);
      CHECK(parallel.alpha == oracle::brute_classical_alpha(n, words(h.group())));
      CHECK(alpha_mis_bb(h).alpha == parallel.alpha);
      if (h.vertex_count() <= 64) {
        CHECK(oracle::brute_mis(adjacency(h), low_bits(static_cast<int>(h.vertex_count()))) == parallel.alpha);
      }
      // n = 2 is the only size where every element can be won classically
      if (n == 2) CHECK(parallel.alpha == 3);
      else CHECK(parallel.alpha < (1 << n) - 1);
      CHECK(parallel.alpha >= beta_lower_bound(g));
    }
  }
}

TEST_CASE("strategies and independent sets correspond") {
  const EventGraph h = build_H(parse_graph("12,23,34"));
  const AlphaResult best = alpha_by_strategies(h.group());
  const auto set = strategy_to_independent_set(h, best.witness);
  CHECK(set.size() == static_cast<std::size_t>(best.alpha));
  CHECK(independent(h, set));
  const Strategy back = independent_set_to_strategy(h, set);
  CHECK(strategy_to_independent_set(h, back) == set);

  const MisResult mis = alpha_mis_bb(h);
  CHECK(independent(h, mis.witness));
  CHECK(satisfied_count(h.group(), independent_set_to_strategy(h, mis.witness)) == mis.alpha);

  const std::size_t a = 0, b = h.neighbours(0).front();
  CHECK_THROWS_AS(independent_set_to_strategy(h, {a, b}), std::invalid_argument);
  CHECK_THROWS_AS(alpha_mis_bb(h, 10), CapabilityError);
}

TEST_CASE("sandwich certificates are exact") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const SandwichCertificate c = sandwich_certificate(graph_from_code(n, code));
      CHECK(c.valid);
      CHECK(c.lower_value == ExactScalar((1 << n) - 1));
      CHECK(c.upper_value == (1 << n) - 1);
      REQUIRE(c.clique_sums.size() == static_cast<std::size_t>((1 << n) - 1));
      for (const auto& s : c.clique_sums) CHECK(s == ExactScalar(1));
    }
  }
}

TEST_CASE("complete graph closed form") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(alpha_Kn_formula(n) == alpha_by_strategies(enumerate_group(Graph::complete(n))).alpha);
  }
}
