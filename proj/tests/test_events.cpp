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


#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "kotzig/events.hpp"
#include "kotzig/orbit.hpp"
#include "oracles.hpp"

using namespace kotzig;

namespace {

std::string outcome_string(int n, Mask outcomes) {
  std::string s;
  for (int k = 0; k < n; ++k) s += ((outcomes >> k) & 1) ? '-' : '+';
  return s;
}

// Vertices of the component containing `start`.
std::vector<std::size_t> component(const EventGraph& h, std::size_t start) {
  std::vector<bool> seen(h.vertex_count());
  std::vector<std::size_t> out;
  std::queue<std::size_t> q;
  q.push(start);
  seen[start] = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    out.push_back(v);
    for (std::size_t u : h.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = true;
        q.push(u);
      }
    }
  }
  return out;
}

std::size_t common_neighbours(const EventGraph& h, std::size_t a, std::size_t b) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) c += h.adjacent(a, v) && h.adjacent(b, v);
  return c;
}

}  // namespace

TEST_CASE("events of one element are its sign-consistent outcome tuples") {
  const auto e = events_of_stabilizer(PauliOperator::parse("XZI"));
  REQUIRE(e.size() == 2);
  CHECK(render_event(PauliOperator::parse("XZI"), e[0].outcomes) == "xzI");
  CHECK(render_event(PauliOperator::parse("XZI"), e[1].outcomes) == "x-z-I");
  const PauliOperator minus = PauliOperator::parse("-YXY");
  const auto odd = events_of_stabilizer(minus);
  CHECK(odd.size() == 4);
  for (const auto& ev : odd) CHECK(parity(ev.outcomes));
  CHECK(events_of_stabilizer(PauliOperator::parse("XXXXX")).size() == 16);
}

TEST_CASE("exclusivity graph matches the letter-by-letter rule") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const EventGraph h = build_H(graph_from_code(n, code));
      const auto& s = h.group();
      std::size_t expected_vertices = 0;
      for (const auto& el : s) expected_vertices += std::size_t{1} << (el.weight() - 1);
      REQUIRE(h.vertex_count() == expected_vertices);
      CHECK(h.clique_count() == s.size());
      for (std::size_t a = 0; a < h.vertex_count(); ++a) {
        const auto& ea = h.event(a);
        const std::string la = s[static_cast<std::size_t>(ea.stab_index)].letters();
        const std::string oa = outcome_string(n, ea.outcomes);
        // outcomes multiply to the element's sign
        int minus = 0;
        for (int k = 0; k < n; ++k) minus += la[static_cast<std::size_t>(k)] != 'I' && oa[static_cast<std::size_t>(k)] == '-';
        CHECK((minus % 2 == 1) == s[static_cast<std::size_t>(ea.stab_index)].negative());
        for (std::size_t b = 0; b < h.vertex_count(); ++b) {
          const auto& eb = h.event(b);
          const std::string lb = s[static_cast<std::size_t>(eb.stab_index)].letters();
          const bool expected = a != b && oracle::exclusive(la, oa, lb, outcome_string(n, eb.outcomes));
          CHECK(h.adjacent(a, b) == expected);
          CHECK(are_exclusive(ea, eb, s) == expected);
        }
      }
      CHECK(h == build_H_serial(s));
    }
  }
}

TEST_CASE("H of the single edge") {
  // published values: 6 vertices, three components of size 2, degree sequence 1,6
  const EventGraph h = build_H(parse_graph("12"));
  CHECK(h.vertex_count() == 6);
  CHECK(components(h).str() == "3[2,2,2]");
  CHECK(degree_sequence(h) == "1,6");
}

TEST_CASE("H of the path on three vertices") {
  // published values: components {6,16}; the 16-vertex part is SRG(16,9,4,6); the
  // 6-vertex part is 3-regular bipartite; degree sequence 3,6/9,16
  const EventGraph h = build_H(parse_graph("12,23"));
  CHECK(h.vertex_count() == 22);
  const ComponentSummary c = components(h);
  CHECK(c.str() == "2[6,16]");
  CHECK(degree_sequence(h) == "3,6/9,16");
  CHECK(h.edge_count() == (6 * 3 + 16 * 9) / 2);

  std::vector<std::size_t> small, large;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const auto comp = component(h, v);
    if (comp.size() == 6 && small.empty()) small = comp;
    if (comp.size() == 16 && large.empty()) large = comp;
  }
  REQUIRE(small.size() == 6);
  REQUIRE(large.size() == 16);

  for (std::size_t a : large) {
    CHECK(h.degree(a) == 9);
    for (std::size_t b : large) {
      if (a == b) continue;
      CHECK(common_neighbours(h, a, b) == (h.adjacent(a, b) ? 4u : 6u));
    }
  }

  std::vector<int> colour(h.vertex_count(), -1);
  colour[small[0]] = 0;
  std::queue<std::size_t> q;
  q.push(small[0]);
  bool bipartite = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    CHECK(h.degree(v) == 3);
    for (std::size_t u : h.neighbours(v)) {
      if (colour[u] < 0) {
        colour[u] = 1 - colour[v];
        q.push(u);
      } else if (colour[u] == colour[v]) {
        bipartite = false;
      }
    }
  }
  CHECK(bipartite);
}

TEST_CASE("labels, lookup and export") {
  const EventGraph h = build_H(parse_graph("12,23"));
  CHECK(h.label(0) == "xzI");
  const long v = h.find(PauliOperator::parse("XZI"), 0b011);
  REQUIRE(v >= 0);
  CHECK(h.label(static_cast<std::size_t>(v)) == "x-z-I");
  CHECK(h.find(PauliOperator::parse("XXX"), 0) == -1);

  const Graph back = from_graph6(to_graph6(h));
  REQUIRE(back.size() == 22);
  for (std::size_t a = 0; a < 22; ++a)
    for (std::size_t b = 0; b < 22; ++b)
      if (a != b) CHECK(back.has_edge(static_cast<int>(a + 1), static_cast<int>(b + 1)) == h.adjacent(a, b));

  std::ostringstream table, adj;
  write_vertex_table(table, h);
  write_adjacency_list(adj, h);
  CHECK(table.str().rfind("id\tstabilizer_index\tstabilizer\tevent\n0\t0\tXZI\txzI\n", 0) == 0);
  CHECK(adj.str().find("\n") != std::string::npos);
}

TEST_CASE("event capability limit") {
  CHECK_THROWS_AS(build_H(Graph::path(kMaxEventQubits + 1)), CapabilityError);
}
