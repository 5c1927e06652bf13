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


#include <string>
#include <vector>

#include "doctest.h"
#include "kotzig/orbit.hpp"
#include "kotzig/pauli.hpp"
#include "oracles.hpp"

using namespace kotzig;

namespace {

std::vector<std::string> group_words(const StabilizerGroup& s) {
  std::vector<std::string> out;
  for (const auto& e : s) out.push_back(e.str());
  return out;
}

oracle::Matrix with_phase(oracle::Matrix m, int phase) {
  static const oracle::Cx kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (auto& e : m.a) e = e * kPowI[phase & 3];
  return m;
}

oracle::Matrix dense(const PauliOperator& p) { return with_phase(oracle::pauli_matrix(p.letters()), p.phase); }

std::vector<PauliOperator> all_words(int n) {
  std::vector<PauliOperator> out;
  for (Mask x = 0; x < bit(n); ++x)
    for (Mask z = 0; z < bit(n); ++z)
      for (int phase = 0; phase < 4; phase += 2) out.push_back({n, x, z, phase});
  return out;
}

}  // namespace

TEST_CASE("words parse and print in signed form") {
  CHECK(PauliOperator::parse("XZI").str() == "XZI");
  CHECK(PauliOperator::parse("-YXY").str() == "-YXY");
  CHECK(PauliOperator::parse("+ZZ").str() == "ZZ");
  CHECK(PauliOperator::parse("iX").str() == "iX");
  CHECK(PauliOperator::parse("-YXY").letters() == "YXY");
  CHECK(PauliOperator::parse("-YXY").sign() == -1);
  CHECK(PauliOperator::parse("XIY").weight() == 2);
  CHECK(PauliOperator::parse("XIY").letter(3) == Letter::Y);
  CHECK_THROWS_AS(PauliOperator::parse("XAZ"), ParseError);
  CHECK_THROWS_AS(PauliOperator::parse("X Z"), ParseError);
  CHECK_THROWS(PauliOperator::parse("iX").sign());
}

TEST_CASE("products match dense matrix multiplication") {
  const auto words = all_words(2);
  for (const auto& a : words) {
    for (const auto& b : words) {
      const PauliOperator ab = multiply(a, b);
      CHECK(dense(ab) == oracle::multiply(dense(a), dense(b)));
      const bool dense_commute = oracle::multiply(dense(a), dense(b)) == oracle::multiply(dense(b), dense(a));
      CHECK(commutes(a, b) == dense_commute);
    }
  }
}

TEST_CASE("generators put X on the vertex and Z on its neighbours") {
  const Graph g = parse_graph("12,23");
  CHECK(generator_from_graph(g, 1).str() == "XZI");
  CHECK(generator_from_graph(g, 2).str() == "ZXZ");
  CHECK(generator_from_graph(g, 3).str() == "IZX");
  for (std::uint64_t code : connected_graph_classes(5)) {
    const Graph h = graph_from_code(5, code);
    const auto expected = oracle::generators(5, h.edges());
    for (int v = 1; v <= 5; ++v) CHECK(generator_from_graph(h, v).str() == expected[static_cast<std::size_t>(v - 1)]);
  }
}

TEST_CASE("stabilizer group of the path on three vertices") {
  // published values: element list in generator-subset order
  const std::vector<std::string> expected = {"XZI", "ZXZ", "YYZ", "IZX", "XIX", "ZYY", "-YXY"};
  const StabilizerGroup s = enumerate_group(parse_graph("12,23"));
  CHECK(group_words(s) == expected);
  CHECK(beta(s) == 1);
  CHECK(weight_range(s).min == 2);
  CHECK(weight_range(s).max == 3);
  CHECK(min_distance(s) == 2);
  CHECK(s.element(0b101).str() == "XIX");
}

TEST_CASE("stabilizer groups of a graph and its local complement") {
  // published values: S(G) and S(G^1) for edges {1,2},{1,3}
  const Graph g = parse_graph("12,13");
  CHECK(group_words(enumerate_group(g)) ==
        std::vector<std::string>{"XZZ", "ZXI", "YYZ", "ZIX", "YZY", "IXX", "-XYY"});
  CHECK(group_words(enumerate_group(local_complement(g, 1))) ==
        std::vector<std::string>{"XZZ", "ZXZ", "YYI", "ZZX", "YIY", "IYY", "-XXX"});
}

TEST_CASE("every group element is the dense product of its generators") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const Graph g = graph_from_code(n, code);
      const StabilizerGroup s = enumerate_group(g);
      REQUIRE(s.size() == (std::size_t{1} << n) - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Mask subset = StabilizerGroup::subset_of(i);
        oracle::Matrix product = oracle::pauli_matrix(std::string(static_cast<std::size_t>(n), 'I'));
        for (int v = 1; v <= n; ++v) {
          if (subset & bit(v - 1)) product = oracle::multiply(product, dense(generator_from_graph(g, v)));
        }
        CHECK(dense(s[i]) == product);
        CHECK((s[i].phase == 0 || s[i].phase == 2));
      }
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) CHECK(commutes(s[i], s[j]));
    }
  }
}
