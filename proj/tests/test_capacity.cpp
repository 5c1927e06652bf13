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


#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kotzig/capacity.hpp"
#include "kotzig/orbit.hpp"

using namespace kotzig;

namespace {

Fixture load(const std::string& name) {
  std::ifstream in(std::string(KOTZIG_FIXTURE_DIR) + "/" + name + ".json");
  REQUIRE(in);
  return fixture_from_json(nlohmann::json::parse(in));
}

std::vector<ExactScalar> ket(std::initializer_list<const char*> entries) {
  std::vector<ExactScalar> v;
  for (const char* e : entries) v.push_back(ExactScalar::parse(e));
  return v;
}

ExactScalar first_trace(const ProtocolVerdict& v, const std::string& kind) {
  for (const auto& f : v.failures)
    if (f.kind == kind) return f.trace;
  FAIL("no failure of kind " << kind);
  return {};
}

}  // namespace

TEST_CASE("dense operators") {
  const DenseOperator zero = DenseOperator::outer(ket({"1", "0"}));
  const DenseOperator plus = DenseOperator::outer(ket({"r2/2", "r2/2"}));
  CHECK(zero.is_projector());
  CHECK(plus.is_projector());
  CHECK(DenseOperator::identity(3).is_identity());
  CHECK_FALSE(DenseOperator::outer(ket({"1", "1"})).is_projector());
  CHECK(trace_of_product(zero, plus) == ExactScalar::parse("1/2"));
  CHECK((zero * plus).trace() == ExactScalar::parse("1/2"));
  CHECK(zero + DenseOperator::outer(ket({"0", "1"})) == DenseOperator::identity(2));
  const DenseOperator k = kron(zero, plus);
  CHECK(k.dimension() == 4);
  CHECK(k.is_projector());
  CHECK(k.trace() == ExactScalar(1));
  const DenseOperator yplus = DenseOperator::outer({ExactScalar::inv_sqrt2(), ExactScalar::inv_sqrt2() * ExactScalar::i()});
  CHECK(yplus.adjoint() == yplus);
  CHECK(yplus.is_projector());
}

TEST_CASE("factorized traces match dense expansion") {
  const ProjectorExact a{{DenseOperator::outer(ket({"1", "0"})), DenseOperator::identity(3),
                         DenseOperator::outer(ket({"r2/2", "-r2/2"}))}};
  const ProjectorExact b{{DenseOperator::outer(ket({"r2/2", "r2/2"})), DenseOperator::outer(ket({"0", "1", "0"})),
                         DenseOperator::identity(2)}};
  CHECK(a.dimension() == 12);
  CHECK(a.trace() == ExactScalar(3));
  CHECK(a.is_projector());
  CHECK(a.dense().trace() == a.trace());
  CHECK(trace_of_product(a, b) == trace_of_product(a.dense(), b.dense()));
  CHECK(trace_of_product(a, b) == ExactScalar::parse("1/2"));
  CHECK_THROWS_AS(a.dense(8), CapabilityError);
}

TEST_CASE("fixture suite is classified without errors") {
  int good = 0, bad = 0;
  for (const auto& entry : std::filesystem::directory_iterator(KOTZIG_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const Fixture fx = fixture_from_json(nlohmann::json::parse(in));
    const ProtocolVerdict v = verify_protocol(fx.family);
    INFO(fx.family.name);
    CHECK(v.orthogonality_ok == fx.expect_orthogonality);
    CHECK(v.completeness_ok == fx.expect_completeness);
    CHECK(verify_orthogonality_serial(fx.family).orthogonality_ok == fx.expect_orthogonality);
    (fx.expect_orthogonality && fx.expect_completeness ? good : bad) += 1;
  }
  CHECK(good >= 4);
  CHECK(bad >= 4);
}

TEST_CASE("fixture failures carry exact traces") {
  CHECK(first_trace(verify_protocol(load("bad_incomplete_rank").family), "completeness") == ExactScalar(2));
  CHECK(first_trace(verify_protocol(load("bad_edge_shares_state").family), "orthogonality") == ExactScalar(1));
  CHECK(first_trace(verify_protocol(load("bad_edge_half_overlap").family), "orthogonality") ==
        ExactScalar::parse("1/2"));
  CHECK(first_trace(verify_protocol(load("bad_overlap_within_message").family), "overlap") ==
        ExactScalar::parse("1/2"));
  const ProtocolVerdict v = verify_protocol(load("bad_unnormalized_vector").family);
  bool not_projector = false;
  for (const auto& f : v.failures) not_projector = not_projector || f.kind == "not_projector";
  CHECK(not_projector);
}

TEST_CASE("fixtures round-trip through json") {
  const Fixture fx = load("good_bell_basis");
  nlohmann::json j = family_to_json(fx.family);
  j["expect"] = {{"orthogonality", true}, {"completeness", true}};
  const Fixture back = fixture_from_json(j);
  CHECK(back.family.factor_dims == fx.family.factor_dims);
  CHECK(back.family.edges == fx.family.edges);
  REQUIRE(back.family.messages.size() == fx.family.messages.size());
  for (std::size_t m = 0; m < back.family.messages.size(); ++m)
    for (std::size_t k = 0; k < back.family.messages[m].size(); ++k)
      CHECK(back.family.messages[m][k].dense() == fx.family.messages[m][k].dense());
  CHECK_THROWS(fixture_from_json(nlohmann::json{{"factor_dims", {2}}, {"messages", {{{{"factors", {{{"vector", {1}}}}}}}}},
                                                {"expect", {{"orthogonality", true}, {"completeness", true}}}}));
}

TEST_CASE("constructed families under both ancilla readings") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t code : connected_graph_classes(n)) {
      const Graph g = graph_from_code(n, code);
      CHECK(capacity_upper_bound(g) == (1 << n) - 1);
      for (AncillaMode mode : {AncillaMode::PerPosition, AncillaMode::Shared}) {
        const MeasurementFamily f = build_measurement_family(g, mode);
        const std::size_t expected_dim = mode == AncillaMode::PerPosition
                                             ? std::size_t{1} << (n * (n - 1))
                                             : (std::size_t{1} << n) * static_cast<std::size_t>(n - 1);
        CHECK(f.dimension() == expected_dim);
        CHECK(f.messages.size() == static_cast<std::size_t>((1 << n) - 1));
        const ProtocolVerdict parallel = verify_orthogonality(f);
        const ProtocolVerdict serial = verify_orthogonality_serial(f);
        CHECK(parallel.orthogonality_ok);
        CHECK(serial.orthogonality_ok);
        const ProtocolVerdict full = verify_protocol(f);
        CHECK(full.to_json() == verify_protocol(build_measurement_family(g, mode)).to_json());
        // every message falls short of the identity by a positive defect
        CHECK_FALSE(full.completeness_ok);
        for (const auto& f2 : full.failures) CHECK(f2.kind == "completeness");
      }
    }
  }
}

TEST_CASE("ancilla mode names") {
  CHECK(parse_ancilla_mode("shared") == AncillaMode::Shared);
  CHECK(std::string(ancilla_mode_name(AncillaMode::PerPosition)) == "per-position");
  CHECK_THROWS(parse_ancilla_mode("both"));
  CHECK_THROWS_AS(build_measurement_family(Graph::path(kMaxProtocolQubits + 1), AncillaMode::Shared), CapabilityError);
}
