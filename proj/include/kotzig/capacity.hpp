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

#ifndef KOTZIG_CAPACITY_HPP
#define KOTZIG_CAPACITY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "kotzig/events.hpp"
#include "kotzig/exact_scalar.hpp"
#include "kotzig/graph.hpp"

namespace kotzig {

/// Square matrix with exact entries, row-major.
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim);
  static DenseOperator identity(std::size_t dim);
  /// |v><v| (v need not be normalized; is_projector will say so).
  static DenseOperator outer(const std::vector<ExactScalar>& v);

  std::size_t dimension() const noexcept { return dim_; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  DenseOperator adjoint() const;
  ExactScalar trace() const;
  bool is_projector() const;  // P = P^dagger = P^2, exactly
  bool is_identity() const;

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<ExactScalar> data_;
};

DenseOperator kron(const DenseOperator& a, const DenseOperator& b);
/// tr(A B) without forming the product.
ExactScalar trace_of_product(const DenseOperator& a, const DenseOperator& b);

/// Tensor product of small factors; traces of products factorize.
struct ProjectorExact {
  std::vector<DenseOperator> factors;

  std::size_t dimension() const;
  ExactScalar trace() const;
  bool is_projector() const;  // every factor is a projector
  /// Full matrix; throws CapabilityError above `max_dimension`.
  DenseOperator dense(std::size_t max_dimension = 256) const;
};

ExactScalar trace_of_product(const ProjectorExact& a, const ProjectorExact& b);

enum class AncillaMode {
  PerPosition,  // one register of dimension 2^(n-2) per qubit: total 2^(n(n-1))
  Shared,       // one register of dimension n-1: total 2^n (n-1)
};

const char* ancilla_mode_name(AncillaMode m);
AncillaMode parse_ancilla_mode(const std::string& text);

struct MeasurementFamily {
  std::string name;
  std::vector<std::size_t> factor_dims;
  std::vector<std::vector<ProjectorExact>> messages;  // one measurement per message
  /// pairs (message, outcome) that must be orthogonal
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> edges;

  std::size_t dimension() const;
};

inline constexpr int kMaxProtocolQubits = 6;

/// Alice's measurements built from the canonical representation: qubit k
/// of an event's projector is the eigenvector of its letter (identity at I
/// positions), and the ancilla records the occurrence number of that
/// eigenvector among the events of the same element. Edges are H's edges
/// between different messages.
MeasurementFamily build_measurement_family(const Graph& g, AncillaMode mode);

struct ProtocolFailure {
  std::string kind;  // "orthogonality", "overlap", "completeness", "not_projector"
  std::size_t message = 0;
  std::pair<std::size_t, std::size_t> a{0, 0};
  std::pair<std::size_t, std::size_t> b{0, 0};
  ExactScalar trace;  // offending tr(PQ) or defect trace
};

struct ProtocolVerdict {
  bool orthogonality_ok = true;
  bool completeness_ok = true;
  std::size_t dimension = 0;
  std::vector<ExactScalar> message_ranks;  // sum of traces per message
  std::vector<ProtocolFailure> failures;

  void merge(const ProtocolVerdict& other);
  bool ok() const { return orthogonality_ok && completeness_ok; }
  nlohmann::json to_json(std::size_t max_failures = 32) const;
};

/// tr(P_u P_v) = 0 on every listed edge.
ProtocolVerdict verify_orthogonality(const MeasurementFamily& family);
/// Serial reference for the same test.
ProtocolVerdict verify_orthogonality_serial(const MeasurementFamily& family);
/// Each message's projectors sum to the identity: they must be projectors,
/// pairwise trace-orthogonal, and their traces must add up to the dimension.
/// The defect trace D - sum tr is reported per failing message.
ProtocolVerdict verify_completeness(const MeasurementFamily& family);
ProtocolVerdict verify_protocol(const MeasurementFamily& family);

/// 2^n - 1, read off the exact sandwich certificate (throws if it fails).
std::int64_t capacity_upper_bound(const Graph& g);

/// Fixture files: {"name", "factor_dims", "messages": [[{"factors": [...]}]],
/// "edges": [[[m, j], [m', j']]], "expect": {"orthogonality", "completeness"}}.
/// A factor is {"identity": true}, {"vector": [...]} or {"matrix": [[...]]}
/// with entries in ExactScalar notation.
struct Fixture {
  MeasurementFamily family;
  bool expect_orthogonality = true;
  bool expect_completeness = true;
};

Fixture fixture_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const MeasurementFamily& family);

}  // namespace kotzig

#endif  // KOTZIG_CAPACITY_HPP
