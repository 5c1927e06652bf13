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

#include "kotzig/capacity.hpp"

#include <algorithm>
#include <array>

#include "kotzig/amplitudes.hpp"
#include "kotzig/parameters.hpp"

namespace kotzig {

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1;
  return m;
}

DenseOperator DenseOperator::outer(const std::vector<ExactScalar>& v) {
  DenseOperator m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * v[c].conj();
  }
  return m;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c).conj();
  }
  return m;
}

ExactScalar DenseOperator::trace() const {
  ExactScalar t;
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

bool DenseOperator::is_projector() const { return *this == adjoint() && *this == *this * *this; }

bool DenseOperator::is_identity() const { return *this == identity(dim_); }

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("operator dimensions differ");
  DenseOperator m(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) m(r, c) += a(r, k) * b(k, c);
    }
  }
  return m;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("operator dimensions differ");
  DenseOperator m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const std::size_t da = a.dimension(), db = b.dimension();
  DenseOperator m(da * db);
  for (std::size_t r1 = 0; r1 < da; ++r1) {
    for (std::size_t c1 = 0; c1 < da; ++c1) {
      if (a(r1, c1).is_zero()) continue;
      for (std::size_t r2 = 0; r2 < db; ++r2) {
        for (std::size_t c2 = 0; c2 < db; ++c2) m(r1 * db + r2, c1 * db + c2) = a(r1, c1) * b(r2, c2);
      }
    }
  }
  return m;
}

ExactScalar trace_of_product(const DenseOperator& a, const DenseOperator& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("operator dimensions differ");
  ExactScalar t;
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    for (std::size_t c = 0; c < a.dimension(); ++c) t += a(r, c) * b(c, r);
  }
  return t;
}

// ---------------------------------------------------------------------------

std::size_t ProjectorExact::dimension() const {
  std::size_t d = 1;
  for (const auto& f : factors) d *= f.dimension();
  return d;
}

ExactScalar ProjectorExact::trace() const {
  ExactScalar t = 1;
  for (const auto& f : factors) t *= f.trace();
  return t;
}

bool ProjectorExact::is_projector() const {
  return std::all_of(factors.begin(), factors.end(), [](const DenseOperator& f) { return f.is_projector(); });
}

DenseOperator ProjectorExact::dense(std::size_t max_dimension) const {
  if (dimension() > max_dimension) {
    throw CapabilityError("dense projector of dimension " + std::to_string(dimension()) + " exceeds " +
                          std::to_string(max_dimension));
  }
  DenseOperator m = DenseOperator::identity(1);
  for (const auto& f : factors) m = kron(m, f);
  return m;
}

ExactScalar trace_of_product(const ProjectorExact& a, const ProjectorExact& b) {
  if (a.factors.size() != b.factors.size()) throw std::invalid_argument("projector layouts differ");
  ExactScalar t = 1;
  for (std::size_t k = 0; k < a.factors.size() && !t.is_zero(); ++k) {
    t *= trace_of_product(a.factors[k], b.factors[k]);
  }
  return t;
}

// ---------------------------------------------------------------------------

const char* ancilla_mode_name(AncillaMode m) {
  return m == AncillaMode::PerPosition ? "per-position" : "shared";
}

AncillaMode parse_ancilla_mode(const std::string& text) {
  if (text == "per-position") return AncillaMode::PerPosition;
  if (text == "shared") return AncillaMode::Shared;
  throw std::invalid_argument("unknown ancilla mode '" + text + "' (per-position | shared)");
}

std::size_t MeasurementFamily::dimension() const {
  std::size_t d = 1;
  for (std::size_t f : factor_dims) d *= f;
  return d;
}

namespace {

DenseOperator basis_projector(std::size_t dim, std::size_t index) {
  DenseOperator m(dim);
  m(index, index) = 1;
  return m;
}

}  // namespace

MeasurementFamily build_measurement_family(const Graph& g, AncillaMode mode) {
  const int n = g.size();
  if (n < 2 || n > kMaxProtocolQubits) {
    throw CapabilityError("measurement family supports 2 <= n <= " + std::to_string(kMaxProtocolQubits));
  }
  const EventGraph h = build_H(g);
  const auto& group = h.group();
  MeasurementFamily fam;
  fam.name = format_graph(g) + " (" + ancilla_mode_name(mode) + ")";
  const std::size_t local = std::size_t{1} << (n - 2);
  const std::size_t shared = static_cast<std::size_t>(n - 1);
  if (mode == AncillaMode::PerPosition) {
    for (int k = 0; k < n; ++k) {
      fam.factor_dims.push_back(2);
      fam.factor_dims.push_back(local);
    }
  } else {
    fam.factor_dims.assign(static_cast<std::size_t>(n), 2);
    fam.factor_dims.push_back(shared);
  }

  std::vector<std::pair<std::size_t, std::size_t>> slot(h.vertex_count());
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& s = group[i];
    const int first = std::countr_zero(s.support());
    std::vector<ProjectorExact> measurement;
    // occurrence counters per position and eigenvector, in event order
    std::vector<std::array<std::size_t, 2>> seen(static_cast<std::size_t>(n), {0, 0});
    for (std::size_t v = h.clique_begin(i); v < h.clique_end(i); ++v) {
      const Mask outcomes = h.event(v).outcomes;
      ProjectorExact p;
      std::size_t shared_label = 0;
      for (int q = 0; q < n; ++q) {
        const Letter l = s.letter(q + 1);
        if (l == Letter::I) {
          p.factors.push_back(DenseOperator::identity(2));
          if (mode == AncillaMode::PerPosition) p.factors.push_back(DenseOperator::identity(local));
          continue;
        }
        const bool minus = (outcomes >> q) & 1;
        const auto vec = eigenvector(l, minus);
        p.factors.push_back(DenseOperator::outer({vec[0], vec[1]}));
        const std::size_t nu = ++seen[static_cast<std::size_t>(q)][minus];  // 1-based
        if (mode == AncillaMode::PerPosition) {
          p.factors.push_back(basis_projector(local, nu - 1));
        } else if (q == first) {
          shared_label = (nu - 1) % shared;
        }
      }
      if (mode == AncillaMode::Shared) p.factors.push_back(basis_projector(shared, shared_label));
      slot[v] = {i, measurement.size()};
      measurement.push_back(std::move(p));
    }
    fam.messages.push_back(std::move(measurement));
  }
  for (std::size_t u = 0; u < h.vertex_count(); ++u) {
    for (std::size_t v : h.neighbours(u)) {
      if (v > u && slot[u].first != slot[v].first) fam.edges.push_back({slot[u], slot[v]});
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------

void ProtocolVerdict::merge(const ProtocolVerdict& other) {
  orthogonality_ok = orthogonality_ok && other.orthogonality_ok;
  completeness_ok = completeness_ok && other.completeness_ok;
  dimension = std::max(dimension, other.dimension);
  if (message_ranks.empty()) message_ranks = other.message_ranks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

nlohmann::json ProtocolVerdict::to_json(std::size_t max_failures) const {
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& r : message_ranks) ranks.push_back(r.str());
  nlohmann::json fails = nlohmann::json::array();
  for (std::size_t k = 0; k < failures.size() && k < max_failures; ++k) {
    const auto& f = failures[k];
    fails.push_back({{"kind", f.kind},
                     {"message", f.message},
                     {"a", {f.a.first, f.a.second}},
                     {"b", {f.b.first, f.b.second}},
                     {"trace", f.trace.str()}});
  }
  return {{"orthogonality_ok", orthogonality_ok},
          {"completeness_ok", completeness_ok},
          {"dimension", dimension},
          {"message_ranks", ranks},
          {"failure_count", failures.size()},
          {"failures", fails}};
}

namespace {

const ProjectorExact& at(const MeasurementFamily& f, const std::pair<std::size_t, std::size_t>& idx) {
  if (idx.first >= f.messages.size() || idx.second >= f.messages[idx.first].size()) {
    throw std::out_of_range("edge refers to a missing projector");
  }
  return f.messages[idx.first][idx.second];
}

ProtocolVerdict orthogonality_verdict(const MeasurementFamily& family, std::vector<ProtocolFailure> failures) {
  ProtocolVerdict v;
  v.dimension = family.dimension();
  v.orthogonality_ok = failures.empty();
  v.failures = std::move(failures);
  return v;
}

}  // namespace

ProtocolVerdict verify_orthogonality(const MeasurementFamily& family) {
  const auto& edges = family.edges;
  for (const auto& e : edges) {
    at(family, e.first);
    at(family, e.second);
  }
  std::vector<std::vector<ProtocolFailure>> per_edge(edges.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [a, b] = edges[k];
    const ExactScalar t = trace_of_product(family.messages[a.first][a.second], family.messages[b.first][b.second]);
    if (!t.is_zero()) per_edge[k].push_back({"orthogonality", a.first, a, b, t});
  }
  std::vector<ProtocolFailure> failures;
  for (auto& f : per_edge) failures.insert(failures.end(), f.begin(), f.end());
  return orthogonality_verdict(family, std::move(failures));
}

ProtocolVerdict verify_orthogonality_serial(const MeasurementFamily& family) {
  std::vector<ProtocolFailure> failures;
  for (const auto& [a, b] : family.edges) {
    const ExactScalar t = trace_of_product(at(family, a), at(family, b));
    if (!t.is_zero()) failures.push_back({"orthogonality", a.first, a, b, t});
  }
  return orthogonality_verdict(family, std::move(failures));
}

ProtocolVerdict verify_completeness(const MeasurementFamily& family) {
  ProtocolVerdict v;
  v.dimension = family.dimension();
  const ExactScalar full = static_cast<std::int64_t>(v.dimension);
  for (std::size_t m = 0; m < family.messages.size(); ++m) {
    const auto& ps = family.messages[m];
    ExactScalar rank;
    bool sound = true;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (ps[j].dimension() != v.dimension) {
        throw std::invalid_argument("projector " + std::to_string(j) + " of message " + std::to_string(m) +
                                    " has the wrong dimension");
      }
      if (!ps[j].is_projector()) {
        v.failures.push_back({"not_projector", m, {m, j}, {m, j}, ps[j].trace()});
        sound = false;
      }
      rank += ps[j].trace();
      for (std::size_t k = j + 1; k < ps.size(); ++k) {
        const ExactScalar t = trace_of_product(ps[j], ps[k]);
        if (!t.is_zero()) {
          v.failures.push_back({"overlap", m, {m, j}, {m, k}, t});
          sound = false;
        }
      }
    }
    v.message_ranks.push_back(rank);
    if (!(rank == full)) {
      v.failures.push_back({"completeness", m, {m, 0}, {m, 0}, full - rank});
      sound = false;
    }
    v.completeness_ok = v.completeness_ok && sound;
  }
  return v;
}

ProtocolVerdict verify_protocol(const MeasurementFamily& family) {
  ProtocolVerdict v = verify_orthogonality(family);
  v.merge(verify_completeness(family));
  return v;
}

std::int64_t capacity_upper_bound(const Graph& g) {
  const SandwichCertificate cert = sandwich_certificate(g);
  if (!cert.valid) throw std::logic_error("sandwich certificate rejected for " + format_graph(g));
  return cert.upper_value;
}

// ---------------------------------------------------------------------------

namespace {

ExactScalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or exact-scalar strings");
}

DenseOperator factor_from_json(const nlohmann::json& j, std::size_t dim) {
  if (j.contains("identity")) return DenseOperator::identity(dim);
  if (j.contains("vector")) {
    std::vector<ExactScalar> v;
    for (const auto& e : j.at("vector")) v.push_back(scalar_from_json(e));
    if (v.size() != dim) throw std::invalid_argument("factor vector has the wrong length");
    return DenseOperator::outer(v);
  }
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    if (rows.size() != dim) throw std::invalid_argument("factor matrix has the wrong size");
    DenseOperator m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (rows[r].size() != dim) throw std::invalid_argument("factor matrix is not square");
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(rows[r][c]);
    }
    return m;
  }
  throw std::invalid_argument("factor needs one of identity, vector, matrix");
}

std::pair<std::size_t, std::size_t> index_from_json(const nlohmann::json& j) {
  return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

nlohmann::json factor_to_json(const DenseOperator& f) {
  if (f.is_identity()) return {{"identity", true}};
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < f.dimension(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < f.dimension(); ++c) row.push_back(f(r, c).str());
    rows.push_back(row);
  }
  return {{"matrix", rows}};
}

}  // namespace

Fixture fixture_from_json(const nlohmann::json& j) {
  Fixture fx;
  auto& fam = fx.family;
  fam.name = j.value("name", "");
  fam.factor_dims = j.at("factor_dims").get<std::vector<std::size_t>>();
  for (const auto& msg : j.at("messages")) {
    std::vector<ProjectorExact> measurement;
    for (const auto& pj : msg) {
      const auto& fs = pj.at("factors");
      if (fs.size() != fam.factor_dims.size()) throw std::invalid_argument("projector factor count mismatch");
      ProjectorExact p;
      for (std::size_t k = 0; k < fs.size(); ++k) p.factors.push_back(factor_from_json(fs[k], fam.factor_dims[k]));
      measurement.push_back(std::move(p));
    }
    fam.messages.push_back(std::move(measurement));
  }
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) fam.edges.push_back({index_from_json(e.at(0)), index_from_json(e.at(1))});
  }
  const auto& expect = j.at("expect");
  fx.expect_orthogonality = expect.at("orthogonality").get<bool>();
  fx.expect_completeness = expect.at("completeness").get<bool>();
  return fx;
}

nlohmann::json family_to_json(const MeasurementFamily& family) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& msg : family.messages) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : msg) {
      nlohmann::json fs = nlohmann::json::array();
      for (const auto& f : p.factors) fs.push_back(factor_to_json(f));
      ps.push_back({{"factors", fs}});
    }
    messages.push_back(ps);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : family.edges) edges.push_back({{a.first, a.second}, {b.first, b.second}});
  return {{"name", family.name}, {"factor_dims", family.factor_dims}, {"messages", messages}, {"edges", edges}};
}

}  // namespace kotzig
