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

#include "kotzig/clique_atlas.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace kotzig {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t v) { return (b[v / 64] >> (v % 64)) & 1; }

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const EventGraph& h) : h_(h), words_(h.words_per_row()) {}

  std::vector<VertexSet> run() {
    Bits p(words_, 0), x(words_, 0);
    for (std::size_t v = 0; v < h_.vertex_count(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    VertexSet r;
    expand(r, p, x);
    for (auto& c : out_) std::sort(c.begin(), c.end());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(VertexSet& r, Bits& p, Bits& x) {
    if (empty(p)) {
      if (empty(x)) out_.push_back(r);
      return;
    }
    // pivot: vertex of P u X with the most neighbours in P
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t m = p[w] | x[w]; m != 0; m &= m - 1) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(m));
        const auto row = h_.row(u);
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_; ++k) c += static_cast<std::size_t>(std::popcount(p[k] & row[k]));
        if (!have || c > best) pivot = u, best = c, have = true;
      }
    }
    const auto prow = h_.row(pivot);
    Bits candidates(words_);
    for (std::size_t w = 0; w < words_; ++w) candidates[w] = p[w] & ~prow[w];
    Bits np(words_), nx(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t m = candidates[w]; m != 0; m &= m - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(m));
        const auto row = h_.row(v);
        for (std::size_t k = 0; k < words_; ++k) {
          np[k] = p[k] & row[k];
          nx[k] = x[k] & row[k];
        }
        r.push_back(v);
        expand(r, np, nx);
        r.pop_back();
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }

  const EventGraph& h_;
  std::size_t words_;
  std::vector<VertexSet> out_;
};

Mask letters_agree(const PauliOperator& a, const PauliOperator& b) { return shared_letters(a, b); }

}  // namespace

std::vector<VertexSet> maximal_cliques(const EventGraph& h, std::size_t max_vertices) {
  if (h.vertex_count() > max_vertices) {
    throw CapabilityError("maximal clique enumeration limited to " + std::to_string(max_vertices) +
                          " vertices, H has " + std::to_string(h.vertex_count()));
  }
  auto cliques = BronKerbosch(h).run();
  for (const auto& c : cliques) {
    if (!is_maximal_clique(h, c)) throw std::logic_error("enumerated clique is not maximal");
  }
  return cliques;
}

bool is_clique(const EventGraph& h, const VertexSet& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set[a] == set[b] || !h.adjacent(set[a], set[b])) return false;
    }
  }
  return true;
}

bool is_maximal_clique(const EventGraph& h, const VertexSet& set) {
  if (!is_clique(h, set)) return false;
  Bits common(h.words_per_row(), ~std::uint64_t{0});
  for (std::size_t v : set) {
    const auto row = h.row(v);
    for (std::size_t w = 0; w < common.size(); ++w) common[w] &= row[w];
  }
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    if (test(common, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

OverlapFamily overlap_family(std::vector<PauliOperator> members) {
  if (members.empty()) throw std::invalid_argument("overlap family needs at least one member");
  Mask overlap = members.front().support();
  for (const auto& m : members) {
    if (m.n != members.front().n) throw std::invalid_argument("family members differ in size");
    if (m.phase & 1) throw std::invalid_argument("family member " + m.str() + " is not Hermitian");
    overlap &= letters_agree(members.front(), m);
  }
  OverlapFamily r;
  r.members = std::move(members);
  r.overlap_positions = overlap;
  r.mu = popcount(overlap);
  if (r.mu == 0) throw std::invalid_argument("family members share no common letter");
  return r;
}

OverlapFamily overlap_family(const StabilizerGroup& s, std::vector<int> indices) {
  std::vector<PauliOperator> members;
  std::set<int> seen;
  for (int j : indices) {
    if (j < 0 || static_cast<std::size_t>(j) >= s.size() || !seen.insert(j).second) {
      throw std::invalid_argument("bad or repeated element index " + std::to_string(j));
    }
    members.push_back(s[static_cast<std::size_t>(j)]);
  }
  OverlapFamily r = overlap_family(std::move(members));
  r.indices = std::move(indices);
  r.maximal = true;
  const auto& ref = r.members.front();
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (seen.count(static_cast<int>(j))) continue;
    if ((letters_agree(ref, s[j]) & r.overlap_positions) == r.overlap_positions) {
      r.maximal = false;
      break;
    }
  }
  return r;
}

std::vector<int> OverlapPartition::cumulative() const {
  std::vector<int> b;
  int acc = 0;
  for (int a : shares) b.push_back(acc += a);
  return b;
}

void OverlapPartition::validate(const OverlapFamily& r) const {
  if (shares.size() != r.members.size()) {
    throw std::invalid_argument("partition has " + std::to_string(shares.size()) + " shares for " +
                                std::to_string(r.members.size()) + " members");
  }
  long total = 0;
  for (int a : shares) {
    if (a < 1) throw std::invalid_argument("every share must be at least 1");
    total += a;
  }
  if (r.mu >= 31 || total != (1L << r.mu)) {
    throw std::invalid_argument("shares must sum to 2^mu = " + std::to_string(1L << std::min(r.mu, 30)));
  }
}

PatternAssignment sequential_assignment(const OverlapFamily& r, const OverlapPartition& p) {
  p.validate(r);
  PatternAssignment out(r.members.size());
  Mask next = 0;
  for (std::size_t j = 0; j < r.members.size(); ++j) {
    for (int a = 0; a < p.shares[j]; ++a) out[j].push_back(deposit_bits(next++, r.overlap_positions));
  }
  return out;
}

std::vector<FamilyEvent> clique_from_partition(const OverlapFamily& r, const OverlapPartition& p,
                                               const PatternAssignment& assignment) {
  p.validate(r);
  if (assignment.size() != r.members.size()) throw std::invalid_argument("assignment size mismatch");
  std::set<Mask> used;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (assignment[j].size() != static_cast<std::size_t>(p.shares[j])) {
      throw std::invalid_argument("member " + std::to_string(j) + " holds " +
                                  std::to_string(assignment[j].size()) + " patterns, share is " +
                                  std::to_string(p.shares[j]));
    }
    for (Mask pattern : assignment[j]) {
      if (pattern & ~r.overlap_positions) throw std::invalid_argument("pattern outside overlap positions");
      if (!used.insert(pattern).second) throw std::invalid_argument("pattern assigned twice");
    }
  }
  // shares sum to 2^mu and patterns are distinct, so every pattern is used

  std::vector<FamilyEvent> out;
  for (std::size_t j = 0; j < r.members.size(); ++j) {
    for (const Event& e : events_of_stabilizer(r.members[j])) {
      const Mask seen = e.outcomes & r.overlap_positions;
      if (std::find(assignment[j].begin(), assignment[j].end(), seen) != assignment[j].end()) {
        out.push_back({static_cast<int>(j), e.outcomes});
      }
    }
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    const auto& sa = r.members[static_cast<std::size_t>(out[a].member)];
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      const auto& sb = r.members[static_cast<std::size_t>(out[b].member)];
      if ((shared_letters(sa, sb) & (out[a].outcomes ^ out[b].outcomes)) == 0) {
        throw std::logic_error("constructed event set is not a clique");
      }
    }
  }
  return out;
}

VertexSet clique_from_partition(const EventGraph& h, const OverlapFamily& r, const OverlapPartition& p,
                                const PatternAssignment& assignment) {
  if (r.indices.size() != r.members.size()) throw std::invalid_argument("family is not indexed into H");
  VertexSet out;
  for (const FamilyEvent& e : clique_from_partition(r, p, assignment)) {
    const long v = h.find(r.members[static_cast<std::size_t>(e.member)], e.outcomes);
    if (v < 0 || h.event(static_cast<std::size_t>(v)).stab_index != r.indices[static_cast<std::size_t>(e.member)]) {
      throw std::invalid_argument("family member is not an element of H's group");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  std::sort(out.begin(), out.end());
  if (!is_clique(h, out)) throw std::logic_error("constructed vertex set is not a clique in H");
  return out;
}

std::int64_t partition_clique_size(const OverlapFamily& r, const OverlapPartition& p) {
  p.validate(r);
  std::int64_t numerator = 0;
  for (std::size_t j = 0; j < r.members.size(); ++j) {
    numerator += std::int64_t{p.shares[j]} << r.members[j].weight();
  }
  const std::int64_t denominator = std::int64_t{1} << (r.mu + 1);
  if (numerator % denominator) throw std::invalid_argument("clique size formula is not integral here");
  return numerator / denominator;
}

std::uint64_t count_cliques_for(int mu, const std::vector<int>& shares) {
  if (mu < 0 || mu > 20) throw CapabilityError("overlap size out of range");
  const auto binom = [](std::uint64_t n, std::uint64_t k) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  std::uint64_t remaining = std::uint64_t{1} << mu, total = 1;
  for (int a : shares) {
    if (a < 1 || static_cast<std::uint64_t>(a) > remaining) {
      throw std::invalid_argument("shares must be positive and fit in 2^mu");
    }
    total *= binom(remaining, static_cast<std::uint64_t>(a));
    remaining -= static_cast<std::uint64_t>(a);
  }
  if (remaining != 0) throw std::invalid_argument("shares must sum to 2^mu");
  return total;
}

std::uint64_t count_cliques_for(const OverlapFamily& r, const OverlapPartition& p) {
  p.validate(r);
  return count_cliques_for(r.mu, p.shares);
}

// ---------------------------------------------------------------------------

const char* attainment_name(Attainment a) {
  switch (a) {
    case Attainment::Attained: return "attained";
    case Attainment::NotAttained: return "not_attained";
    default: return "unknown";
  }
}

nlohmann::json CliqueBoundsReport::to_json(const EventGraph& h) const {
  const auto labels = [&](const VertexSet& set) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t v : set) a.push_back(h.label(v));
    return a;
  };
  nlohmann::json j = {
      {"graph", graph},
      {"n", n},
      {"d_H", d_H},
      {"lower_bound", lower_bound},
      {"upper_bound", upper_bound},
      {"enumerated", enumerated},
      {"lower", attainment_name(lower)},
      {"upper", attainment_name(upper)},
      {"min_witness", labels(min_witness)},
      {"max_witness", labels(max_witness)},
      {"violations", violations},
      {"bounds_hold", bounds_hold()},
  };
  if (enumerated) {
    j["maximal_clique_count"] = maximal_clique_count;
    j["observed_min"] = observed_min;
    j["observed_max"] = observed_max;
  }
  return j;
}

namespace {

VertexSet element_clique(const EventGraph& h, std::size_t j) {
  VertexSet c;
  for (std::size_t v = h.clique_begin(j); v < h.clique_end(j); ++v) c.push_back(v);
  return c;
}

/// Smallest-index element of the given weight whose clique is maximal.
std::optional<VertexSet> maximal_element_clique(const EventGraph& h, int weight) {
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < h.clique_count(); ++j) {
    if (h.group()[j].weight() == weight) candidates.push_back(j);
  }
  std::size_t found = candidates.size();
#pragma omp parallel for schedule(dynamic) reduction(min : found)
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (is_maximal_clique(h, element_clique(h, candidates[c]))) found = std::min(found, c);
  }
  if (found == candidates.size()) return std::nullopt;
  return element_clique(h, candidates[found]);
}

/// First edge (u, v), u < v, with no common neighbour.
std::optional<VertexSet> maximal_edge(const EventGraph& h) {
  const std::size_t n = h.vertex_count(), words = h.words_per_row();
  std::size_t found = n;
#pragma omp parallel for schedule(dynamic) reduction(min : found)
  for (std::size_t u = 0; u < n; ++u) {
    if (u >= found) continue;
    const auto ru = h.row(u);
    for (std::size_t v = u + 1; v < n && found > u; ++v) {
      if (!h.adjacent(u, v)) continue;
      const auto rv = h.row(v);
      bool common = false;
      for (std::size_t w = 0; w < words && !common; ++w) common = (ru[w] & rv[w]) != 0;
      if (!common) {
        found = std::min(found, u);
        break;
      }
    }
  }
  if (found == n) return std::nullopt;
  for (std::size_t v = found + 1; v < n; ++v) {
    if (h.adjacent(found, v) && is_maximal_clique(h, {found, v})) return VertexSet{found, v};
  }
  return std::nullopt;
}

}  // namespace

CliqueBoundsReport clique_bounds_check(const Graph& g) {
  const EventGraph h = build_H(g);
  CliqueBoundsReport rep;
  rep.graph = format_graph(g);
  rep.n = g.size();
  rep.d_H = min_distance(h.group());
  rep.lower_bound = std::int64_t{1} << (rep.d_H - 1);
  rep.upper_bound = std::int64_t{1} << (rep.n - 1);

  if (h.vertex_count() <= kMaxCliqueEnumerationVertices) {
    rep.enumerated = true;
    const auto cliques = maximal_cliques(h);
    rep.maximal_clique_count = cliques.size();
    const auto by_size = [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); };
    const auto [lo, hi] = std::minmax_element(cliques.begin(), cliques.end(), by_size);
    rep.observed_min = static_cast<std::int64_t>(lo->size());
    rep.observed_max = static_cast<std::int64_t>(hi->size());
    rep.min_witness = *lo;
    rep.max_witness = *hi;
    rep.lower = rep.observed_min == rep.lower_bound ? Attainment::Attained : Attainment::NotAttained;
    rep.upper = rep.observed_max == rep.upper_bound ? Attainment::Attained : Attainment::NotAttained;
    if (rep.observed_min < rep.lower_bound) {
      rep.violations.push_back("maximal clique of " + std::to_string(rep.observed_min) +
                               " vertices is below " + std::to_string(rep.lower_bound));
    }
    if (rep.observed_max > rep.upper_bound) {
      rep.violations.push_back("clique of " + std::to_string(rep.observed_max) + " vertices exceeds " +
                               std::to_string(rep.upper_bound));
    }
    return rep;
  }

  if (auto w = maximal_element_clique(h, rep.d_H)) {
    rep.min_witness = std::move(*w);
  } else if (rep.lower_bound == 2) {
    if (auto e = maximal_edge(h)) rep.min_witness = std::move(*e);
  }
  if (!rep.min_witness.empty()) rep.lower = Attainment::Attained;
  if (auto w = maximal_element_clique(h, rep.n)) {
    rep.max_witness = std::move(*w);
    rep.upper = Attainment::Attained;
  }
  return rep;
}

CriterionSurvey maximality_criterion_survey(const Graph& g, std::size_t max_report) {
  const EventGraph h = build_H(g);
  const auto& group = h.group();
  CriterionSurvey survey;
  std::set<std::pair<Mask, std::vector<int>>> done;
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = a + 1; b < group.size(); ++b) {
      const Mask overlap = shared_letters(group[a], group[b]);
      if (overlap == 0) continue;
      std::vector<int> members;
      for (std::size_t j = 0; j < group.size(); ++j) {
        if ((shared_letters(group[a], group[j]) & overlap) == overlap) members.push_back(static_cast<int>(j));
      }
      const int mu = popcount(overlap);
      if (members.size() > (std::size_t{1} << mu) || !done.insert({overlap, members}).second) continue;
      const OverlapFamily r = overlap_family(group, members);
      if (r.overlap_positions != overlap) continue;  // members agree on more; another pair covers it
      OverlapPartition p;
      const int total = 1 << mu, k = static_cast<int>(members.size());
      for (int j = 0; j < k; ++j) p.shares.push_back(total / k + (j < total % k ? 1 : 0));
      ++survey.families;
      const VertexSet clique = clique_from_partition(h, r, p, sequential_assignment(r, p));
      if (is_maximal_clique(h, clique)) {
        ++survey.maximal_cliques;
      } else if (survey.counterexamples.size() < max_report) {
        std::string text = "{";
        for (std::size_t j = 0; j < r.members.size(); ++j) text += (j ? "," : "") + r.members[j].str();
        survey.counterexamples.push_back(text + "} mu=" + std::to_string(mu) + " clique of " +
                                         std::to_string(clique.size()) + " is not maximal");
      }
    }
  }
  return survey;
}

}  // namespace kotzig
