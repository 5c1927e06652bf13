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

#ifndef KOTZIG_CLIQUE_ATLAS_HPP
#define KOTZIG_CLIQUE_ATLAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "kotzig/events.hpp"
#include "kotzig/graph.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

using VertexSet = std::vector<std::size_t>;

inline constexpr std::size_t kMaxCliqueEnumerationVertices = 128;

/// All maximal cliques of H (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
std::vector<VertexSet> maximal_cliques(const EventGraph& h,
                                       std::size_t max_vertices = kMaxCliqueEnumerationVertices);

bool is_clique(const EventGraph& h, const VertexSet& set);
/// True iff `set` is a clique no outside vertex is adjacent to all of.
bool is_maximal_clique(const EventGraph& h, const VertexSet& set);

/// Operators sharing the identical non-identity letter at every overlap
/// position. `indices` is filled when the members come from a group.
struct OverlapFamily {
  std::vector<PauliOperator> members;
  std::vector<int> indices;
  Mask overlap_positions = 0;
  int mu = 0;
  bool maximal = false;  // no other group element agrees on the overlap
};

/// Family over free-standing operators (maximality is not defined).
OverlapFamily overlap_family(std::vector<PauliOperator> members);
/// Family over group elements; sets the maximality flag.
OverlapFamily overlap_family(const StabilizerGroup& s, std::vector<int> indices);

struct OverlapPartition {
  std::vector<int> shares;  // a_j >= 1, summing to 2^mu

  std::vector<int> cumulative() const;  // b_j = a_1 + ... + a_j
  void validate(const OverlapFamily& r) const;
};

/// Patterns handed to each member; a pattern is a mask inside
/// overlap_positions whose set bits are -1 outcomes.
using PatternAssignment = std::vector<std::vector<Mask>>;

struct FamilyEvent {
  int member = 0;
  Mask outcomes = 0;
  friend bool operator==(const FamilyEvent&, const FamilyEvent&) = default;
};

/// First-come assignment: member 0 takes the first a_0 patterns in
/// increasing mask order, and so on.
PatternAssignment sequential_assignment(const OverlapFamily& r, const OverlapPartition& p);

/// Every sign-consistent completion of every assigned pattern. Throws
/// std::invalid_argument when the assignment disagrees with the shares,
/// repeats a pattern, misses one, or strays outside the overlap, and
/// std::logic_error if the result fails the pairwise exclusivity check.
std::vector<FamilyEvent> clique_from_partition(const OverlapFamily& r, const OverlapPartition& p,
                                               const PatternAssignment& assignment);
/// Same clique as vertices of H; `r` must be built from h.group().
VertexSet clique_from_partition(const EventGraph& h, const OverlapFamily& r,
                                const OverlapPartition& p, const PatternAssignment& assignment);

/// 2^(-mu-1) * sum_j a_j 2^(w_j); throws when the value is not an integer.
std::int64_t partition_clique_size(const OverlapFamily& r, const OverlapPartition& p);

/// Ways to hand the 2^mu overlap patterns to the members with the given
/// shares: prod_j binom(2^mu - b_(j-1), a_j).
std::uint64_t count_cliques_for(const OverlapFamily& r, const OverlapPartition& p);
std::uint64_t count_cliques_for(int mu, const std::vector<int>& shares);

enum class Attainment { Attained, NotAttained, Unknown };

const char* attainment_name(Attainment a);

struct CliqueBoundsReport {
  std::string graph;
  int n = 0;
  int d_H = 0;
  std::int64_t lower_bound = 0;  // 2^(d_H - 1)
  std::int64_t upper_bound = 0;  // 2^(n - 1)
  bool enumerated = false;
  std::size_t maximal_clique_count = 0;
  std::int64_t observed_min = 0;  // enumeration only
  std::int64_t observed_max = 0;
  Attainment lower = Attainment::Unknown;  // some maximal clique of that size
  Attainment upper = Attainment::Unknown;
  VertexSet min_witness;  // smallest maximal clique found
  VertexSet max_witness;  // largest maximal clique found
  std::vector<std::string> violations;  // cliques outside the bounds

  bool bounds_hold() const { return violations.empty(); }
  bool both_attained() const { return lower == Attainment::Attained && upper == Attainment::Attained; }
  nlohmann::json to_json(const EventGraph& h) const;
};

/// Maximal clique sizes against 2^(d_H-1) and 2^(n-1). Enumerates every
/// maximal clique when |V(H)| fits the Bron-Kerbosch limit; otherwise looks
/// for maximal witness cliques (element cliques of extreme weight, and for a
/// lower bound of 2 any edge with no common neighbour).
CliqueBoundsReport clique_bounds_check(const Graph& g);

struct CriterionSurvey {
  std::size_t families = 0;           // closed families with |R| <= 2^mu
  std::size_t maximal_cliques = 0;    // constructed cliques that were maximal
  std::vector<std::string> counterexamples;
};

/// Closes every pair of group elements with a common overlap to the full
/// family agreeing there, builds the sequential-assignment clique with the
/// most even shares, and records the cases where that clique is not maximal.
CriterionSurvey maximality_criterion_survey(const Graph& g, std::size_t max_report = 16);

}  // namespace kotzig

#endif  // KOTZIG_CLIQUE_ATLAS_HPP
