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

#include "kotzig/parameters.hpp"

#include <algorithm>
#include <numeric>

#include "kotzig/amplitudes.hpp"
#include "kotzig/orbit.hpp"

namespace kotzig {

int Strategy::slot(int position, Letter letter) {
  switch (letter) {
    case Letter::X: return 3 * (position - 1);
    case Letter::Y: return 3 * (position - 1) + 1;
    case Letter::Z: return 3 * (position - 1) + 2;
    default: throw std::invalid_argument("identity input has no strategy slot");
  }
}

int Strategy::output(int position, Letter letter) const {
  return (bits >> slot(position, letter)) & 1 ? -1 : 1;
}

void Strategy::set(int position, Letter letter, int value) {
  const auto b = std::uint64_t{1} << slot(position, letter);
  bits = value < 0 ? (bits | b) : (bits & ~b);
}

std::uint64_t strategy_mask(const PauliOperator& s) {
  std::uint64_t m = 0;
  for (Mask r = s.support(); r != 0; r &= r - 1) {
    const int k = std::countr_zero(r) + 1;
    m |= std::uint64_t{1} << Strategy::slot(k, s.letter(k));
  }
  return m;
}

int satisfied_count(const StabilizerGroup& s, const Strategy& t) {
  int count = 0;
  for (const auto& p : s) {
    int product = 1;
    for (int k = 1; k <= p.n; ++k) {
      if (p.letter(k) != Letter::I) product *= t.output(k, p.letter(k));
    }
    if (product == p.sign()) ++count;
  }
  return count;
}

namespace {

struct SearchSpace {
  std::vector<std::uint64_t> masks;
  std::vector<char> negative;
  std::uint64_t used = 0;  // strategy slots read by some element
};

SearchSpace search_space(const StabilizerGroup& s) {
  if (s.qubits() > kMaxStrategyQubits) {
    throw CapabilityError("strategy enumeration supports n <= " + std::to_string(kMaxStrategyQubits));
  }
  SearchSpace sp;
  for (const auto& p : s) {
    sp.masks.push_back(strategy_mask(p));
    sp.negative.push_back(p.negative() ? 1 : 0);
    sp.used |= sp.masks.back();
  }
  return sp;
}

}  // namespace

AlphaResult alpha_by_strategies(const StabilizerGroup& s) {
  const SearchSpace sp = search_space(s);
  const int free_bits = popcount(sp.used);
  const std::int64_t total = std::int64_t{1} << free_bits;
  const std::size_t m = sp.masks.size();
  int best = -1;
  std::int64_t best_index = 0;
#pragma omp parallel
  {
    int local_best = -1;
    std::int64_t local_index = 0;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < total; ++c) {
      const std::uint64_t t = deposit_bits(static_cast<std::uint64_t>(c), sp.used);
      int count = 0;
      for (std::size_t j = 0; j < m; ++j) count += parity(t & sp.masks[j]) == (sp.negative[j] != 0);
      if (count > local_best) {
        local_best = count;
        local_index = c;
      }
    }
#pragma omp critical
    if (local_best > best || (local_best == best && local_index < best_index)) {
      best = local_best;
      best_index = local_index;
    }
  }
  return {best, Strategy{s.qubits(), deposit_bits(static_cast<std::uint64_t>(best_index), sp.used)}};
}

AlphaResult alpha_by_strategies_serial(const StabilizerGroup& s) {
  const SearchSpace sp = search_space(s);
  const std::int64_t total = std::int64_t{1} << popcount(sp.used);
  AlphaResult best{-1, {}};
  for (std::int64_t c = 0; c < total; ++c) {
    const Strategy t{s.qubits(), deposit_bits(static_cast<std::uint64_t>(c), sp.used)};
    const int count = satisfied_count(s, t);
    if (count > best.alpha) best = {count, t};
  }
  return best;
}

std::vector<std::size_t> strategy_to_independent_set(const EventGraph& h, const Strategy& t) {
  std::vector<std::size_t> out;
  const auto& group = h.group();
  for (std::size_t j = 0; j < group.size(); ++j) {
    const auto& p = group[j];
    Mask outcomes = 0;
    for (Mask r = p.support(); r != 0; r &= r - 1) {
      const int q = std::countr_zero(r);
      if (t.output(q + 1, p.letter(q + 1)) < 0) outcomes |= bit(q);
    }
    if (parity(outcomes) != p.negative()) continue;
    for (std::size_t v = h.clique_begin(j); v < h.clique_end(j); ++v) {
      if (h.event(v).outcomes == outcomes) out.push_back(v);
    }
  }
  return out;
}

Strategy independent_set_to_strategy(const EventGraph& h, const std::vector<std::size_t>& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (h.adjacent(set[a], set[b])) throw std::invalid_argument("vertex set is not independent");
    }
  }
  Strategy t{h.qubits(), 0};
  for (std::size_t v : set) {
    const auto& e = h.event(v);
    const auto& p = h.group()[static_cast<std::size_t>(e.stab_index)];
    for (Mask r = p.support(); r != 0; r &= r - 1) {
      const int q = std::countr_zero(r);
      t.set(q + 1, p.letter(q + 1), (e.outcomes >> q) & 1 ? -1 : 1);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

class CliqueBranchAndBound {
 public:
  explicit CliqueBranchAndBound(const EventGraph& h) : h_(h), words_(h.words_per_row()) {
    for (std::size_t j = 0; j < h.clique_count(); ++j) order_.push_back(j);
    // small cliques first keeps the branching factor low near the root
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return h.clique_end(a) - h.clique_begin(a) < h.clique_end(b) - h.clique_begin(b);
    });
  }

  MisResult run() {
    std::vector<std::uint64_t> candidates(words_, 0);
    for (std::size_t v = 0; v < h_.vertex_count(); ++v) candidates[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> chosen;
    search(0, candidates, chosen);
    return {static_cast<int>(best_.size()), best_, nodes_};
  }

 private:
  bool clique_open(std::size_t j, const std::vector<std::uint64_t>& p) const {
    for (std::size_t v = h_.clique_begin(j); v < h_.clique_end(j); ++v) {
      if ((p[v / 64] >> (v % 64)) & 1) return true;
    }
    return false;
  }

  void search(std::size_t depth, const std::vector<std::uint64_t>& p, std::vector<std::size_t>& chosen) {
    ++nodes_;
    std::size_t bound = chosen.size();
    for (std::size_t d = depth; d < order_.size(); ++d) bound += clique_open(order_[d], p) ? 1 : 0;
    if (bound <= best_.size() && !(best_.empty() && chosen.empty() && depth == 0)) return;
    if (depth == order_.size()) {
      if (chosen.size() > best_.size() || best_.empty()) best_ = chosen;
      return;
    }
    const std::size_t j = order_[depth];
    std::vector<std::uint64_t> next(words_);
    for (std::size_t v = h_.clique_begin(j); v < h_.clique_end(j); ++v) {
      if (!((p[v / 64] >> (v % 64)) & 1)) continue;
      const auto row = h_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & ~row[w];
      chosen.push_back(v);
      search(depth + 1, next, chosen);
      chosen.pop_back();
    }
    search(depth + 1, p, chosen);
  }

  const EventGraph& h_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MisResult alpha_mis_bb(const EventGraph& h, std::size_t max_vertices) {
  if (h.vertex_count() > max_vertices) {
    throw CapabilityError("branch and bound limited to " + std::to_string(max_vertices) +
                          " vertices, H has " + std::to_string(h.vertex_count()));
  }
  MisResult r = CliqueBranchAndBound(h).run();
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

// ---------------------------------------------------------------------------

SandwichCertificate sandwich_certificate(const Graph& g) {
  if (g.size() < 2 || !g.connected()) {
    throw std::invalid_argument("sandwich certificate needs a connected graph with n >= 2");
  }
  const EventGraph h = build_H(g);
  const StateVector psi = graph_state(g);
  SandwichCertificate cert;
  cert.n = g.size();
  const ExactScalar one = 1;
  bool ok = true;
  std::vector<bool> covered(h.vertex_count(), false);
  for (std::size_t j = 0; j < h.clique_count(); ++j) {
    ExactScalar sum;
    for (std::size_t v = h.clique_begin(j); v < h.clique_end(j); ++v) {
      const ExactScalar p = event_probability(psi, h.group()[j], h.event(v).outcomes);
      if (p.is_zero()) ++cert.zero_probability_events;
      sum += p;
      covered[v] = true;
      for (std::size_t u = h.clique_begin(j); u < v; ++u) ok = ok && h.adjacent(u, v);
    }
    ok = ok && sum == one;
    cert.clique_sums.push_back(sum);
    cert.lower_value += sum;
  }
  cert.upper_value = static_cast<std::int64_t>(h.clique_count());
  const ExactScalar target = (std::int64_t{1} << g.size()) - 1;
  ok = ok && std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
  cert.valid = ok && cert.lower_value == target && ExactScalar(cert.upper_value) == target;
  return cert;
}

std::int64_t beta_lower_bound(const Graph& g) {
  const OrbitReport orbit = kotzig_orbit(g);
  return (std::int64_t{1} << g.size()) - 1 - orbit.beta_min;
}

std::int64_t alpha_Kn_formula(int n) {
  if (n < 3) throw std::invalid_argument("alpha(H(K_n)) closed form needs n >= 3");
  if (n > 62) throw CapabilityError("alpha(H(K_n)) closed form overflows for n > 62");
  const auto p2 = [](int e) { return std::int64_t{1} << e; };
  if (n % 2) return p2((n - 3) / 2) + 3 * p2(n - 2) - 1;
  return p2(n / 2 - 1) - p2(n - 2) + p2(n) - 1;
}

}  // namespace kotzig
