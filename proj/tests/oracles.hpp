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


// Independent reference implementations used only by the tests. They work
// on plain strings, dense integer matrices and exhaustive search so that
// they share no code with the library.

#ifndef KOTZIG_TESTS_ORACLES_HPP
#define KOTZIG_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Cx {
  long long re = 0;
  long long im = 0;
  friend bool operator==(const Cx&, const Cx&) = default;
};

inline Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }

struct Matrix {
  int dim = 0;
  std::vector<Cx> a;
  Cx& at(int r, int c) { return a[static_cast<std::size_t>(r * dim + c)]; }
  Cx at(int r, int c) const { return a[static_cast<std::size_t>(r * dim + c)]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix single(char letter) {
  Matrix m{2, std::vector<Cx>(4)};
  switch (letter) {
    case 'I': m.at(0, 0) = {1, 0}; m.at(1, 1) = {1, 0}; break;
    case 'X': m.at(0, 1) = {1, 0}; m.at(1, 0) = {1, 0}; break;
    case 'Y': m.at(0, 1) = {0, -1}; m.at(1, 0) = {0, 1}; break;
    case 'Z': m.at(0, 0) = {1, 0}; m.at(1, 1) = {-1, 0}; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix m{x.dim * y.dim, std::vector<Cx>(static_cast<std::size_t>(x.dim * y.dim * x.dim * y.dim))};
  for (int r1 = 0; r1 < x.dim; ++r1)
    for (int c1 = 0; c1 < x.dim; ++c1)
      for (int r2 = 0; r2 < y.dim; ++r2)
        for (int c2 = 0; c2 < y.dim; ++c2) m.at(r1 * y.dim + r2, c1 * y.dim + c2) = x.at(r1, c1) * y.at(r2, c2);
  return m;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  Matrix m{x.dim, std::vector<Cx>(x.a.size())};
  for (int r = 0; r < x.dim; ++r)
    for (int c = 0; c < x.dim; ++c) {
      Cx s;
      for (int k = 0; k < x.dim; ++k) s = s + x.at(r, k) * y.at(k, c);
      m.at(r, c) = s;
    }
  return m;
}

/// Dense matrix of a signed word such as "-YXY"; qubit 1 is the leftmost factor.
inline Matrix pauli_matrix(const std::string& word) {
  std::size_t p = 0;
  long long sign = 1;
  if (!word.empty() && (word[0] == '-' || word[0] == '+')) {
    sign = word[0] == '-' ? -1 : 1;
    p = 1;
  }
  Matrix m{1, {Cx{sign, 0}}};
  for (; p < word.size(); ++p) m = kron(m, single(word[p]));
  return m;
}

/// Row bitmask adjacency, vertex i in bit i.
using Adjacency = std::vector<std::uint64_t>;

/// Generators of the graph state: X at v, Z on each neighbour.
inline std::vector<std::string> generators(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> out(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), 'I'));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 'X';
  for (auto [u, v] : edges) {
    out[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 'Z';
    out[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 'Z';
  }
  return out;
}

/// Events as (letters, outcome string with '+'/'-' per support position);
/// exclusive iff some position carries the same letter with opposite outcomes.
inline bool exclusive(const std::string& la, const std::string& oa, const std::string& lb, const std::string& ob) {
  for (std::size_t k = 0; k < la.size(); ++k) {
    if (la[k] != 'I' && la[k] == lb[k] && oa[k] != ob[k]) return true;
  }
  return false;
}

/// Maximum independent set by exhaustive include/exclude recursion.
inline int brute_mis(const Adjacency& adj, std::uint64_t candidates) {
  if (candidates == 0) return 0;
  const int v = std::countr_zero(candidates);
  const std::uint64_t rest = candidates & (candidates - 1);
  const int skip = brute_mis(adj, rest);
  const int take = 1 + brute_mis(adj, rest & ~adj[static_cast<std::size_t>(v)]);
  return std::max(skip, take);
}

/// Isomorphism by trying every vertex permutation.
inline bool isomorphic(int n, const Adjacency& a, const Adjacency& b) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u)
      for (int v = 0; v < n && same; ++v) {
        const bool ea = (a[static_cast<std::size_t>(u)] >> v) & 1;
        const bool eb = (b[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] >> perm[static_cast<std::size_t>(v)]) & 1;
        same = ea == eb;
      }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Graph-state amplitude signs (-1)^{edges inside x}, basis index bit k-1 for qubit k.
inline std::vector<int> graph_state_signs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> s(std::size_t{1} << n);
  for (std::size_t x = 0; x < s.size(); ++x) {
    int e = 0;
    for (auto [u, v] : edges) e += ((x >> (u - 1)) & 1) && ((x >> (v - 1)) & 1);
    s[x] = (e % 2) ? -1 : 1;
  }
  return s;
}

/// Largest number of signed words ("-YXY") won by one deterministic answer
/// table: every player fixes +-1 for each of X, Y, Z.
inline int brute_classical_alpha(int n, const std::vector<std::string>& words) {
  int best = 0;
  const std::uint64_t tables = std::uint64_t{1} << (3 * n);
  for (std::uint64_t t = 0; t < tables; ++t) {
    int won = 0;
    for (const auto& w : words) {
      const bool negative = w[0] == '-';
      const std::string letters = negative || w[0] == '+' ? w.substr(1) : w;
      int product = 1;
      for (int k = 0; k < n; ++k) {
        const char l = letters[static_cast<std::size_t>(k)];
        if (l == 'I') continue;
        const int slot = 3 * k + (l == 'X' ? 0 : l == 'Y' ? 1 : 2);
        if ((t >> slot) & 1) product = -product;
      }
      won += product == (negative ? -1 : 1);
    }
    best = std::max(best, won);
  }
  return best;
}

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting on std::bitset.
template <std::size_t N>
void bron_kerbosch(const std::vector<std::bitset<N>>& adj, std::bitset<N> r, std::bitset<N> p, std::bitset<N> x,
                   std::vector<std::bitset<N>>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = 0, best = 0;
  const std::bitset<N> px = p | x;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (!px[u]) continue;
    const std::size_t c = (p & adj[u]).count();
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  const std::bitset<N> candidates = p & ~adj[pivot];
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!candidates[v]) continue;
    std::bitset<N> rv = r;
    rv.set(v);
    bron_kerbosch(adj, rv, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

#endif  // KOTZIG_TESTS_ORACLES_HPP
