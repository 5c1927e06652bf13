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

#include "kotzig/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace kotzig {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxWordBits) {
    throw CapabilityError("graphs are limited to " + std::to_string(kMaxWordBits) +
                          " vertices, got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n, 1);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n_));
  }
}

Mask Graph::neighbours(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v - 1)];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1;
}

int Graph::edge_count() const noexcept {
  int total = 0;
  for (Mask row : adj_) total += popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (Mask rest = adj_[static_cast<std::size_t>(u - 1)] & ~low_bits(u); rest != 0;
         rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest) + 1);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u - 1)] |= bit(v - 1);
  adj_[static_cast<std::size_t>(v - 1)] |= bit(u - 1);
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u - 1)] ^= bit(v - 1);
  adj_[static_cast<std::size_t>(v - 1)] ^= bit(u - 1);
}

bool Graph::connected() const noexcept {
  if (n_ <= 1) return true;
  Mask seen = 1, frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_bits(n_);
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

int parse_label(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError("empty vertex label", offset);
  int value = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("non-digit in vertex label '" + std::string(s) + "'", offset + i);
    }
    value = value * 10 + (s[i] - '0');
    if (value > kMaxWordBits) throw ParseError("vertex label too large", offset);
  }
  if (value == 0) throw ParseError("vertex labels start at 1", offset);
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t base = 0;
  text = trim(text, base);
  int explicit_n = -1;
  if (text.starts_with("n=")) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' after n=K", base);
    explicit_n = parse_label(text.substr(2, colon - 2), base + 2);
    text.remove_prefix(colon + 1);
    base += colon + 1;
  }

  std::vector<Token> tokens;
  if (text.empty() && explicit_n < 0) throw ParseError("empty edge list", base);
  for (std::size_t start = 0; !text.empty() && start <= text.size();) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::size_t offset = base + start;
    auto tok = trim(text.substr(start, comma - start), offset);
    if (tok.empty()) throw ParseError("empty edge token", offset);
    tokens.push_back({tok, offset});
    start = comma + 1;
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> offsets;
  int max_label = 0;
  for (const auto& [tok, offset] : tokens) {
    int u = 0, v = 0;
    if (auto dash = tok.find('-'); dash != std::string_view::npos) {
      u = parse_label(tok.substr(0, dash), offset);
      v = parse_label(tok.substr(dash + 1), offset + dash + 1);
    } else {
      if (tok.size() != 2) {
        throw ParseError("compact edge '" + std::string(tok) +
                             "' must be two single-digit labels (use u-v for n > 9)",
                         offset);
      }
      u = parse_label(tok.substr(0, 1), offset);
      v = parse_label(tok.substr(1, 1), offset + 1);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), offset);
    edges.emplace_back(std::min(u, v), std::max(u, v));
    offsets.push_back(offset);
    max_label = std::max({max_label, u, v});
  }

  int n = explicit_n > 0 ? explicit_n : max_label;
  if (n == 0) throw ParseError("graph has no vertices", base);
  if (max_label > n) {
    throw ParseError("label " + std::to_string(max_label) + " exceeds n=" + std::to_string(n),
                     base);
  }
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (g.has_edge(u, v)) {
      throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v),
                       offsets[i]);
    }
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  const int n = g.size();
  auto edges = g.edges();
  int max_label = 0;
  for (auto [u, v] : edges) max_label = std::max(max_label, v);
  std::ostringstream out;
  if (max_label != n) out << "n=" << n << ':';
  bool compact = n <= 9;
  bool first = true;
  for (auto [u, v] : edges) {
    if (!first) out << ',';
    first = false;
    if (compact)
      out << u << v;
    else
      out << u << '-' << v;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Graph local_complement(const Graph& g, int v) {
  const Mask nbrs = g.neighbours(v);
  Graph out = g;
  for (Mask a = nbrs; a != 0; a &= a - 1) {
    int u = std::countr_zero(a) + 1;
    for (Mask b = nbrs & ~low_bits(u); b != 0; b &= b - 1) {
      out.toggle_edge(u, std::countr_zero(b) + 1);
    }
  }
  return out;
}

std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.size();
  if (n * (n - 1) / 2 > 64) throw CapabilityError("adjacency code limited to 11 vertices");
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((g.rows()[i] >> j) & 1);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bits = n * (n - 1) / 2;
  int k = bits - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --k) {
      if ((code >> k) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u - 1], perm[v - 1]);
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.size();
  if (n > kMaxCanonicalVertices) {
    throw CapabilityError("exhaustive canonical form supports n <= " +
                          std::to_string(kMaxCanonicalVertices) + ", got " + std::to_string(n));
  }
  if (n <= 1) return 0;
  // pos[k] = original vertex (0-based) placed at new position k
  std::array<int, kMaxCanonicalVertices> pos{};
  std::iota(pos.begin(), pos.begin() + n, 0);
  const auto& rows = g.rows();
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    bool pruned = false;
    int remaining = n * (n - 1) / 2;
    for (int i = 0; i < n && !pruned; ++i) {
      const Mask row = rows[pos[i]];
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) | ((row >> pos[j]) & 1);
        --remaining;
      }
      // prefix already larger than the best complete code
      if ((code << remaining) > best) pruned = true;
    }
    if (!pruned && code < best) best = code;
  } while (std::next_permutation(pos.begin(), pos.begin() + n));
  return best;
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.size(), canonical_code(g)); }

// ---------------------------------------------------------------------------
// graph6

namespace {

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string to_graph6(int n, const std::function<bool(int, int)>& adjacent) {
  std::string out;
  append_size(out, n);
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_graph6(const Graph& g) {
  return to_graph6(g.size(), [&](int i, int j) { return ((g.rows()[i] >> j) & 1) != 0; });
}

std::pair<int, std::vector<std::pair<int, int>>> decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::size_t at = 0;
  auto next = [&]() -> int {
    if (at >= text.size()) throw ParseError("truncated graph6 string", at);
    int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", at);
    ++at;
    return c - 63;
  };
  long long n = next();
  if (n == 63) {
    if (at < text.size() && text[at] == 126) {
      ++at;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  std::vector<std::pair<int, int>> edges;
  int acc = 0, left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) edges.emplace_back(i, j);
    }
  }
  if (at != text.size()) throw ParseError("trailing characters after graph6 data", at);
  return {static_cast<int>(n), std::move(edges)};
}

Graph from_graph6(std::string_view text) {
  auto [n, edges] = decode_graph6(text);
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i + 1, j + 1);
  return g;
}

}  // namespace kotzig
