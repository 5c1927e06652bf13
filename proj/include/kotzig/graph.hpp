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

#ifndef KOTZIG_GRAPH_HPP
#define KOTZIG_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kotzig/common.hpp"

namespace kotzig {

/// Simple undirected graph on vertices 1..n, stored as neighbour bitmasks.
/// Vertex k (1-based) occupies bit k-1 of every mask.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph star(int n);  // centre is vertex 1
  static Graph path(int n);
  static Graph cycle(int n);

  int size() const noexcept { return n_; }
  Mask neighbours(int v) const;  // v is 1-based
  bool has_edge(int u, int v) const;
  int degree(int v) const { return popcount(neighbours(v)); }
  int edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  void add_edge(int u, int v);
  void toggle_edge(int u, int v);

  bool connected() const noexcept;

  /// Adjacency row masks, 0-based (row i = neighbours of vertex i+1).
  const std::vector<Mask>& rows() const noexcept { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

/// Parses the compact edge-list form "12,13" (single-digit labels), the
/// extended form "1-2,10-11", and an optional "n=K:" prefix fixing the
/// vertex count. Throws ParseError on malformed tokens, self-loops and
/// duplicate edges.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph. Uses the compact form when every label is a
/// single digit, and adds the "n=K:" prefix when the highest vertex is
/// isolated.
std::string format_graph(const Graph& g);

Graph local_complement(const Graph& g, int v);

/// Largest n accepted by canonical_form (exhaustive n! relabeling).
inline constexpr int kMaxCanonicalVertices = 8;

/// Upper-triangle adjacency code: pair (i,j), i<j, in row-major order, the
/// first pair being the most significant bit.
std::uint64_t adjacency_code(const Graph& g);

/// Graph whose adjacency code is minimal over all vertex permutations.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old-1] = new

// graph6 (https://users.cecs.anu.edu.au/~bdm/data/formats.txt)
// `adjacent` takes 0-based vertex indices.
std::string to_graph6(int n, const std::function<bool(int, int)>& adjacent);
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
/// Decodes any graph6 string into a 0-based edge list plus vertex count.
std::pair<int, std::vector<std::pair<int, int>>> decode_graph6(std::string_view text);

}  // namespace kotzig

#endif  // KOTZIG_GRAPH_HPP
