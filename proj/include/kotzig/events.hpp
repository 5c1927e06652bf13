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

#ifndef KOTZIG_EVENTS_HPP
#define KOTZIG_EVENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kotzig/graph.hpp"
#include "kotzig/pauli.hpp"

namespace kotzig {

/// Outcome assignment for one stabilizer element: bit k-1 of `outcomes` set
/// means the single-qubit measurement at position k returned -1. Only
/// support positions may be set, and the outcome parity matches the sign.
struct Event {
  int stab_index = 0;
  Mask outcomes = 0;
  friend bool operator==(const Event&, const Event&) = default;
};

enum class EventStyle {
  Plain,    // "x-z-I": trailing '-' marks outcome -1
  Unicode,  // combining low line under the letter
};

std::string render_event(const PauliOperator& s, Mask outcomes, EventStyle style = EventStyle::Plain);

/// The 2^(w-1) sign-consistent outcome tuples of `s`, in binary counting
/// order over its support positions.
std::vector<Event> events_of_stabilizer(const PauliOperator& s, int stab_index = 0);

/// Exclusivity: some position carries the same non-identity letter in
/// both stabilizers and the outcomes there differ.
bool are_exclusive(const Event& a, const Event& b, const StabilizerGroup& s);

/// Positions where s and t carry the same non-identity letter.
inline Mask shared_letters(const PauliOperator& s, const PauliOperator& t) noexcept {
  return (s.x | s.z) & (t.x | t.z) & ~((s.x ^ t.x) | (s.z ^ t.z));
}

/// Largest qubit count for which build_H is attempted.
inline constexpr int kMaxEventQubits = 10;

/// The exclusivity graph H(G). Vertices are grouped by stabilizer element:
/// events of element j occupy [clique_begin(j), clique_end(j)).
class EventGraph {
 public:
  EventGraph() = default;
  EventGraph(StabilizerGroup group, std::vector<Event> events, std::vector<std::size_t> offsets);

  int qubits() const noexcept { return group_.qubits(); }
  const StabilizerGroup& group() const noexcept { return group_; }
  std::size_t vertex_count() const noexcept { return events_.size(); }
  std::size_t clique_count() const noexcept { return offsets_.size() - 1; }
  const Event& event(std::size_t v) const { return events_[v]; }
  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t clique_begin(std::size_t j) const { return offsets_[j]; }
  std::size_t clique_end(std::size_t j) const { return offsets_[j + 1]; }
  const std::vector<std::size_t>& clique_offsets() const noexcept { return offsets_; }

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(std::size_t v) const {
    return {adjacency_.data() + v * words_, words_};
  }
  std::span<std::uint64_t> mutable_row(std::size_t v) { return {adjacency_.data() + v * words_, words_}; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency_[u * words_ + v / 64] >> (v % 64)) & 1;
  }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbours(std::size_t v) const;

  std::string label(std::size_t v, EventStyle style = EventStyle::Plain) const;
  /// Vertex whose rendered tuple (letters + outcomes) matches; -1 if none.
  long find(const PauliOperator& letters, Mask outcomes) const;

  friend bool operator==(const EventGraph& a, const EventGraph& b) {
    return a.events_ == b.events_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  StabilizerGroup group_;
  std::vector<Event> events_;
  std::vector<std::size_t> offsets_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// Builds H(G); rows are filled in parallel and every per-element clique is
/// checked. Throws CapabilityError above kMaxEventQubits.
EventGraph build_H(const Graph& g);
EventGraph build_H(const StabilizerGroup& s);
/// Reference construction: one are_exclusive call per vertex pair.
EventGraph build_H_serial(const StabilizerGroup& s);

struct ComponentSummary {
  std::vector<std::size_t> sizes;  // ascending
  std::vector<int> component_of;   // per vertex
  std::size_t count() const noexcept { return sizes.size(); }
  /// "1" when connected, otherwise "k[s1,s2,...]".
  std::string str() const;
};
ComponentSummary components(const EventGraph& h);

/// "a,b/c,d/..." : b vertices of degree a, degrees ascending.
std::string degree_sequence(const EventGraph& h);

std::string to_graph6(const EventGraph& h);
/// One line per vertex: id, stabilizer, rendered event, probability column
/// left to the caller. Header line included.
void write_vertex_table(std::ostream& out, const EventGraph& h);
void write_adjacency_list(std::ostream& out, const EventGraph& h);

}  // namespace kotzig

#endif  // KOTZIG_EVENTS_HPP
