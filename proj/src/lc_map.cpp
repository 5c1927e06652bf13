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

#include "kotzig/lc_map.hpp"

#include <unordered_map>

#include "kotzig/orbit.hpp"

namespace kotzig {

namespace {

std::uint64_t letters_key(const PauliOperator& p) { return p.x * 0x9e3779b97f4a7c15ULL ^ p.z; }

struct LetterIndex {
  explicit LetterIndex(const StabilizerGroup& s) : group(&s) {
    for (std::size_t j = 0; j < s.size(); ++j) by_key.emplace(letters_key(s[j]), static_cast<int>(j));
  }
  int find(const PauliOperator& p) const {
    auto [lo, hi] = by_key.equal_range(letters_key(p));
    for (auto it = lo; it != hi; ++it) {
      const auto& q = (*group)[static_cast<std::size_t>(it->second)];
      if (q.x == p.x && q.z == p.z) return it->second;
    }
    return -1;
  }
  const StabilizerGroup* group;
  std::unordered_multimap<std::uint64_t, int> by_key;
};

}  // namespace

PauliOperator LcLetterMap::apply(const PauliOperator& s) const {
  const Mask v = bit(pivot - 1);
  PauliOperator out = s;
  out.x ^= s.z & v;              // pivot: Z <-> Y
  out.z ^= s.x & neighbourhood;  // neighbours: X <-> Y
  if (parity(flipped_positions(s))) out.phase = (out.phase + 2) & 3;
  return out;
}

PauliOperator transform_stabilizer(const PauliOperator& s, int v, const Graph& g) {
  if (s.n != g.size()) throw std::invalid_argument("stabilizer and graph sizes differ");
  return LcLetterMap::at(g, v).apply(s);
}

std::vector<TransportedEvent> transport_events(const StabilizerGroup& from, const LcLetterMap& map,
                                               const StabilizerGroup& to) {
  const LetterIndex index(to);
  std::vector<int> image(from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    const PauliOperator t = map.apply(from[j]);
    const int k = index.find(t);
    if (k < 0 || to[static_cast<std::size_t>(k)].phase != t.phase) {
      throw std::logic_error("LC image " + t.str() + " of " + from[j].str() +
                             " is not in the target group");
    }
    image[j] = k;
  }
  std::vector<TransportedEvent> out;
  for (std::size_t j = 0; j < from.size(); ++j) {
    const Mask flip = map.flipped_positions(from[j]);
    for (const Event& e : events_of_stabilizer(from[j], static_cast<int>(j))) {
      out.push_back({image[j], e.outcomes ^ flip});
    }
  }
  return out;
}

bool verify_group_transport(const Graph& g, int v) {
  const StabilizerGroup before = enumerate_group(g);
  const StabilizerGroup after = enumerate_group(local_complement(g, v));
  const LcLetterMap map = LcLetterMap::at(g, v);
  const LetterIndex index(after);
  std::vector<bool> hit(after.size(), false);
  for (const auto& s : before) {
    const PauliOperator t = map.apply(s);
    const int k = index.find(t);
    if (k < 0 || hit[static_cast<std::size_t>(k)]) return false;
    if (after[static_cast<std::size_t>(k)].phase != t.phase) return false;
    hit[static_cast<std::size_t>(k)] = true;
  }
  return before.size() == after.size();
}

bool verify_H_transport(const Graph& g, const std::vector<int>& pivots) {
  const EventGraph source = build_H(g);
  // current image of each source vertex as (stab_index, outcomes) in the
  // group of the graph reached so far
  std::vector<TransportedEvent> image;
  for (const Event& e : source.events()) image.push_back({e.stab_index, e.outcomes});

  Graph current = g;
  StabilizerGroup group = source.group();
  for (int v : pivots) {
    const LcLetterMap map = LcLetterMap::at(current, v);
    const Graph next = local_complement(current, v);
    const StabilizerGroup next_group = enumerate_group(next);
    const LetterIndex index(next_group);
    std::vector<int> stab_image(group.size());
    for (std::size_t j = 0; j < group.size(); ++j) {
      const PauliOperator t = map.apply(group[j]);
      const int k = index.find(t);
      if (k < 0 || next_group[static_cast<std::size_t>(k)].phase != t.phase) return false;
      stab_image[j] = k;
    }
    for (auto& e : image) {
      const Mask flip = map.flipped_positions(group[static_cast<std::size_t>(e.stab_index)]);
      e = {stab_image[static_cast<std::size_t>(e.stab_index)], e.outcomes ^ flip};
    }
    current = next;
    group = next_group;
  }

  const EventGraph target = build_H(group);
  if (target.vertex_count() != source.vertex_count()) return false;
  std::vector<std::size_t> where(source.vertex_count());
  std::vector<bool> used(target.vertex_count(), false);
  for (std::size_t u = 0; u < source.vertex_count(); ++u) {
    const auto& s = group[static_cast<std::size_t>(image[u].stab_index)];
    const long t = target.find(s, image[u].outcomes);
    if (t < 0 || used[static_cast<std::size_t>(t)]) return false;
    used[static_cast<std::size_t>(t)] = true;
    where[u] = static_cast<std::size_t>(t);
  }
  for (std::size_t u = 0; u < source.vertex_count(); ++u) {
    for (std::size_t w = u + 1; w < source.vertex_count(); ++w) {
      if (source.adjacent(u, w) != target.adjacent(where[u], where[w])) return false;
    }
  }
  return true;
}

bool verify_H_invariance(const Graph& g) {
  const OrbitReport orbit = kotzig_orbit(g);
  for (int m = 0; m < orbit.orbit_size; ++m) {
    if (!verify_H_transport(g, orbit.pivot_path(m))) return false;
  }
  return true;
}

}  // namespace kotzig
