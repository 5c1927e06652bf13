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

#include "kotzig/events.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace kotzig {

std::string render_event(const PauliOperator& s, Mask outcomes, EventStyle style) {
  std::string out;
  for (int k = 1; k <= s.n; ++k) {
    const Letter l = s.letter(k);
    if (l == Letter::I) {
      out += 'I';
      continue;
    }
    out += static_cast<char>(letter_char(l) - 'A' + 'a');
    if ((outcomes >> (k - 1)) & 1) out += style == EventStyle::Plain ? "-" : "\u0332";
  }
  return out;
}

std::vector<Event> events_of_stabilizer(const PauliOperator& s, int stab_index) {
  const Mask support = s.support();
  const int w = popcount(support);
  if (w == 0) throw std::invalid_argument("identity has no events");
  const bool odd = s.sign() < 0;
  std::vector<Event> out;
  out.reserve(std::size_t{1} << (w - 1));
  for (Mask t = 0; t < bit(w); ++t) {
    if (parity(t) == odd) out.push_back({stab_index, deposit_bits(t, support)});
  }
  return out;
}

bool are_exclusive(const Event& a, const Event& b, const StabilizerGroup& s) {
  const Mask same = shared_letters(s[static_cast<std::size_t>(a.stab_index)],
                                   s[static_cast<std::size_t>(b.stab_index)]);
  return ((a.outcomes ^ b.outcomes) & same) != 0;
}

EventGraph::EventGraph(StabilizerGroup group, std::vector<Event> events,
                       std::vector<std::size_t> offsets)
    : group_(std::move(group)),
      events_(std::move(events)),
      offsets_(std::move(offsets)),
      words_((events_.size() + 63) / 64),
      adjacency_(events_.size() * words_, 0) {}

std::size_t EventGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t EventGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> EventGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::string EventGraph::label(std::size_t v, EventStyle style) const {
  const Event& e = events_[v];
  return render_event(group_[static_cast<std::size_t>(e.stab_index)], e.outcomes, style);
}

long EventGraph::find(const PauliOperator& letters, Mask outcomes) const {
  for (std::size_t j = 0; j < clique_count(); ++j) {
    const auto& s = group_[j];
    if (s.x != letters.x || s.z != letters.z) continue;
    for (std::size_t v = offsets_[j]; v < offsets_[j + 1]; ++v) {
      if (events_[v].outcomes == outcomes) return static_cast<long>(v);
    }
  }
  return -1;
}

namespace {

EventGraph skeleton(const StabilizerGroup& s) {
  if (s.qubits() > kMaxEventQubits) {
    throw CapabilityError("H(G) construction supports n <= " + std::to_string(kMaxEventQubits));
  }
  std::vector<Event> events;
  std::vector<std::size_t> offsets{0};
  for (std::size_t j = 0; j < s.size(); ++j) {
    auto ev = events_of_stabilizer(s[j], static_cast<int>(j));
    events.insert(events.end(), ev.begin(), ev.end());
    offsets.push_back(events.size());
  }
  return EventGraph(s, std::move(events), std::move(offsets));
}

void check_cliques(const EventGraph& h) {
  for (std::size_t j = 0; j < h.clique_count(); ++j) {
    for (std::size_t u = h.clique_begin(j); u < h.clique_end(j); ++u) {
      for (std::size_t v = u + 1; v < h.clique_end(j); ++v) {
        if (!h.adjacent(u, v)) {
          throw std::logic_error("events of " + h.group()[j].str() + " are not a clique");
        }
      }
    }
  }
}

}  // namespace

EventGraph build_H(const StabilizerGroup& s) {
  EventGraph h = skeleton(s);
  const auto vertices = static_cast<std::int64_t>(h.vertex_count());
  const std::size_t cliques = h.clique_count();
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < vertices; ++u) {
    const Event& eu = h.event(static_cast<std::size_t>(u));
    const PauliOperator& su = s[static_cast<std::size_t>(eu.stab_index)];
    auto row = h.mutable_row(static_cast<std::size_t>(u));
    for (std::size_t j = 0; j < cliques; ++j) {
      const Mask same = shared_letters(su, s[j]);
      if (same == 0) continue;
      for (std::size_t v = h.clique_begin(j); v < h.clique_end(j); ++v) {
        if ((eu.outcomes ^ h.event(v).outcomes) & same) row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }
  check_cliques(h);
  return h;
}

EventGraph build_H(const Graph& g) {
  if (g.size() > kMaxEventQubits) {
    throw CapabilityError("H(G) construction supports n <= " + std::to_string(kMaxEventQubits));
  }
  return build_H(enumerate_group(g));
}

EventGraph build_H_serial(const StabilizerGroup& s) {
  EventGraph h = skeleton(s);
  for (std::size_t u = 0; u < h.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < h.vertex_count(); ++v) {
      if (are_exclusive(h.event(u), h.event(v), s)) {
        h.mutable_row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
        h.mutable_row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
  check_cliques(h);
  return h;
}

std::string ComponentSummary::str() const {
  if (sizes.size() == 1) return "1";
  std::ostringstream out;
  out << sizes.size() << '[';
  for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
  out << ']';
  return out.str();
}

ComponentSummary components(const EventGraph& h) {
  ComponentSummary out;
  const std::size_t nv = h.vertex_count();
  out.component_of.assign(nv, -1);
  std::vector<std::size_t> stack;
  int next = 0;
  for (std::size_t start = 0; start < nv; ++start) {
    if (out.component_of[start] >= 0) continue;
    std::size_t size = 0;
    stack.push_back(start);
    out.component_of[start] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t u : h.neighbours(v)) {
        if (out.component_of[u] < 0) {
          out.component_of[u] = next;
          stack.push_back(u);
        }
      }
    }
    out.sizes.push_back(size);
    ++next;
  }
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

std::string degree_sequence(const EventGraph& h) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) ++hist[h.degree(v)];
  std::ostringstream out;
  bool first = true;
  for (auto [d, c] : hist) {
    out << (first ? "" : "/") << d << ',' << c;
    first = false;
  }
  return out.str();
}

std::string to_graph6(const EventGraph& h) {
  return to_graph6(static_cast<int>(h.vertex_count()), [&](int i, int j) {
    return h.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  });
}

void write_vertex_table(std::ostream& out, const EventGraph& h) {
  out << "id\tstabilizer_index\tstabilizer\tevent\n";
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const auto j = static_cast<std::size_t>(h.event(v).stab_index);
    out << v << '\t' << j << '\t' << h.group()[j].str() << '\t' << h.label(v) << '\n';
  }
}

void write_adjacency_list(std::ostream& out, const EventGraph& h) {
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    out << v << ':';
    for (std::size_t u : h.neighbours(v)) out << ' ' << u;
    out << '\n';
  }
}

}  // namespace kotzig
