// Copyright 2026 The gra-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gra/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "gra/error.hpp"
#include "gra/graph_file.hpp"

namespace gra {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotThreeRegular: return "NotThreeRegular";
    case Errc::NonBinaryState: return "NonBinaryState";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RuleNumberOutOfRange: return "RuleNumberOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OracleCapExceeded: return "OracleCapExceeded";
    case Errc::DegenerateWindow: return "DegenerateWindow";
    case Errc::ConfigMismatch: return "ConfigMismatch";
    case Errc::EmptySweep: return "EmptySweep";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

std::string vertex_str(std::size_t v) { return std::to_string(v); }

}  // namespace

Graph Graph::from_edges(std::span<const Edge> edges,
                        std::span<const int> states, std::uint64_t time) {
  const std::size_t order = states.size();
  std::vector<State> packed(order);
  for (std::size_t v = 0; v < order; ++v) {
    if (states[v] != 0 && states[v] != 1) {
      fail(Errc::NonBinaryState, "state of vertex " + vertex_str(v) +
                                     " is " + std::to_string(states[v]));
    }
    packed[v] = static_cast<State>(states[v]);
  }

  std::vector<std::vector<Vertex>> lists(order);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      fail(Errc::IndexOutOfRange, "edge (" + vertex_str(u) + ", " +
                                      vertex_str(v) + ") outside order " +
                                      vertex_str(order));
    }
    if (u == v) fail(Errc::SelfLoop, "self-loop at vertex " + vertex_str(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  std::vector<Neighbors> adjacency(order);
  for (std::size_t v = 0; v < order; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      fail(Errc::DuplicateEdge,
           "duplicate edge at vertex " + vertex_str(v));
    }
    if (l.size() != 3) {
      fail(Errc::NotThreeRegular, "vertex " + vertex_str(v) + " has degree " +
                                      std::to_string(l.size()));
    }
    adjacency[v] = {l[0], l[1], l[2]};
  }
  Graph g(std::move(adjacency), std::move(packed), time);
  g.validate();
  return g;
}

Graph Graph::from_adjacency(std::vector<Neighbors> adjacency,
                            std::vector<State> states, std::uint64_t time) {
  if (adjacency.size() != states.size()) {
    fail(Errc::LengthMismatch, "adjacency has " +
                                   vertex_str(adjacency.size()) +
                                   " rows but states has " +
                                   vertex_str(states.size()));
  }
  for (auto& n : adjacency) std::sort(n.begin(), n.end());
  Graph g(std::move(adjacency), std::move(states), time);
  g.validate();
  return g;
}

Graph Graph::from_parts_unchecked(std::vector<Neighbors> adjacency,
                                  std::vector<State> states,
                                  std::uint64_t time) noexcept {
  return Graph(std::move(adjacency), std::move(states), time);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& n = adjacency_.at(u);
  return n[0] == v || n[1] == v || n[2] == v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(order() * 3 / 2);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

void Graph::validate() const {
  const std::size_t n = order();
  if (adjacency_.size() != n) {
    fail(Errc::LengthMismatch, "adjacency/state length mismatch");
  }
  if (n < 4) {
    fail(Errc::NotThreeRegular,
         "order " + vertex_str(n) + " is below 4");
  }
  if (n % 2 != 0) {
    fail(Errc::NotThreeRegular,
         "odd order " + vertex_str(n) + " cannot be 3-regular");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (states_[v] > 1) {
      fail(Errc::NonBinaryState, "state of vertex " + vertex_str(v) +
                                     " is " + std::to_string(states_[v]));
    }
    const auto& nb = adjacency_[v];
    for (int k = 0; k < 3; ++k) {
      if (nb[k] >= n) {
        fail(Errc::IndexOutOfRange, "neighbor " + vertex_str(nb[k]) +
                                        " of vertex " + vertex_str(v) +
                                        " outside order");
      }
      if (nb[k] == v) fail(Errc::SelfLoop, "self-loop at " + vertex_str(v));
      if (k > 0 && nb[k - 1] >= nb[k]) {
        if (nb[k - 1] == nb[k]) {
          fail(Errc::DuplicateEdge, "duplicate edge at " + vertex_str(v));
        }
        fail(Errc::NotThreeRegular,
             "neighbors of " + vertex_str(v) + " are not sorted");
      }
      if (!has_edge(nb[k], v)) {
        fail(Errc::NotThreeRegular, "edge (" + vertex_str(v) + ", " +
                                        vertex_str(nb[k]) +
                                        ") is not symmetric");
      }
    }
  }
}

Graph Graph::with_time(std::uint64_t time) const {
  return Graph(adjacency_, states_, time);
}

bool Graph::same_labeled_graph(const Graph& other) const noexcept {
  return adjacency_ == other.adjacency_ && states_ == other.states_;
}

Graph build_graph(std::span<const Edge> edges, std::span<const int> states) {
  return Graph::from_edges(edges, states);
}

ConfigurationVector configuration_vector(const Graph& g) {
  ConfigurationVector c(g.order());
  const auto s = g.states();
  const auto adj = g.adjacency();
  for (std::size_t v = 0; v < c.size(); ++v) {
    const auto& n = adj[v];
    c[v] = static_cast<std::uint8_t>(4 * s[v] + s[n[0]] + s[n[1]] + s[n[2]]);
  }
  return c;
}

ConfigurationCensus configuration_census(const Graph& g) {
  ConfigurationCensus counts{};
  for (auto c : configuration_vector(g)) ++counts[c];
  return counts;
}

Graph complement_states(const Graph& g) {
  std::vector<State> flipped(g.states().begin(), g.states().end());
  for (auto& s : flipped) s = static_cast<State>(1 - s);
  return Graph::from_parts_unchecked(
      std::vector<Neighbors>(g.adjacency().begin(), g.adjacency().end()),
      std::move(flipped), g.time());
}

namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t combine(std::uint64_t h, std::uint64_t word) noexcept {
  return mix(h ^ mix(word));
}

}  // namespace

std::string Fingerprint::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

Fingerprint state_fingerprint(std::size_t order,
                              std::span<const State> states) {
  std::uint64_t h = mix(order);
  std::uint64_t word = 0;
  int bit = 0;
  for (State s : states) {
    word |= static_cast<std::uint64_t>(s & 1U) << bit;
    if (++bit == 64) {
      h = combine(h, word);
      word = 0;
      bit = 0;
    }
  }
  if (bit != 0) h = combine(h, word);
  return {h};
}

Fingerprint state_fingerprint(const Graph& g) {
  return state_fingerprint(g.order(), g.states());
}

Fingerprint graph_digest(const Graph& g) {
  std::uint64_t h = state_fingerprint(g).value;
  for (const auto& n : g.adjacency()) {
    h = combine(h, (static_cast<std::uint64_t>(n[0]) << 32) | n[1]);
    h = combine(h, n[2]);
  }
  return {h};
}

Graph k4_one_alive() {
  static const Edge kEdges[] = {{0, 1}, {0, 2}, {0, 3},
                                {1, 2}, {1, 3}, {2, 3}};
  static const int kStates[] = {1, 0, 0, 0};
  return Graph::from_edges(kEdges, kStates);
}

Graph canonical_g0() {
  static const Graph g = parse_graph_text(canonical_g0_text());
  return g;
}

}  // namespace gra
