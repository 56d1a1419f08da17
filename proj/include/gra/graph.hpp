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

#ifndef GRA_GRAPH_HPP_
#define GRA_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gra {

using Vertex = std::uint32_t;
using State = std::uint8_t;
using Edge = std::pair<Vertex, Vertex>;

// The three neighbors of a vertex, always sorted ascending.
using Neighbors = std::array<Vertex, 3>;

// Per-vertex configuration 4*s(v) + (alive neighbors), in [0, 7].
using ConfigurationVector = std::vector<std::uint8_t>;
using ConfigurationCensus = std::array<std::size_t, 8>;

// A binary-state 3-regular simple undirected graph with dense, stable vertex
// labels 0..order-1.
//
// Adjacency is stored as a flat three-neighbor list per vertex. Values are
// immutable through the public interface; the rewrite engine builds new
// graphs through `Graph::from_parts_unchecked`.
class Graph {
 public:
  // Validating constructor from an edge list. Order is the length of
  // `states`. Throws gra::Error (IndexOutOfRange, SelfLoop, DuplicateEdge,
  // NonBinaryState, NotThreeRegular).
  static Graph from_edges(std::span<const Edge> edges,
                          std::span<const int> states, std::uint64_t time = 0);

  // Validating constructor from a neighbor table.
  static Graph from_adjacency(std::vector<Neighbors> adjacency,
                              std::vector<State> states,
                              std::uint64_t time = 0);

  // No validation; neighbor triples must already be sorted. Used by the
  // engine on its hot path. Call validate() when in doubt.
  static Graph from_parts_unchecked(std::vector<Neighbors> adjacency,
                                    std::vector<State> states,
                                    std::uint64_t time) noexcept;

  std::size_t order() const noexcept { return states_.size(); }
  std::uint64_t time() const noexcept { return time_; }

  const Neighbors& neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const Neighbors> adjacency() const noexcept { return adjacency_; }
  std::span<const State> states() const noexcept { return states_; }
  State state(Vertex v) const { return states_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Undirected edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Throws gra::Error if any invariant is broken.
  void validate() const;

  Graph with_time(std::uint64_t time) const;

  // Labeled equality over adjacency and states; time is ignored.
  bool same_labeled_graph(const Graph& other) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.time_ == b.time_ && a.same_labeled_graph(b);
  }

 private:
  Graph(std::vector<Neighbors> adjacency, std::vector<State> states,
        std::uint64_t time) noexcept
      : adjacency_(std::move(adjacency)), states_(std::move(states)),
        time_(time) {}

  std::vector<Neighbors> adjacency_;
  std::vector<State> states_;
  std::uint64_t time_ = 0;
};

// Shorthand for Graph::from_edges.
Graph build_graph(std::span<const Edge> edges, std::span<const int> states);

ConfigurationVector configuration_vector(const Graph& g);
ConfigurationCensus configuration_census(const Graph& g);

Graph complement_states(const Graph& g);

// 64-bit digest of (order, states) under the stable labeling.
struct Fingerprint {
  std::uint64_t value = 0;

  std::string hex() const;
  friend bool operator==(Fingerprint, Fingerprint) = default;
};

Fingerprint state_fingerprint(std::size_t order, std::span<const State> states);
Fingerprint state_fingerprint(const Graph& g);

// Digest over adjacency and states, used to pin the initial graph of a sweep.
Fingerprint graph_digest(const Graph& g);

// K4 with vertex 0 alive, the three others dead.
Graph k4_one_alive();

// Frozen order-10 initial graph in which all eight configurations occur.
// Parsed from data/g0.graph, embedded at build time.
Graph canonical_g0();
const std::string& canonical_g0_text();

}  // namespace gra

#endif  // GRA_GRAPH_HPP_
