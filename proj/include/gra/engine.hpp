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

#ifndef GRA_ENGINE_HPP_
#define GRA_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gra/cycle.hpp"
#include "gra/graph.hpp"
#include "gra/rule.hpp"
#include "gra/trace.hpp"

namespace gra {

using DivisionVector = std::vector<std::uint8_t>;

struct StepOutcome {
  Graph graph;
  std::size_t divisions_performed = 0;
  std::uint64_t order_increment = 0;
};

// One synchronous step: configurations from the old states, new states from
// the next-state table, divisions from the division table (same
// configurations), then the division surgery on the updated graph.
StepOutcome step(const Graph& g, const Rule& r);

// Replaces v by a triangle of clones at v, v+1, v+2 (higher indices shift up
// by two). The k-th smallest former neighbor attaches to clone v+k. Clones
// keep v's state.
Graph divide_vertex(const Graph& g, Vertex v);

// Divides every flagged vertex as if processed lowest index first with index
// shifting. Clones are never flagged. Throws LengthMismatch.
Graph apply_divisions(const Graph& g, std::span<const std::uint8_t> flags);

struct Budget {
  std::uint64_t max_steps = 1000;
  std::uint64_t max_order = 5'000'000;
  double wall_clock_seconds = 60.0;
  std::size_t cycle_window = kDefaultCycleWindow;

  friend bool operator==(const Budget&, const Budget&) = default;
};

// Steps a graph in place, reusing its buffers between steps. This is what
// evolve() runs; step() is a thin wrapper around one call.
class Simulator {
 public:
  Simulator(const Graph& g, const Rule& r);

  // Performs one step and returns the number of divisions. When the step
  // would push the order above max_order, nothing changes and nullopt is
  // returned.
  std::optional<std::size_t> advance(
      std::uint64_t max_order = UINT64_MAX);

  std::size_t order() const noexcept { return states_.size(); }
  std::uint64_t time() const noexcept { return time_; }
  std::span<const State> states() const noexcept { return states_; }
  Graph graph() const&;
  Graph graph() &&;  // hands over the buffers

 private:
  Rule rule_;
  std::uint64_t time_;
  std::vector<Neighbors> adjacency_;
  std::vector<State> states_;

  std::vector<Neighbors> next_adjacency_;
  std::vector<State> next_states_;
  std::vector<State> divided_states_;
  std::vector<std::uint8_t> flags_;
  std::vector<Vertex> base_;
};

struct Evolution {
  Graph graph;
  EvolutionTrace trace;
};

// Repeats step() until the budget runs out or a cycle is confirmed.
Evolution evolve(const Graph& g0, const Rule& r, const Budget& budget);

namespace detail {

// Division surgery over flat neighbor lists in one pass. `states` are the
// post-update states; output vectors are overwritten.
void divide_flagged(std::span<const Neighbors> adjacency,
                    std::span<const State> states,
                    std::span<const std::uint8_t> flags,
                    std::vector<Neighbors>& out_adjacency,
                    std::vector<State>& out_states,
                    std::vector<Vertex>& base);

}  // namespace detail

}  // namespace gra

#endif  // GRA_ENGINE_HPP_
