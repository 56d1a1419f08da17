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

#include "gra/engine.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "gra/error.hpp"

namespace gra {

namespace detail {

// Neighbor reads are random on large graphs; fetch this many rows ahead.
constexpr std::size_t kPrefetchDistance = 16;

namespace {

inline Vertex rank_of(const Neighbors& n, Vertex v) noexcept {
  return n[0] == v ? 0 : (n[1] == v ? 1 : 2);
}

}  // namespace

void divide_flagged(std::span<const Neighbors> adjacency,
                    std::span<const State> states,
                    std::span<const std::uint8_t> flags,
                    std::vector<Neighbors>& out_adjacency,
                    std::vector<State>& out_states,
                    std::vector<Vertex>& base) {
  const std::size_t n = adjacency.size();
  // New index of each vertex, with the divide flag in the top bit so the
  // surgery below touches one random-access array instead of two.
  constexpr Vertex kDivides = Vertex{1} << 31;
  base.resize(n);
  std::uint64_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    base[v] = static_cast<Vertex>(next) | (flags[v] ? kDivides : 0);
    next += flags[v] ? 3 : 1;
  }
  if (next > kDivides) {
    throw Error(Errc::IndexOutOfRange,
                "division would give order " + std::to_string(next) +
                    ", above the 2^31 vertex limit");
  }
  out_adjacency.resize(next);
  out_states.resize(next);

  // Where the edge (w, v) lands on w's side after surgery.
  auto endpoint = [&](Vertex w, Vertex v) -> Vertex {
    const Vertex b = base[w];
    return b & kDivides ? (b & ~kDivides) + rank_of(adjacency[w], v) : b;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (v + kPrefetchDistance < n) {
      const auto& ahead = adjacency[v + kPrefetchDistance];
      for (Vertex w : ahead) {
        __builtin_prefetch(&base[w]);
        __builtin_prefetch(&adjacency[w]);
      }
    }
    const auto& nb = adjacency[v];
    const Vertex b = base[v] & ~kDivides;
    if (!flags[v]) {
      // Endpoint is monotone across distinct vertices, so order is kept.
      out_adjacency[b] = {endpoint(nb[0], v), endpoint(nb[1], v),
                          endpoint(nb[2], v)};
      out_states[b] = states[v];
      continue;
    }
    for (Vertex k = 0; k < 3; ++k) {
      Neighbors clone = {b + (k + 1) % 3, b + (k + 2) % 3, endpoint(nb[k], v)};
      std::sort(clone.begin(), clone.end());
      out_adjacency[b + k] = clone;
      out_states[b + k] = states[v];
    }
  }
}

}  // namespace detail

Simulator::Simulator(const Graph& g, const Rule& r)
    : rule_(r),
      time_(g.time()),
      adjacency_(g.adjacency().begin(), g.adjacency().end()),
      states_(g.states().begin(), g.states().end()) {}

std::optional<std::size_t> Simulator::advance(std::uint64_t max_order) {
  const std::size_t n = states_.size();
  next_states_.resize(n);
  flags_.resize(n);
  std::size_t divisions = 0;
  const auto& next = rule_.next_state;
  const auto& divides = rule_.divides;
  for (std::size_t v = 0; v < n; ++v) {
    if (v + detail::kPrefetchDistance < n) {
      for (Vertex w : adjacency_[v + detail::kPrefetchDistance]) {
        __builtin_prefetch(&states_[w]);
      }
    }
    const auto& nb = adjacency_[v];
    const unsigned c =
        4U * states_[v] + states_[nb[0]] + states_[nb[1]] + states_[nb[2]];
    next_states_[v] = next[c];
    flags_[v] = divides[c];
    divisions += divides[c];
  }
  if (n + 2 * divisions > max_order) return std::nullopt;

  if (divisions == 0) {
    states_.swap(next_states_);
  } else {
    detail::divide_flagged(adjacency_, next_states_, flags_, next_adjacency_,
                           divided_states_, base_);
    adjacency_.swap(next_adjacency_);
    states_.swap(divided_states_);
  }
  ++time_;
  return divisions;
}

Graph Simulator::graph() const& {
  return Graph::from_parts_unchecked(adjacency_, states_, time_);
}

Graph Simulator::graph() && {
  return Graph::from_parts_unchecked(std::move(adjacency_), std::move(states_),
                                     time_);
}

StepOutcome step(const Graph& g, const Rule& r) {
  Simulator sim(g, r);
  const std::size_t divisions = *sim.advance();
  return {std::move(sim).graph(), divisions, 2 * static_cast<std::uint64_t>(divisions)};
}

Graph divide_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(Errc::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside order " +
                    std::to_string(g.order()));
  }
  std::vector<std::uint8_t> flags(g.order(), 0);
  flags[v] = 1;
  return apply_divisions(g, flags);
}

Graph apply_divisions(const Graph& g, std::span<const std::uint8_t> flags) {
  if (flags.size() != g.order()) {
    throw Error(Errc::LengthMismatch,
                "division vector has length " + std::to_string(flags.size()) +
                    ", graph order is " + std::to_string(g.order()));
  }
  std::vector<std::uint8_t> binary(flags.begin(), flags.end());
  for (auto& f : binary) f = f ? 1 : 0;
  std::vector<Neighbors> adjacency;
  std::vector<State> states;
  std::vector<Vertex> base;
  detail::divide_flagged(g.adjacency(), g.states(), binary, adjacency, states,
                         base);
  return Graph::from_parts_unchecked(std::move(adjacency), std::move(states),
                                     g.time());
}

Evolution evolve(const Graph& g0, const Rule& r, const Budget& budget) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  Evolution out{g0, {}};
  auto& trace = out.trace;
  trace.rule = r.number;
  trace.orders.push_back(g0.order());

  Simulator sim(g0, r);
  CycleDetector cycles(budget.cycle_window);
  cycles.observe(0, true, sim.states());

  trace.stop_reason = StopReason::MaxSteps;
  for (std::uint64_t t = 1; t <= budget.max_steps; ++t) {
    const std::size_t before = sim.order();
    const auto divisions = sim.advance(budget.max_order);
    if (!divisions) {
      trace.stop_reason = StopReason::MaxOrder;
      break;
    }
    trace.orders.push_back(sim.order());
    trace.increments.push_back(sim.order() - before);

    if (auto cycle = cycles.observe(t, *divisions > 0, sim.states())) {
      trace.stop_reason = StopReason::CycleFound;
      trace.cycle_period = cycle->period;
      trace.cycle_entry = cycle->entry;
      break;
    }
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    if (elapsed.count() > budget.wall_clock_seconds &&
        t < budget.max_steps) {
      trace.stop_reason = StopReason::WallClock;
      break;
    }
  }
  trace.fingerprints = cycles.window();
  trace.window_start = cycles.window_start();
  trace.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  out.graph = std::move(sim).graph();
  return out;
}

}  // namespace gra
