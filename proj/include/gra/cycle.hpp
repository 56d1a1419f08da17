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
#ifndef GRA_CYCLE_HPP_
#define GRA_CYCLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gra/graph.hpp"

namespace gra {

inline constexpr std::size_t kDefaultCycleWindow = 100000;

// Smallest p >= 1 with window[last] == window[last - p], found through
// digests and confirmed by exact comparison. All entries must come from
// steps with no divisions, so they share one order.
std::optional<std::size_t> detect_cycle(
    std::span<const std::vector<State>> window);

// Incremental cycle search used while evolving.
//
// A digest hit against an earlier step of the current constant-order window
// opens a candidate: the current state is snapshotted and the detector then
// waits for the exact state to come back. The first exact return gives the
// minimal period. A candidate that outlives its digest distance, or a
// division, closes it.
class CycleDetector {
 public:
  explicit CycleDetector(std::size_t window_cap = kDefaultCycleWindow)
      : window_cap_(window_cap) {}

  struct Cycle {
    std::uint64_t period;
    std::uint64_t entry;
  };

  // Feed the state reached at step t. `topology_changed` is true when the
  // step divided vertices (and for the initial state).
  std::optional<Cycle> observe(std::uint64_t t, bool topology_changed,
                               std::span<const State> states);

  std::uint64_t window_start() const noexcept { return window_start_; }
  const std::vector<Fingerprint>& window() const noexcept { return window_; }

 private:
  void reset(std::uint64_t t);

  std::size_t window_cap_;
  std::uint64_t window_start_ = 0;
  std::vector<Fingerprint> window_;
  std::unordered_map<std::uint64_t, std::uint64_t> first_seen_;

  bool confirming_ = false;
  std::vector<State> snapshot_;
  std::uint64_t snapshot_step_ = 0;
  std::uint64_t candidate_distance_ = 0;
  std::uint64_t candidate_entry_ = 0;
};

}  // namespace gra

#endif  // GRA_CYCLE_HPP_
