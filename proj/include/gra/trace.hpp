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
#ifndef GRA_TRACE_HPP_
#define GRA_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gra/graph.hpp"
#include "gra/rule.hpp"

namespace gra {

enum class StopReason { CycleFound, MaxSteps, MaxOrder, WallClock };

std::string_view stop_reason_name(StopReason r) noexcept;
std::optional<StopReason> parse_stop_reason(std::string_view name) noexcept;

struct EvolutionTrace {
  RuleNumber rule = 0;
  // orders[t] for t = 0..T.
  std::vector<std::uint64_t> orders;
  // increments[t] = orders[t+1] - orders[t]; one shorter than orders.
  std::vector<std::uint64_t> increments;
  // Digests of the trailing constant-order window, starting at step
  // window_start.
  std::vector<Fingerprint> fingerprints;
  std::uint64_t window_start = 0;
  StopReason stop_reason = StopReason::MaxSteps;
  std::optional<std::uint64_t> cycle_period;
  // First step whose state recurs in the confirmed cycle.
  std::optional<std::uint64_t> cycle_entry;
  double elapsed_seconds = 0.0;

  std::uint64_t steps() const noexcept {
    return orders.empty() ? 0 : orders.size() - 1;
  }
  std::uint64_t final_order() const noexcept {
    return orders.empty() ? 0 : orders.back();
  }
};

}  // namespace gra

#endif  // GRA_TRACE_HPP_
