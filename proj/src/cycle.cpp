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
#include "gra/cycle.hpp"

#include <algorithm>

#include "gra/trace.hpp"

namespace gra {

std::string_view stop_reason_name(StopReason r) noexcept {
  switch (r) {
    case StopReason::CycleFound: return "CycleFound";
    case StopReason::MaxSteps: return "MaxSteps";
    case StopReason::MaxOrder: return "MaxOrder";
    case StopReason::WallClock: return "WallClock";
  }
  return "MaxSteps";
}

std::optional<StopReason> parse_stop_reason(std::string_view name) noexcept {
  for (auto r : {StopReason::CycleFound, StopReason::MaxSteps,
                 StopReason::MaxOrder, StopReason::WallClock}) {
    if (stop_reason_name(r) == name) return r;
  }
  return std::nullopt;
}

std::optional<std::size_t> detect_cycle(
    std::span<const std::vector<State>> window) {
  if (window.size() < 2) return std::nullopt;
  const std::size_t last = window.size() - 1;
  const auto& tail = window[last];
  const auto target = state_fingerprint(tail.size(), tail);
  for (std::size_t p = 1; p <= last; ++p) {
    const auto& prev = window[last - p];
    if (prev.size() != tail.size()) break;
    if (state_fingerprint(prev.size(), prev) == target && prev == tail) {
      return p;
    }
  }
  return std::nullopt;
}

void CycleDetector::reset(std::uint64_t t) {
  window_start_ = t;
  window_.clear();
  first_seen_.clear();
  confirming_ = false;
}

std::optional<CycleDetector::Cycle> CycleDetector::observe(
    std::uint64_t t, bool topology_changed, std::span<const State> states) {
  if (topology_changed) reset(t);

  if (confirming_) {
    if (std::equal(states.begin(), states.end(), snapshot_.begin(),
                   snapshot_.end())) {
      return Cycle{t - snapshot_step_, candidate_entry_};
    }
    if (t - snapshot_step_ >= candidate_distance_) confirming_ = false;
  }

  const auto fp = state_fingerprint(states.size(), states);
  if (!confirming_) {
    auto it = first_seen_.find(fp.value);
    if (it != first_seen_.end()) {
      confirming_ = true;
      snapshot_.assign(states.begin(), states.end());
      snapshot_step_ = t;
      candidate_distance_ = t - it->second;
      candidate_entry_ = it->second;
    }
  }
  if (window_.size() < window_cap_) {
    window_.push_back(fp);
    first_seen_.emplace(fp.value, t);
  }
  return std::nullopt;
}

}  // namespace gra
