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

#ifndef GRA_SWEEP_HPP_
#define GRA_SWEEP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gra/engine.hpp"
#include "gra/graph.hpp"
#include "gra/growth.hpp"
#include "gra/rule.hpp"

namespace gra {

struct SweepConfig {
  std::vector<RuleNumber> rules;
  Graph initial = canonical_g0();
  // Name recorded in reports ("paper-g0", "k4-one-alive" or a path).
  std::string initial_name = "paper-g0";
  Budget budget;
  ClassifierConfig thresholds;
  // Worker threads; 0 means one per hardware thread.
  unsigned workers = 1;
};

struct RuleResult {
  RuleNumber rule = 0;
  GrowthClassification classification;
  std::uint64_t final_order = 0;
  std::uint64_t steps = 0;
  StopReason stop_reason = StopReason::MaxSteps;
  // Non-empty when the rule failed; the classification is then Unclassified.
  std::string error;

  friend bool operator==(const RuleResult&, const RuleResult&) = default;
};

struct SweepReport {
  // Everything that determines per-rule results; workers are excluded.
  std::vector<RuleNumber> rules;
  std::string initial_name;
  Fingerprint initial_digest;
  std::uint64_t initial_order = 0;
  Budget budget;
  ClassifierConfig thresholds;

  std::vector<RuleResult> results;  // ascending rule number
  std::map<GrowthCategory, std::size_t> categories;
  std::map<std::uint64_t, std::size_t> periods;
};

struct SweepOptions {
  // Append-only journal: a header line echoing the configuration, then one
  // JSON record per completed rule.
  std::optional<std::filesystem::path> journal;
  std::function<void(const RuleResult&, std::size_t done, std::size_t total)>
      progress;
};

// Evolves one rule and classifies it. Never throws; failures land in
// RuleResult::error.
RuleResult run_rule(const Graph& initial, RuleNumber rule, const Budget& budget,
                    const ClassifierConfig& thresholds);

// Throws EmptySweep for an empty rule list. Rules are deduplicated and sorted.
SweepReport run_sweep(const SweepConfig& config,
                      const SweepOptions& options = {});

// Completes the rules missing from `journal` and rewrites it. Throws
// ConfigMismatch if the journal was written for a different configuration.
SweepReport resume_sweep(const std::filesystem::path& journal,
                         const SweepConfig& config,
                         const SweepOptions& options = {});

std::map<std::uint64_t, std::size_t> period_census(const SweepReport& report);

// Recomputes category and period aggregates from report.results.
void aggregate(SweepReport& report);

// Published census for the 1024 single-division rules started from the
// canonical initial graph, in kAllCategories order.
inline constexpr std::array<std::size_t, 7> kReferenceCategoryCounts = {
    422, 73, 19, 3, 1, 374, 132};
inline const std::map<std::uint64_t, std::size_t> kReferencePeriodCounts = {
    {1, 310}, {2, 102}, {3, 2}, {6, 6}, {8, 2}};

// Side-by-side table of this report's aggregates against the reference.
std::string census_comparison(const SweepReport& report);

}  // namespace gra

#endif  // GRA_SWEEP_HPP_
