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

#ifndef GRA_PRESETS_HPP_
#define GRA_PRESETS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gra/sweep.hpp"

namespace gra {

// A parsed sweep configuration file plus its output paths.
struct SweepSettings {
  SweepConfig config;
  std::string journal;
  std::string report;
};

// JSON sweep configuration:
//
//   {
//     "rules": "single-division" | [256, "0b100010101110", ...]
//              | {"from": 0, "to": 65535},
//     "initial": "paper-g0" | "k4-one-alive" | "<graph file>",
//     "budget": {"max_steps": ..., "max_order": ...,
//                "wall_clock_seconds": ..., "cycle_window": ...},
//     "thresholds": {"linear_r2": ..., "power_r2": ..., ...},
//     "workers": 1,
//     "journal": "<path>",
//     "report": "<path>"
//   }
//
// Only "rules" is required. Unknown keys are rejected. Throws EmptySweep
// when the rule list is empty.
SweepSettings parse_sweep_settings(std::string_view json_text);

std::vector<std::string> preset_names();
const std::string& preset_text(std::string_view name);
SweepSettings preset_settings(std::string_view name);

// True when the report covers exactly the 1024 single-division rules from
// the canonical initial graph, i.e. when the reference census applies.
bool is_reference_sweep(const SweepReport& report);

}  // namespace gra

#endif  // GRA_PRESETS_HPP_
