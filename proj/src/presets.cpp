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

#include "gra/presets.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gra/error.hpp"
#include "gra/graph_file.hpp"
#include "gra/serialize.hpp"

namespace gra {

using nlohmann::json;

namespace {

RuleNumber rule_entry(const json& j) {
  long long n = -1;
  if (j.is_number_integer()) {
    n = j.get<long long>();
  } else if (j.is_string()) {
    const auto parsed = parse_rule_number(j.get<std::string>());
    if (!parsed) {
      throw Error(Errc::Parse, "bad rule number '" + j.get<std::string>() + "'");
    }
    n = *parsed;
  } else {
    throw Error(Errc::Parse, "rule entries must be numbers or strings");
  }
  return decode(n).number;
}

std::vector<RuleNumber> rules_from(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "single-division") {
      return single_division_subset();
    }
    throw Error(Errc::Parse, "unknown rule set '" + j.get<std::string>() + "'");
  }
  std::vector<RuleNumber> rules;
  if (j.is_array()) {
    for (const auto& e : j) rules.push_back(rule_entry(e));
    return rules;
  }
  if (j.is_object()) {
    const RuleNumber from = rule_entry(j.at("from"));
    const RuleNumber to = rule_entry(j.at("to"));
    for (RuleNumber r = from; r <= to; ++r) rules.push_back(r);
    return rules;
  }
  throw Error(Errc::Parse, "\"rules\" must be a name, a list or a range");
}

const std::vector<std::pair<std::string, std::string>>& presets() {
  static const std::vector<std::pair<std::string, std::string>> kPresets = {
      {"single-division-1024", R"({
  "rules": "single-division",
  "initial": "paper-g0",
  "budget": {
    "max_steps": 20000,
    "max_order": 5000000,
    "wall_clock_seconds": 60,
    "cycle_window": 100000
  },
  "thresholds": {
    "linear_r2": 0.999,
    "power_r2": 0.999,
    "exponential_r2": 0.999,
    "fit_fraction": 0.75,
    "quadratic_min_exponent": 1.7,
    "quadratic_max_exponent": 2.5,
    "period_cap": 128
  },
  "workers": 0,
  "journal": "single-division-1024.journal.jsonl",
  "report": "single-division-1024.report.json"
}
)"},
      {"single-division-smoke", R"({
  "rules": "single-division",
  "initial": "paper-g0",
  "budget": {
    "max_steps": 400,
    "max_order": 200000,
    "wall_clock_seconds": 5,
    "cycle_window": 100000
  },
  "workers": 0,
  "journal": "single-division-smoke.journal.jsonl",
  "report": "single-division-smoke.report.json"
}
)"},
  };
  return kPresets;
}

}  // namespace

SweepSettings parse_sweep_settings(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("bad sweep config: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::Parse, "sweep config must be an object");
  static const char* kKeys[] = {"rules",   "initial", "budget", "thresholds",
                                "workers", "journal", "report"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw Error(Errc::Parse, "unknown sweep config key '" + key + "'");
    }
  }
  if (!j.contains("rules")) throw Error(Errc::Parse, "sweep config needs \"rules\"");

  SweepSettings s;
  try {
    s.config.rules = rules_from(j.at("rules"));
    s.config.initial_name = j.value("initial", std::string("paper-g0"));
    s.config.initial = load_initial_graph(s.config.initial_name);
    if (j.contains("budget")) s.config.budget = budget_from_json(j.at("budget"));
    if (j.contains("thresholds")) {
      s.config.thresholds = thresholds_from_json(j.at("thresholds"));
    }
    s.config.workers = j.value("workers", 1U);
    s.journal = j.value("journal", std::string());
    s.report = j.value("report", std::string());
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("bad sweep config: ") + e.what());
  }
  if (s.config.rules.empty()) throw Error(Errc::EmptySweep, "empty sweep");
  return s;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : presets()) names.push_back(name);
  return names;
}

const std::string& preset_text(std::string_view name) {
  for (const auto& [n, text] : presets()) {
    if (n == name) return text;
  }
  throw Error(Errc::Parse, "unknown preset '" + std::string(name) + "'");
}

SweepSettings preset_settings(std::string_view name) {
  return parse_sweep_settings(preset_text(name));
}

bool is_reference_sweep(const SweepReport& report) {
  return report.rules == single_division_subset() &&
         report.initial_digest == graph_digest(canonical_g0());
}

}  // namespace gra
