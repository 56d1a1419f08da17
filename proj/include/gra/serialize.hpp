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

#ifndef GRA_SERIALIZE_HPP_
#define GRA_SERIALIZE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gra/growth.hpp"
#include "gra/sweep.hpp"
#include "gra/trace.hpp"

namespace gra {

nlohmann::json to_json(const ModelFit& fit);
nlohmann::json to_json(const GrowthClassification& c);
nlohmann::json to_json(const RuleResult& r);
nlohmann::json to_json(const Budget& b);
nlohmann::json to_json(const ClassifierConfig& c);

ModelFit model_fit_from_json(const nlohmann::json& j);
GrowthClassification classification_from_json(const nlohmann::json& j);
RuleResult rule_result_from_json(const nlohmann::json& j);
Budget budget_from_json(const nlohmann::json& j, const Budget& defaults = {});
ClassifierConfig thresholds_from_json(const nlohmann::json& j,
                                      const ClassifierConfig& defaults = {});

// Configuration echo shared by the journal header and the report.
nlohmann::json sweep_config_echo(const SweepReport& report);

// Consolidated report document ("gra-sweep-report/1").
nlohmann::json report_to_json(const SweepReport& report);
std::string report_to_string(const SweepReport& report);

// Summary of one evolution plus its classification.
nlohmann::json trace_summary(const EvolutionTrace& trace,
                             const GrowthClassification& c);

// "t,order,increment" with one row per step; row t carries
// increment = order[t+1] - order[t], left empty on the last row.
std::string series_csv(const EvolutionTrace& trace);
void write_series_csv(const EvolutionTrace& trace,
                      const std::filesystem::path& path);
// Reads the order column back; increments are recomputed from it.
std::vector<std::uint64_t> read_series_orders(const std::filesystem::path& path);
std::vector<std::uint64_t> parse_series_orders(const std::string& text);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gra

#endif  // GRA_SERIALIZE_HPP_
