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

#include "gra/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gra/error.hpp"

namespace gra {

using nlohmann::json;

namespace {

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

double number_from(const json& j) {
  return j.is_null() ? -std::numeric_limits<double>::infinity()
                     : j.get<double>();
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json to_json(const ModelFit& fit) {
  return {{"model", growth_model_name(fit.model)},
          {"a", number_or_null(fit.a)},
          {"b", number_or_null(fit.b)},
          {"r2", number_or_null(fit.r2)},
          {"adjusted_r2", number_or_null(fit.adjusted_r2)},
          {"points", fit.points}};
}

ModelFit model_fit_from_json(const json& j) {
  ModelFit fit;
  const auto model = parse_growth_model(j.at("model").get<std::string>());
  if (!model) throw Error(Errc::Parse, "unknown growth model");
  fit.model = *model;
  fit.a = number_from(j.at("a"));
  fit.b = number_from(j.at("b"));
  fit.r2 = number_from(j.at("r2"));
  fit.adjusted_r2 = number_from(j.at("adjusted_r2"));
  fit.points = j.at("points").get<std::size_t>();
  return fit;
}

json to_json(const GrowthClassification& c) {
  return {{"category", category_name(c.category)},
          {"cycle_period", optional_json(c.cycle_period)},
          {"increment_period", optional_json(c.increment_period)},
          {"increment_preperiod", optional_json(c.increment_preperiod)},
          {"fit", c.fit ? to_json(*c.fit) : json(nullptr)}};
}

GrowthClassification classification_from_json(const json& j) {
  GrowthClassification c;
  const auto cat = parse_category(j.at("category").get<std::string>());
  if (!cat) throw Error(Errc::Parse, "unknown growth category");
  c.category = *cat;
  c.cycle_period = optional_from<std::uint64_t>(j, "cycle_period");
  c.increment_period = optional_from<std::size_t>(j, "increment_period");
  c.increment_preperiod = optional_from<std::size_t>(j, "increment_preperiod");
  if (j.contains("fit") && !j.at("fit").is_null()) {
    c.fit = model_fit_from_json(j.at("fit"));
  }
  return c;
}

json to_json(const RuleResult& r) {
  json j = {{"rule", r.rule},
            {"classification", to_json(r.classification)},
            {"final_order", r.final_order},
            {"steps", r.steps},
            {"stop_reason", stop_reason_name(r.stop_reason)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

RuleResult rule_result_from_json(const json& j) {
  RuleResult r;
  r.rule = j.at("rule").get<RuleNumber>();
  r.classification = classification_from_json(j.at("classification"));
  r.final_order = j.at("final_order").get<std::uint64_t>();
  r.steps = j.at("steps").get<std::uint64_t>();
  const auto stop = parse_stop_reason(j.at("stop_reason").get<std::string>());
  if (!stop) throw Error(Errc::Parse, "unknown stop reason");
  r.stop_reason = *stop;
  r.error = j.value("error", "");
  return r;
}

json to_json(const Budget& b) {
  return {{"max_steps", b.max_steps},
          {"max_order", b.max_order},
          {"wall_clock_seconds", b.wall_clock_seconds},
          {"cycle_window", b.cycle_window}};
}

Budget budget_from_json(const json& j, const Budget& defaults) {
  Budget b = defaults;
  b.max_steps = j.value("max_steps", b.max_steps);
  b.max_order = j.value("max_order", b.max_order);
  b.wall_clock_seconds = j.value("wall_clock_seconds", b.wall_clock_seconds);
  b.cycle_window = j.value("cycle_window", b.cycle_window);
  return b;
}

json to_json(const ClassifierConfig& c) {
  return {{"linear_r2", c.linear_r2},
          {"power_r2", c.power_r2},
          {"exponential_r2", c.exponential_r2},
          {"fit_fraction", c.fit_fraction},
          {"quadratic_min_exponent", c.quadratic_min_exponent},
          {"quadratic_max_exponent", c.quadratic_max_exponent},
          {"period_cap", c.period_cap},
          {"time_origin", c.fit_options.time_origin},
          {"nonlinear_refinement", c.fit_options.nonlinear_refinement}};
}

ClassifierConfig thresholds_from_json(const json& j,
                                      const ClassifierConfig& defaults) {
  ClassifierConfig c = defaults;
  c.linear_r2 = j.value("linear_r2", c.linear_r2);
  c.power_r2 = j.value("power_r2", c.power_r2);
  c.exponential_r2 = j.value("exponential_r2", c.exponential_r2);
  c.fit_fraction = j.value("fit_fraction", c.fit_fraction);
  c.quadratic_min_exponent =
      j.value("quadratic_min_exponent", c.quadratic_min_exponent);
  c.quadratic_max_exponent =
      j.value("quadratic_max_exponent", c.quadratic_max_exponent);
  c.period_cap = j.value("period_cap", c.period_cap);
  c.fit_options.time_origin =
      j.value("time_origin", c.fit_options.time_origin);
  c.fit_options.nonlinear_refinement =
      j.value("nonlinear_refinement", c.fit_options.nonlinear_refinement);
  return c;
}

json sweep_config_echo(const SweepReport& report) {
  return {{"rules", report.rules},
          {"initial",
           {{"name", report.initial_name},
            {"digest", report.initial_digest.hex()},
            {"order", report.initial_order}}},
          {"budget", to_json(report.budget)},
          {"thresholds", to_json(report.thresholds)}};
}

json report_to_json(const SweepReport& report) {
  json categories = json::object();
  for (const auto& [c, n] : report.categories) {
    categories[std::string(category_name(c))] = n;
  }
  json periods = json::object();
  for (const auto& [p, n] : report.periods) periods[std::to_string(p)] = n;
  json results = json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  return {{"format", "gra-sweep-report/1"},
          {"config", sweep_config_echo(report)},
          {"aggregates", {{"categories", categories}, {"periods", periods}}},
          {"results", results}};
}

std::string report_to_string(const SweepReport& report) {
  return report_to_json(report).dump(1) + '\n';
}

json trace_summary(const EvolutionTrace& trace,
                   const GrowthClassification& c) {
  return {{"rule", trace.rule},
          {"steps", trace.steps()},
          {"initial_order", trace.orders.empty() ? 0 : trace.orders.front()},
          {"final_order", trace.final_order()},
          {"stop_reason", stop_reason_name(trace.stop_reason)},
          {"cycle_period", optional_json(trace.cycle_period)},
          {"cycle_entry", optional_json(trace.cycle_entry)},
          {"classification", to_json(c)}};
}

std::string series_csv(const EvolutionTrace& trace) {
  std::string out = "t,order,increment\n";
  for (std::size_t t = 0; t < trace.orders.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += std::to_string(trace.orders[t]);
    out += ',';
    if (t < trace.increments.size()) out += std::to_string(trace.increments[t]);
    out += '\n';
  }
  return out;
}

void write_series_csv(const EvolutionTrace& trace,
                      const std::filesystem::path& path) {
  write_text_file(path, series_csv(trace));
}

std::vector<std::uint64_t> parse_series_orders(const std::string& text) {
  std::vector<std::uint64_t> orders;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("t,", 0) == 0) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos) {
      throw Error(Errc::Parse, "series line " + std::to_string(lineno) +
                                   ": expected t,order,increment");
    }
    const std::string field =
        line.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                    : c2 - c1 - 1);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || p != field.data() + field.size()) {
      throw Error(Errc::Parse,
                  "series line " + std::to_string(lineno) + ": bad order");
    }
    orders.push_back(v);
  }
  return orders;
}

std::vector<std::uint64_t> read_series_orders(
    const std::filesystem::path& path) {
  return parse_series_orders(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gra
