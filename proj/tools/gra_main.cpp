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

// gra: command-line front end for the graph-rewriting automaton engine.
//
// Exit codes: 0 success (budget stops included), 1 usage error, 2 I/O error,
// 3 internal invariant violation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gra/engine.hpp"
#include "gra/error.hpp"
#include "gra/export.hpp"
#include "gra/graph_file.hpp"
#include "gra/growth.hpp"
#include "gra/presets.hpp"
#include "gra/rule.hpp"
#include "gra/serialize.hpp"
#include "gra/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

gra::Rule rule_from_text(const std::string& text) {
  const auto n = gra::parse_rule_number(text);
  if (!n) {
    throw gra::Error(gra::Errc::RuleNumberOutOfRange,
                     "rule number out of range: '" + text + "'");
  }
  return gra::decode(*n);
}

void check_graph(const gra::Graph& g) {
  try {
    g.validate();
  } catch (const gra::Error& e) {
    throw InvariantViolation(std::string("engine produced an invalid graph: ") +
                             e.what());
  }
}

std::string summary_line(const gra::EvolutionTrace& trace,
                         const gra::GrowthClassification& c) {
  std::string s = "rule " + std::to_string(trace.rule) +
                  ": steps=" + std::to_string(trace.steps()) +
                  " order=" + std::to_string(trace.orders.front()) + "->" +
                  std::to_string(trace.final_order()) +
                  " stop=" + std::string(gra::stop_reason_name(trace.stop_reason)) +
                  " category=" + std::string(gra::category_name(c.category));
  if (c.cycle_period) s += " period=" + std::to_string(*c.cycle_period);
  if (c.increment_period && !c.cycle_period) {
    s += " increment_period=" + std::to_string(*c.increment_period);
  }
  if (c.fit) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), " fit=%s(a=%.6g,b=%.6g,adj_r2=%.6f)",
                  std::string(gra::growth_model_name(c.fit->model)).c_str(),
                  c.fit->a, c.fit->b, c.fit->adjusted_r2);
    s += buf;
  }
  return s;
}

struct RunArgs {
  std::string rule;
  std::uint64_t steps = 100;
  std::string initial = "paper-g0";
  std::optional<std::uint64_t> max_order;
  std::optional<double> wall_clock;
};

void add_run_options(CLI::App* cmd, RunArgs& args, bool rule_required) {
  auto* rule = cmd->add_option("-r,--rule", args.rule,
                               "Rule number (decimal, 0b..., or 0x...)");
  if (rule_required) rule->required();
  cmd->add_option("-n,--steps", args.steps, "Number of steps")
      ->capture_default_str();
  cmd->add_option("-i,--initial", args.initial,
                  "Initial graph: k4-one-alive, paper-g0, or a graph file")
      ->capture_default_str();
  cmd->add_option("--max-order", args.max_order, "Stop before exceeding this order");
  cmd->add_option("--wall-clock", args.wall_clock, "Wall-clock budget in seconds");
}

gra::Evolution run(const RunArgs& args) {
  const gra::Rule rule = rule_from_text(args.rule);
  const gra::Graph g0 = gra::load_initial_graph(args.initial);
  gra::Budget budget;
  budget.max_steps = args.steps;
  if (args.max_order) budget.max_order = *args.max_order;
  budget.wall_clock_seconds = args.wall_clock.value_or(1e9);
  gra::Evolution ev = gra::evolve(g0, rule, budget);
  check_graph(ev.graph);
  return ev;
}

gra::ExportFormat format_from_text(const std::string& text) {
  const auto f = gra::parse_export_format(text);
  if (!f) {
    throw gra::Error(gra::Errc::Parse, "unknown export format '" + text +
                                           "' (edges, dot, graphml)");
  }
  return *f;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  RunArgs run;
  std::string graph_out;
  std::string format = "dot";
  std::string csv;
  std::string json;
};

int cmd_simulate(const SimulateArgs& a) {
  const auto format = format_from_text(a.format);
  const gra::Evolution ev = run(a.run);
  const auto c = gra::classify(ev.trace);
  if (!a.graph_out.empty()) gra::export_graph(ev.graph, format, a.graph_out);
  if (!a.csv.empty()) gra::write_series_csv(ev.trace, a.csv);
  if (!a.json.empty()) {
    gra::write_text_file(a.json, gra::trace_summary(ev.trace, c).dump(1) + "\n");
  }
  std::cout << summary_line(ev.trace, c) << "\n";
  return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string config;
  std::string preset;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::uint64_t> max_order;
  std::optional<double> wall_clock;
  std::string journal;
  std::string report;
  bool resume = false;
  bool quiet = false;
};

int cmd_sweep(const SweepArgs& a) {
  gra::SweepSettings settings;
  if (!a.preset.empty()) {
    settings = gra::preset_settings(a.preset);
  } else if (!a.config.empty()) {
    settings = gra::parse_sweep_settings(gra::read_text_file(a.config));
  } else {
    throw gra::Error(gra::Errc::Parse, "sweep needs a config file or --preset");
  }
  if (a.workers) settings.config.workers = *a.workers;
  if (a.max_steps) settings.config.budget.max_steps = *a.max_steps;
  if (a.max_order) settings.config.budget.max_order = *a.max_order;
  if (a.wall_clock) settings.config.budget.wall_clock_seconds = *a.wall_clock;
  if (!a.journal.empty()) settings.journal = a.journal;
  if (!a.report.empty()) settings.report = a.report;

  gra::SweepOptions options;
  if (!settings.journal.empty()) options.journal = settings.journal;
  if (!a.quiet) {
    options.progress = [](const gra::RuleResult& r, std::size_t done,
                          std::size_t total) {
      std::fprintf(stderr, "[%zu/%zu] rule %u %s\n", done, total, r.rule,
                   std::string(gra::category_name(r.classification.category))
                       .c_str());
    };
  }
  gra::SweepReport report;
  if (a.resume) {
    if (settings.journal.empty()) {
      throw gra::Error(gra::Errc::Parse, "--resume needs a journal path");
    }
    if (std::filesystem::exists(settings.journal)) {
      report = gra::resume_sweep(settings.journal, settings.config, options);
    } else {
      report = gra::run_sweep(settings.config, options);
    }
  } else {
    report = gra::run_sweep(settings.config, options);
  }
  if (!settings.report.empty()) {
    gra::write_text_file(settings.report, gra::report_to_string(report));
  }

  std::printf("%zu rules swept\n\n", report.results.size());
  if (gra::is_reference_sweep(report)) {
    std::fputs(gra::census_comparison(report).c_str(), stdout);
  } else {
    for (const auto& [c, n] : report.categories) {
      std::printf("%-16s %10zu\n", std::string(gra::category_name(c)).c_str(), n);
    }
    std::printf("\n");
    for (const auto& [p, n] : report.periods) {
      std::printf("period %-9llu %10zu\n", static_cast<unsigned long long>(p), n);
    }
  }
  return 0;
}

// ---- export ----------------------------------------------------------------

struct ExportArgs {
  RunArgs run;
  std::string format = "dot";
  std::string out;
};

int cmd_export(ExportArgs a) {
  const auto format = format_from_text(a.format);
  gra::Graph g = gra::load_initial_graph(a.run.initial);
  if (!a.run.rule.empty()) {
    g = run(a.run).graph;
  } else if (a.run.steps != 0 && a.run.steps != 100) {
    throw gra::Error(gra::Errc::Parse, "--steps needs --rule");
  }
  gra::export_graph(g, format, a.out);
  std::cout << "wrote " << a.out << " (" << g.order() << " vertices, "
            << g.order() * 3 / 2 << " edges)\n";
  return 0;
}

// ---- classify / intervals --------------------------------------------------

struct SeriesArgs {
  RunArgs run;
  std::string series;
  std::optional<std::uint64_t> cycle_period;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::string out;
};

gra::EvolutionTrace trace_from(const SeriesArgs& a) {
  if (!a.series.empty()) {
    gra::EvolutionTrace trace;
    trace.orders = gra::read_series_orders(a.series);
    if (trace.orders.empty()) {
      throw gra::Error(gra::Errc::Parse, "series file has no rows");
    }
    for (std::size_t t = 1; t < trace.orders.size(); ++t) {
      if (trace.orders[t] < trace.orders[t - 1]) {
        throw gra::Error(gra::Errc::Parse, "orders must be non-decreasing");
      }
      trace.increments.push_back(trace.orders[t] - trace.orders[t - 1]);
    }
    trace.cycle_period = a.cycle_period;
    if (a.cycle_period) trace.stop_reason = gra::StopReason::CycleFound;
    return trace;
  }
  if (a.run.rule.empty()) {
    throw gra::Error(gra::Errc::Parse, "give --series or --rule");
  }
  return run(a.run).trace;
}

int cmd_classify(const SeriesArgs& a) {
  const auto trace = trace_from(a);
  const auto c = gra::classify(trace);
  std::cout << gra::to_json(c).dump(1) << "\n";
  return 0;
}

int cmd_intervals(const SeriesArgs& a) {
  const auto trace = trace_from(a);
  const auto hist = gra::zero_growth_intervals(trace.increments);
  std::string text = "length,count\n";
  for (const auto& [len, n] : hist) {
    text += std::to_string(len) + "," + std::to_string(n) + "\n";
  }
  const std::size_t from = a.from.value_or(0);
  const std::size_t to = a.to.value_or(trace.increments.size());
  const auto support = gra::increment_support(trace.increments, from, to);
  if (!a.out.empty()) {
    gra::write_text_file(a.out, text);
  } else {
    std::cout << text;
  }
  std::cout << "support[" << from << "," << to << "):";
  for (auto v : support) std::cout << " " << v;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-rewriting automata on binary-state 3-regular graphs"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Evolve one rule");
  add_run_options(simulate, sim.run, true);
  simulate->add_option("--graph-out", sim.graph_out, "Write the final graph");
  simulate->add_option("--format", sim.format, "edges, dot or graphml")
      ->capture_default_str();
  simulate->add_option("--csv", sim.csv, "Write t,order,increment series");
  simulate->add_option("--json", sim.json, "Write a JSON trace summary");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Run and classify many rules");
  sweep->add_option("config", sw.config, "JSON sweep configuration");
  sweep->add_option("--preset", sw.preset,
                    "Built-in configuration (single-division-1024, "
                    "single-division-smoke)");
  sweep->add_option("-j,--workers", sw.workers, "Worker threads (0 = all cores)");
  sweep->add_option("--max-steps", sw.max_steps);
  sweep->add_option("--max-order", sw.max_order);
  sweep->add_option("--wall-clock", sw.wall_clock, "Per-rule seconds");
  sweep->add_option("--journal", sw.journal, "Append-only JSON-lines journal");
  sweep->add_option("--report", sw.report, "Consolidated JSON report");
  sweep->add_flag("--resume", sw.resume, "Complete an interrupted journal");
  sweep->add_flag("-q,--quiet", sw.quiet, "No per-rule progress on stderr");

  ExportArgs ex;
  auto* exp = app.add_subcommand("export", "Write a graph file");
  add_run_options(exp, ex.run, false);
  exp->add_option("--format", ex.format, "edges, dot or graphml")
      ->capture_default_str();
  exp->add_option("-o,--out", ex.out, "Output path")->required();

  SeriesArgs cl;
  auto* classify = app.add_subcommand("classify", "Classify a growth series");
  add_run_options(classify, cl.run, false);
  classify->add_option("--series", cl.series, "CSV written by simulate --csv");
  classify->add_option("--cycle-period", cl.cycle_period,
                       "Known cycle period for a series input");

  SeriesArgs iv;
  auto* intervals = app.add_subcommand(
      "intervals", "Histogram of zero-growth run lengths");
  add_run_options(intervals, iv.run, false);
  intervals->add_option("--series", iv.series, "CSV written by simulate --csv");
  intervals->add_option("--from", iv.from, "Support window start (step)");
  intervals->add_option("--to", iv.to, "Support window end (exclusive)");
  intervals->add_option("-o,--out", iv.out, "Write the histogram as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*sweep) return cmd_sweep(sw);
    if (*exp) return cmd_export(ex);
    if (*classify) return cmd_classify(cl);
    if (*intervals) return cmd_intervals(iv);
  } catch (const InvariantViolation& e) {
    std::cerr << "gra: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const gra::Error& e) {
    std::cerr << "gra: " << e.what() << "\n";
    return e.code() == gra::Errc::Io ? kExitIo : kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "gra: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "gra: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
