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

#include "gra/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gra/error.hpp"
#include "gra/serialize.hpp"

namespace gra {

RuleResult run_rule(const Graph& initial, RuleNumber rule, const Budget& budget,
                    const ClassifierConfig& thresholds) {
  RuleResult result;
  result.rule = rule;
  try {
    const Evolution ev = evolve(initial, decode(rule), budget);
    result.final_order = ev.trace.final_order();
    result.steps = ev.trace.steps();
    result.stop_reason = ev.trace.stop_reason;
    result.classification = classify(ev.trace, thresholds);
  } catch (const std::exception& e) {
    result.classification = {};
    result.error = e.what();
  }
  return result;
}

void aggregate(SweepReport& report) {
  report.categories.clear();
  for (auto c : kAllCategories) report.categories[c] = 0;
  for (const auto& r : report.results) ++report.categories[r.classification.category];
  report.periods = period_census(report);
}

std::map<std::uint64_t, std::size_t> period_census(const SweepReport& report) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& r : report.results) {
    if (r.classification.category == GrowthCategory::Halted &&
        r.classification.cycle_period) {
      ++out[*r.classification.cycle_period];
    }
  }
  return out;
}

namespace {

SweepReport empty_report(const SweepConfig& config) {
  if (config.rules.empty()) throw Error(Errc::EmptySweep, "empty sweep");
  SweepReport report;
  report.rules = config.rules;
  std::sort(report.rules.begin(), report.rules.end());
  report.rules.erase(std::unique(report.rules.begin(), report.rules.end()),
                     report.rules.end());
  for (auto r : report.rules) {
    if (r > kMaxRuleNumber) {
      throw Error(Errc::RuleNumberOutOfRange,
                  "rule number out of range: " + std::to_string(r));
    }
  }
  if (config.budget.max_steps == 0 || config.budget.max_order == 0 ||
      !(config.budget.wall_clock_seconds > 0)) {
    throw Error(Errc::Parse, "sweep budgets must be positive");
  }
  config.initial.validate();
  report.initial_name = config.initial_name;
  report.initial_digest = graph_digest(config.initial);
  report.initial_order = config.initial.order();
  report.budget = config.budget;
  report.thresholds = config.thresholds;
  return report;
}

class Journal {
 public:
  Journal(const std::filesystem::path& path, std::ios::openmode mode)
      : out_(path, mode | std::ios::binary), path_(path) {
    if (!out_) throw Error(Errc::Io, "cannot write journal " + path.string());
  }

  void write_line(const std::string& line) {
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
    if (!out_) throw Error(Errc::Io, "journal write failed: " + path_.string());
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
  std::filesystem::path path_;
};

std::string journal_header(const SweepReport& report) {
  nlohmann::json h;
  h["journal"] = "gra-sweep-journal/1";
  h["config"] = sweep_config_echo(report);
  return h.dump();
}

// Runs the rules in `todo` and stores results into `report.results`.
void run_missing(SweepReport& report, const std::vector<RuleNumber>& todo,
                 const SweepConfig& config, const SweepOptions& options,
                 Journal* journal) {
  std::vector<RuleResult> fresh(todo.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{report.results.size()};
  const std::size_t total = report.rules.size();
  std::mutex progress_mu;
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      fresh[i] = run_rule(config.initial, todo[i], config.budget,
                          config.thresholds);
      try {
        if (journal) journal->write_line(to_json(fresh[i]).dump());
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
      const std::size_t d = ++done;
      if (options.progress) {
        std::lock_guard lock(progress_mu);
        options.progress(fresh[i], d, total);
      }
    }
  };

  unsigned workers = config.workers == 0
                         ? std::max(1U, std::thread::hardware_concurrency())
                         : config.workers;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, todo.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : fresh) report.results.push_back(std::move(r));
  std::sort(report.results.begin(), report.results.end(),
            [](const RuleResult& a, const RuleResult& b) {
              return a.rule < b.rule;
            });
  aggregate(report);
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config, const SweepOptions& options) {
  SweepReport report = empty_report(config);
  std::optional<Journal> journal;
  if (options.journal) {
    journal.emplace(*options.journal, std::ios::trunc);
    journal->write_line(journal_header(report));
  }
  run_missing(report, report.rules, config, options,
              journal ? &*journal : nullptr);
  return report;
}

SweepReport resume_sweep(const std::filesystem::path& path,
                         const SweepConfig& config,
                         const SweepOptions& options) {
  SweepReport report = empty_report(config);
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Errc::Parse, "journal " + path.string() + " is empty");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("bad journal header: ") + e.what());
  }
  if (header.value("journal", "") != "gra-sweep-journal/1") {
    throw Error(Errc::Parse, "not a sweep journal: " + path.string());
  }
  if (header["config"] != sweep_config_echo(report)) {
    throw Error(Errc::ConfigMismatch,
                "journal " + path.string() +
                    " was written for a different sweep configuration");
  }

  // Keep every complete record; a torn final line is dropped.
  const std::set<RuleNumber> wanted(report.rules.begin(), report.rules.end());
  std::set<RuleNumber> have;
  std::vector<std::string> kept;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    RuleResult r;
    try {
      r = rule_result_from_json(nlohmann::json::parse(line));
    } catch (const std::exception&) {
      continue;
    }
    if (!wanted.count(r.rule) || !have.insert(r.rule).second) continue;
    report.results.push_back(std::move(r));
    kept.push_back(line);
  }

  std::vector<RuleNumber> todo;
  for (auto r : report.rules) {
    if (!have.count(r)) todo.push_back(r);
  }
  if (todo.empty()) {
    std::sort(report.results.begin(), report.results.end(),
              [](const RuleResult& a, const RuleResult& b) {
                return a.rule < b.rule;
              });
    aggregate(report);
    return report;
  }

  // Rewrite the journal without any torn tail, then append.
  {
    std::string clean = journal_header(report) + '\n';
    for (const auto& k : kept) clean += k + '\n';
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    write_text_file(tmp, clean);
    std::filesystem::rename(tmp, path);
  }
  Journal journal(path, std::ios::app);
  run_missing(report, todo, config, options, &journal);
  return report;
}

std::string census_comparison(const SweepReport& report) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-16s %10s %10s %8s\n", "category",
                "this run", "reference", "diff");
  out << buf;
  std::size_t total = 0;
  for (std::size_t i = 0; i < std::size(kAllCategories); ++i) {
    const auto c = kAllCategories[i];
    const auto it = report.categories.find(c);
    const std::size_t mine = it == report.categories.end() ? 0 : it->second;
    total += mine;
    const long diff = static_cast<long>(mine) -
                      static_cast<long>(kReferenceCategoryCounts[i]);
    std::snprintf(buf, sizeof(buf), "%-16s %10zu %10zu %+8ld\n",
                  std::string(category_name(c)).c_str(), mine,
                  kReferenceCategoryCounts[i], diff);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "%-16s %10zu %10d\n", "total", total, 1024);
  out << buf << '\n';

  std::snprintf(buf, sizeof(buf), "%-16s %10s %10s %8s\n", "cycle period",
                "this run", "reference", "diff");
  out << buf;
  std::set<std::uint64_t> keys;
  for (const auto& [p, n] : report.periods) keys.insert(p);
  for (const auto& [p, n] : kReferencePeriodCounts) keys.insert(p);
  for (auto p : keys) {
    const auto a = report.periods.find(p);
    const auto b = kReferencePeriodCounts.find(p);
    const std::size_t mine = a == report.periods.end() ? 0 : a->second;
    const std::size_t ref = b == kReferencePeriodCounts.end() ? 0 : b->second;
    std::snprintf(buf, sizeof(buf), "%-16llu %10zu %10zu %+8ld\n",
                  static_cast<unsigned long long>(p), mine, ref,
                  static_cast<long>(mine) - static_cast<long>(ref));
    out << buf;
  }
  return out.str();
}

}  // namespace gra
