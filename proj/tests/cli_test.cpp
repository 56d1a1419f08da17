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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "gra/graph.hpp"
#include "gra/graph_file.hpp"
#include "gra/serialize.hpp"

namespace gra {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string output;  // stdout and stderr interleaved
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(GRA_CLI_PATH) + " " + args + " 2>&1";
  CliRun r{-1, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gra_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, SimulateRule765WritesOutputs) {
  const CliRun r = run_cli("simulate -r 765 -n 4 -i k4-one-alive --csv " + path("s.csv") +
                        " --graph-out " + path("g.dot") + " --json " + path("s.json"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("rule 765"), std::string::npos);
  EXPECT_NE(r.output.find("order=4->52"), std::string::npos);
  const auto orders = read_series_orders(path("s.csv"));
  EXPECT_EQ(orders.size(), 5u);
  const std::string dot = read_text_file(path("g.dot"));
  EXPECT_EQ(dot.rfind("graph gra {", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-'), 2 * 78);  // 52*3/2 edges
  const auto summary = nlohmann::json::parse(read_text_file(path("s.json")));
  EXPECT_EQ(summary["final_order"], 52);
}

TEST_F(Cli, SimulateRuleZeroHalts) {
  const CliRun r = run_cli("simulate -r 0 -n 50");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("category=Halted"), std::string::npos);
  EXPECT_NE(r.output.find("period=1"), std::string::npos);
}

TEST_F(Cli, SimulateAcceptsBinaryRuleNumbers) {
  const CliRun a = run_cli("simulate -r 0b10,1111,1101 -n 3 -i k4-one-alive");
  const CliRun b = run_cli("simulate -r 765 -n 3 -i k4-one-alive");
  ASSERT_EQ(a.status, 0) << a.output;
  EXPECT_EQ(a.output, b.output);
}

TEST_F(Cli, BudgetStopIsSuccess) {
  const CliRun r = run_cli("simulate -r 256 -n 100 --max-order 10000");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("stop=MaxOrder"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  CliRun r = run_cli("simulate -r 70000");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("rule number out of range"), std::string::npos);
  EXPECT_EQ(run_cli("simulate -r banana").status, 1);
  EXPECT_EQ(run_cli("frobnicate").status, 1);
  EXPECT_EQ(run_cli("simulate -r 765 -i /nonexistent/g.graph").status, 2);
  EXPECT_EQ(run_cli("export -r 765 -n 1 -o /nonexistent/dir/g.dot").status, 2);
  EXPECT_EQ(run_cli("sweep " + path("missing.json")).status, 2);
  write_text_file(path("bad.graph"), "states 0 0 0\n0 1\n");
  EXPECT_EQ(run_cli("simulate -r 765 -i " + path("bad.graph")).status, 1);
}

TEST_F(Cli, EmptySweepIsAnError) {
  write_text_file(path("empty.json"), R"({"rules": []})");
  const CliRun r = run_cli("sweep " + path("empty.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("empty sweep"), std::string::npos);
}

TEST_F(Cli, SweepRerunIsByteIdentical) {
  write_text_file(path("cfg.json"),
                  R"({"rules": {"from": 256, "to": 320}, "budget": {"max_steps": 60}})");
  const CliRun a = run_cli("sweep " + path("cfg.json") + " -q -j 1 --report " +
                        path("a.json") + " --journal " + path("a.jsonl"));
  const CliRun b = run_cli("sweep " + path("cfg.json") + " -q -j 3 --report " +
                        path("b.json"));
  ASSERT_EQ(a.status, 0) << a.output;
  ASSERT_EQ(b.status, 0) << b.output;
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
  EXPECT_EQ(a.output, b.output);
  const auto report = nlohmann::json::parse(read_text_file(path("a.json")));
  EXPECT_EQ(report["results"].size(), 65u);

  // Resuming a finished journal reproduces the same report.
  const CliRun c = run_cli("sweep " + path("cfg.json") + " -q --resume --journal " +
                        path("a.jsonl") + " --report " + path("c.json"));
  ASSERT_EQ(c.status, 0) << c.output;
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("c.json")));

  // Flags override the file; a different budget no longer matches the journal.
  const CliRun d = run_cli("sweep " + path("cfg.json") + " -q --max-steps 61 --resume --journal " +
                        path("a.jsonl"));
  EXPECT_EQ(d.status, 1);
}

TEST_F(Cli, SimulateRerunIsByteIdentical) {
  for (const char* name : {"a", "b"}) {
    const CliRun r = run_cli(std::string("simulate -r 2222 -n 300 --format graphml --graph-out ") +
                          path(std::string(name) + ".graphml") + " --csv " +
                          path(std::string(name) + ".csv") + " --json " +
                          path(std::string(name) + ".json"));
    ASSERT_EQ(r.status, 0) << r.output;
  }
  for (const char* ext : {".graphml", ".csv", ".json"}) {
    EXPECT_EQ(read_text_file(path(std::string("a") + ext)),
              read_text_file(path(std::string("b") + ext)));
  }
}

TEST_F(Cli, ExportEdgeListRoundTrips) {
  const CliRun r = run_cli("export -r 765 -n 3 -i k4-one-alive --format edges -o " + path("g.graph"));
  ASSERT_EQ(r.status, 0) << r.output;
  const Graph g = read_graph_file(path("g.graph"));
  EXPECT_NO_THROW(g.validate());
  // Feed it back in as an initial graph.
  const CliRun again = run_cli("simulate -r 0 -n 5 -i " + path("g.graph"));
  EXPECT_EQ(again.status, 0) << again.output;
}

TEST_F(Cli, ClassifyAndIntervalsFromSeries) {
  ASSERT_EQ(run_cli("simulate -r 2222 -n 2000 --csv " + path("s.csv")).status, 0);
  const CliRun c = run_cli("classify --series " + path("s.csv"));
  ASSERT_EQ(c.status, 0) << c.output;
  EXPECT_NE(c.output.find("\"category\""), std::string::npos);
  const CliRun direct = run_cli("classify -r 2222 -n 2000");
  ASSERT_EQ(direct.status, 0) << direct.output;

  const CliRun iv = run_cli("intervals --series " + path("s.csv") + " -o " + path("h.csv"));
  ASSERT_EQ(iv.status, 0) << iv.output;
  const std::string hist = read_text_file(path("h.csv"));
  EXPECT_EQ(hist.rfind("length,count", 0), 0u);
  EXPECT_NE(iv.output.find("support"), std::string::npos);

  const CliRun halted = run_cli("classify --series " + path("s.csv") + " --cycle-period 2");
  EXPECT_NE(halted.output.find("Halted"), std::string::npos);
}

TEST_F(Cli, ConfigFileAndPresetsAreEquivalent) {
  const CliRun a = run_cli("sweep " + std::string(GRA_SOURCE_DIR) +
                        "/configs/single-division-smoke.json -q --max-steps 30 --report " +
                        path("a.json"));
  const CliRun b = run_cli("sweep --preset single-division-smoke -q --max-steps 30 --report " +
                        path("b.json"));
  ASSERT_EQ(a.status, 0) << a.output;
  ASSERT_EQ(b.status, 0) << b.output;
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
  EXPECT_NE(a.output.find("reference"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(read_text_file(path("a.json")))["results"].size(), 1024u);
}

}  // namespace
}  // namespace gra
