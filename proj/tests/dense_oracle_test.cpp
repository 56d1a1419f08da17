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

#include <vector>

#include "gra/dense_oracle.hpp"
#include "gra/engine.hpp"
#include "gra/error.hpp"
#include "gra/rule.hpp"
#include "support/random_graph.hpp"

namespace gra {
namespace {

TEST(DenseGraph, GoldenDivision) {
  DenseGraph d(k4_one_alive());
  d.divide(1);
  const std::vector<std::vector<std::uint8_t>> expected = {
      {0, 1, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 0},
      {0, 1, 1, 0, 0, 1}, {1, 0, 1, 0, 0, 1}, {1, 0, 0, 1, 1, 0},
  };
  EXPECT_EQ(d.matrix(), expected);
  EXPECT_EQ(d.states(), (std::vector<State>{1, 0, 0, 0, 0, 0}));
}

TEST(DenseGraph, ConfigurationsMatchSparse) {
  testing::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(4, 100, rng);
    EXPECT_EQ(DenseGraph(g).configurations(), configuration_vector(g));
    EXPECT_EQ(DenseGraph(g).to_graph(g.time()), g);
  }
}

TEST(ReferenceStep, CapIsEnforced) {
  testing::Rng rng(52);
  const Graph g = testing::random_cubic_graph(30, rng);
  try {
    reference_step_dense(g, decode(765), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OracleCapExceeded);
  }
  EXPECT_NO_THROW(reference_step_dense(g, decode(765), 30));
}

void expect_same(const StepOutcome& a, const StepOutcome& b) {
  ASSERT_EQ(a.graph, b.graph);
  ASSERT_EQ(a.divisions_performed, b.divisions_performed);
  ASSERT_EQ(a.order_increment, b.order_increment);
}

TEST(ReferenceStep, Rule765FromK4ForFourSteps) {
  Graph g = k4_one_alive();
  const Rule r = decode(765);
  for (int t = 0; t < 4; ++t) {
    const StepOutcome fast = step(g, r);
    expect_same(fast, reference_step_dense(g, r));
    g = fast.graph;
  }
  EXPECT_EQ(g.order(), 52u);
}

TEST(ReferenceStep, RandomGraphsAndRules) {
  testing::Rng rng(53);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_graph(4, 200, rng);
    const Rule r = testing::random_rule(rng);
    expect_same(step(g, r), reference_step_dense(g, r));
  }
}

TEST(ReferenceStep, G0UnderEverySubsetRuleForFiveSteps) {
  for (RuleNumber n : single_division_subset()) {
    const Rule r = decode(n);
    Graph g = canonical_g0();
    for (int t = 0; t < 5; ++t) {
      const StepOutcome fast = step(g, r);
      const StepOutcome slow = reference_step_dense(g, r, 1u << 20);
      ASSERT_EQ(fast.graph, slow.graph) << "rule " << n << " step " << t;
      g = fast.graph;
    }
  }
}

}  // namespace
}  // namespace gra
