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

#include "gra/dense_oracle.hpp"

#include <algorithm>
#include <string>

#include "gra/error.hpp"

namespace gra {

DenseGraph::DenseGraph(const Graph& g)
    : matrix_(g.order(), std::vector<std::uint8_t>(g.order(), 0)),
      states_(g.states().begin(), g.states().end()) {
  for (const auto& [u, v] : g.edges()) {
    matrix_[u][v] = 1;
    matrix_[v][u] = 1;
  }
}

std::vector<std::uint8_t> DenseGraph::configurations() const {
  const std::size_t n = order();
  std::vector<std::uint8_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned alive = 0;
    for (std::size_t j = 0; j < n; ++j) alive += matrix_[i][j] * states_[j];
    c[i] = static_cast<std::uint8_t>(4 * states_[i] + alive);
  }
  return c;
}

void DenseGraph::divide(std::size_t v) {
  const std::size_t n = order();
  std::vector<std::size_t> neighbors;
  for (std::size_t j = 0; j < n; ++j) {
    if (matrix_[v][j]) neighbors.push_back(j);
  }

  // Triple column v in every row (clearing it), then triple row v.
  for (auto& row : matrix_) {
    row[v] = 0;
    row.insert(row.begin() + static_cast<std::ptrdiff_t>(v) + 1, 2, 0);
  }
  matrix_[v].assign(n + 2, 0);
  matrix_.insert(matrix_.begin() + static_cast<std::ptrdiff_t>(v) + 1, 2,
                 std::vector<std::uint8_t>(n + 2, 0));

  // Spread the former ones: k-th neighbor goes to the k-th copy.
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    const std::size_t j = neighbors[k] < v ? neighbors[k] : neighbors[k] + 2;
    matrix_[v + k][j] = 1;
    matrix_[j][v + k] = 1;
  }
  // Intersection block: zeros on the diagonal, ones elsewhere.
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) matrix_[v + a][v + b] = a != b;
  }

  const State s = states_[v];
  states_.insert(states_.begin() + static_cast<std::ptrdiff_t>(v) + 1, 2, s);
}

void DenseGraph::divide_all(std::vector<std::uint8_t> flags) {
  for (;;) {
    auto it = std::find_if(flags.begin(), flags.end(),
                           [](std::uint8_t f) { return f != 0; });
    if (it == flags.end()) break;
    const auto v = static_cast<std::size_t>(it - flags.begin());
    divide(v);
    flags[v] = 0;
    flags.insert(flags.begin() + static_cast<std::ptrdiff_t>(v) + 1, 2, 0);
  }
}

Graph DenseGraph::to_graph(std::uint64_t time) const {
  const std::size_t n = order();
  std::vector<Neighbors> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!matrix_[i][j]) continue;
      if (matrix_[j][i] != 1 || k == 3) {
        throw Error(Errc::NotThreeRegular,
                    "dense row " + std::to_string(i) + " is malformed");
      }
      adjacency[i][k++] = static_cast<Vertex>(j);
    }
    if (k != 3) {
      throw Error(Errc::NotThreeRegular,
                  "dense row " + std::to_string(i) + " has degree " +
                      std::to_string(k));
    }
  }
  return Graph::from_adjacency(std::move(adjacency), states_, time);
}

StepOutcome reference_step_dense(const Graph& g, const Rule& r,
                                 std::size_t cap) {
  if (g.order() > cap) {
    throw Error(Errc::OracleCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds oracle cap " +
                    std::to_string(cap));
  }
  DenseGraph dense(g);
  const auto c = dense.configurations();

  std::vector<State> next(c.size());
  std::vector<std::uint8_t> flags(c.size());
  std::size_t divisions = 0;
  for (std::size_t v = 0; v < c.size(); ++v) {
    next[v] = r.next_state[c[v]];
    flags[v] = r.divides[c[v]];
    divisions += flags[v];
  }
  dense.set_states(std::move(next));
  dense.divide_all(std::move(flags));
  return {dense.to_graph(g.time() + 1), divisions, 2 * divisions};
}

}  // namespace gra
