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

#ifndef GRA_DENSE_ORACLE_HPP_
#define GRA_DENSE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gra/engine.hpp"
#include "gra/graph.hpp"
#include "gra/rule.hpp"

namespace gra {

inline constexpr std::size_t kDefaultOracleCap = 2000;

// Reference implementation on an explicit dense 0/1 adjacency matrix. Each
// division literally triples the row and column of the first flagged vertex.
// Quadratic per division; meant for differential tests only.
class DenseGraph {
 public:
  explicit DenseGraph(const Graph& g);

  std::size_t order() const noexcept { return states_.size(); }
  const std::vector<std::vector<std::uint8_t>>& matrix() const noexcept {
    return matrix_;
  }
  const std::vector<State>& states() const noexcept { return states_; }

  // C = 4 S + A S
  std::vector<std::uint8_t> configurations() const;

  // Divides the first flagged vertex, clears its flag and triples the flag
  // vector entry; repeats until no flag is left.
  void divide_all(std::vector<std::uint8_t> flags);

  void divide(std::size_t v);
  void set_states(std::vector<State> states) { states_ = std::move(states); }

  // Throws gra::Error if the matrix is not a valid 3-regular graph.
  Graph to_graph(std::uint64_t time) const;

 private:
  std::vector<std::vector<std::uint8_t>> matrix_;
  std::vector<State> states_;
};

// Throws OracleCapExceeded when g.order() > cap.
StepOutcome reference_step_dense(const Graph& g, const Rule& r,
                                 std::size_t cap = kDefaultOracleCap);

}  // namespace gra

#endif  // GRA_DENSE_ORACLE_HPP_
