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

#ifndef GRA_TESTS_SUPPORT_ISOMORPHISM_HPP_
#define GRA_TESTS_SUPPORT_ISOMORPHISM_HPP_

#include "gra/graph.hpp"

namespace gra::testing {

// State-preserving graph isomorphism by backtracking. Exponential in the
// worst case; only meant for graphs of a few dozen vertices.
bool state_isomorphic(const Graph& a, const Graph& b);

}  // namespace gra::testing

#endif  // GRA_TESTS_SUPPORT_ISOMORPHISM_HPP_
