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
#ifndef GRA_RULE_HPP_
#define GRA_RULE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gra {

using RuleNumber = std::uint32_t;

inline constexpr RuleNumber kMaxRuleNumber = 65535;

// A decoded rule. Bit i of the number is the next state for configuration i,
// bit i+8 says whether a vertex in configuration i divides.
struct Rule {
  RuleNumber number = 0;
  std::array<std::uint8_t, 8> next_state{};
  std::array<std::uint8_t, 8> divides{};

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Throws gra::Error(RuleNumberOutOfRange) outside [0, 65535].
Rule decode(long long number);
RuleNumber encode(const Rule& rule);

// Rules with exactly one division bit, placed on a dead configuration (0..3).
// 1024 entries, ascending.
std::vector<RuleNumber> single_division_subset();

// Color-swapped rule: next*(c) = 1 - next(7-c), divides*(c) = divides(7-c).
Rule complement_rule(const Rule& rule);

// Accepts decimal ("2222"), binary ("0b100010101110") or hex ("0x8ae").
std::optional<long long> parse_rule_number(std::string_view text);

}  // namespace gra

#endif  // GRA_RULE_HPP_
