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
#include "gra/rule.hpp"

#include <charconv>
#include <string>

#include "gra/error.hpp"

namespace gra {

Rule decode(long long number) {
  if (number < 0 || number > kMaxRuleNumber) {
    throw Error(Errc::RuleNumberOutOfRange,
                "rule number out of range: " + std::to_string(number));
  }
  Rule r;
  r.number = static_cast<RuleNumber>(number);
  for (int i = 0; i < 8; ++i) {
    r.next_state[i] = (r.number >> i) & 1U;
    r.divides[i] = (r.number >> (i + 8)) & 1U;
  }
  return r;
}

RuleNumber encode(const Rule& rule) {
  RuleNumber n = 0;
  for (int i = 0; i < 8; ++i) {
    n |= static_cast<RuleNumber>(rule.next_state[i] & 1U) << i;
    n |= static_cast<RuleNumber>(rule.divides[i] & 1U) << (i + 8);
  }
  return n;
}

std::vector<RuleNumber> single_division_subset() {
  std::vector<RuleNumber> out;
  out.reserve(1024);
  for (int j = 8; j <= 11; ++j) {
    for (RuleNumber i = 0; i < 256; ++i) out.push_back(i + (1U << j));
  }
  // j-major generation is already ascending: every j=9 entry exceeds 767.
  return out;
}

Rule complement_rule(const Rule& rule) {
  Rule c;
  for (int i = 0; i < 8; ++i) {
    c.next_state[i] = static_cast<std::uint8_t>(1 - rule.next_state[7 - i]);
    c.divides[i] = rule.divides[7 - i];
  }
  c.number = encode(c);
  return c;
}

std::optional<long long> parse_rule_number(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  } else if (text.size() > 2 && text[0] == '0' &&
             (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  // Grouped binary digits such as 0b10,1111,1101 are accepted.
  std::string digits;
  for (char ch : text) {
    if (base == 2 && (ch == ',' || ch == '_')) continue;
    digits += ch;
  }
  if (digits.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace gra
