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
#include "gra/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gra/error.hpp"

namespace gra {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<int> states;
  bool have_states = false;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = split(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (toks[0] == "states") {
      if (have_states) parse_fail(lineno, "second states line");
      have_states = true;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        long long s = 0;
        if (!parse_int(toks[k], s)) {
          parse_fail(lineno, "bad state '" + std::string(toks[k]) + "'");
        }
        states.push_back(static_cast<int>(s));
      }
      continue;
    }
    if (toks.size() != 2) parse_fail(lineno, "expected 'u v'");
    long long u = 0;
    long long v = 0;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v) || u < 0 || v < 0 ||
        u > 0xffffffffLL || v > 0xffffffffLL) {
      parse_fail(lineno, "bad vertex index");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_states) parse_fail(lineno, "missing states line");
  return Graph::from_edges(edges, states);
}

std::string format_graph_text(const Graph& g) {
  std::string out = "states";
  out.reserve(g.order() * 20);
  for (State s : g.states()) {
    out += ' ';
    out += static_cast<char>('0' + s);
  }
  out += '\n';
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << format_graph_text(g);
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

Graph load_initial_graph(std::string_view name_or_path) {
  if (name_or_path == "k4-one-alive") return k4_one_alive();
  if (name_or_path == "paper-g0") return canonical_g0();
  return read_graph_file(std::filesystem::path(name_or_path));
}

}  // namespace gra
