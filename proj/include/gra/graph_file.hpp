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
#ifndef GRA_GRAPH_FILE_HPP_
#define GRA_GRAPH_FILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "gra/graph.hpp"

namespace gra {

// Plain-text graph format:
//
//   # comment lines and blank lines are ignored
//   states 1 0 0 0
//   0 1
//   0 2
//   ...
//
// Exactly one "states" line; its length is the order. Every other line is an
// undirected edge "u v" with 0-indexed vertices. The written form lists edges
// with u < v in lexicographic order, so a labeled graph always serializes to
// the same bytes.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const Graph& g, const std::filesystem::path& path);

// Built-in names ("k4-one-alive", "paper-g0") or a path to a graph file.
Graph load_initial_graph(std::string_view name_or_path);

}  // namespace gra

#endif  // GRA_GRAPH_FILE_HPP_
