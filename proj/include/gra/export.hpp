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

#ifndef GRA_EXPORT_HPP_
#define GRA_EXPORT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gra/graph.hpp"

namespace gra {

// Graph formats written by export_graph. Series (CSV) and report (JSON)
// output live in serialize.hpp.
enum class ExportFormat { EdgeList, Dot, GraphML };

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;
std::string_view export_format_name(ExportFormat f) noexcept;

// Deterministic text. DOT and GraphML carry each vertex state as a "state"
// attribute and a fill color (alive = purple, dead = orange).
std::string export_graph_string(const Graph& g, ExportFormat format);
void export_graph(const Graph& g, ExportFormat format,
                  const std::filesystem::path& path);

}  // namespace gra

#endif  // GRA_EXPORT_HPP_
