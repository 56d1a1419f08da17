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

#include "gra/export.hpp"

#include "gra/graph_file.hpp"
#include "gra/serialize.hpp"

namespace gra {

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept {
  if (name == "edges" || name == "edge-list") return ExportFormat::EdgeList;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "graphml") return ExportFormat::GraphML;
  return std::nullopt;
}

std::string_view export_format_name(ExportFormat f) noexcept {
  switch (f) {
    case ExportFormat::EdgeList: return "edges";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::GraphML: return "graphml";
  }
  return "edges";
}

namespace {

const char* color(State s) { return s ? "purple" : "orange"; }

std::string to_dot(const Graph& g) {
  std::string out = "graph gra {\n  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + " [state=" + std::to_string(g.state(v)) +
           ", fillcolor=" + color(g.state(v)) + "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_graphml(const Graph& g) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"state\" for=\"node\" attr.name=\"state\" "
      "attr.type=\"int\"/>\n"
      "  <key id=\"color\" for=\"node\" attr.name=\"color\" "
      "attr.type=\"string\"/>\n"
      "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "    <node id=\"n" + std::to_string(v) + "\"><data key=\"state\">" +
           std::to_string(g.state(v)) + "</data><data key=\"color\">" +
           color(g.state(v)) + "</data></node>\n";
  }
  std::size_t e = 0;
  for (const auto& [u, v] : g.edges()) {
    out += "    <edge id=\"e" + std::to_string(e++) + "\" source=\"n" +
           std::to_string(u) + "\" target=\"n" + std::to_string(v) +
           "\"/>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

}  // namespace

std::string export_graph_string(const Graph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::EdgeList: return format_graph_text(g);
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::GraphML: return to_graphml(g);
  }
  return {};
}

void export_graph(const Graph& g, ExportFormat format,
                  const std::filesystem::path& path) {
  write_text_file(path, export_graph_string(g, format));
}

}  // namespace gra
