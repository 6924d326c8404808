// Copyright 2026 The slicekit Authors
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

#include "slicekit/export.hpp"

#include <sstream>

#include "json.hpp"
#include "slicekit/error.hpp"

namespace slicekit {

namespace {

using nlohmann::json;

std::string dot_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      case '\t': out += ' '; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_dot(const DependencyGraph& graph, const MethodAst& method) {
  return to_dot(graph, method, {}, {});
}

std::string to_dot(const DependencyGraph& graph, const MethodAst& method,
                   const std::set<NodeId>& highlighted,
                   const std::set<NodeId>& emphasized) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(method.name) << "\" {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    out << "  n" << id << " [label=\""
        << dot_escape(id < method.size() ? method.statements[id].text : "")
        << "\"";
    if (highlighted.contains(id)) out << ", style=filled, fillcolor=\"lightgrey\"";
    if (emphasized.contains(id)) out << ", penwidth=2";
    out << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [style="
        << (e.kind == EdgeKind::Control ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const DependencyGraph& graph, const MethodAst& method) {
  json nodes = json::array();
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const StatementNode& node = method.node(id);
    nodes.push_back({{"id", id},
                     {"kind", to_string(node.kind)},
                     {"line", node.position.line},
                     {"text", node.text}});
  }
  json edges = json::array();
  for (const Edge& e : graph.edges())
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"kind", to_string(e.kind)}});
  json doc = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  return doc.dump(2);
}

DependencyGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc["nodes"].is_array() || !doc["edges"].is_array())
    throw SchemaError("graph JSON: expected object with 'nodes' and 'edges' arrays");

  const json& nodes = doc["nodes"];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& n = nodes[i];
    if (!n.is_object() || !n.contains("id") || !n["id"].is_number_unsigned() ||
        n["id"].get<std::size_t>() != i)
      throw SchemaError("graph JSON: node " + std::to_string(i) +
                        " must carry id " + std::to_string(i));
  }

  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("src") || !e.contains("dst") ||
        !e.contains("kind") || !e["src"].is_number_unsigned() ||
        !e["dst"].is_number_unsigned() || !e["kind"].is_string())
      throw SchemaError("graph JSON: malformed edge " + e.dump());
    auto kind = edge_kind_from_string(e["kind"].get<std::string>());
    if (!kind) throw SchemaError("graph JSON: unknown edge kind " + e["kind"].dump());
    edges.push_back({e["src"].get<NodeId>(), e["dst"].get<NodeId>(), *kind});
  }
  try {
    return DependencyGraph(nodes.size(), edges);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("graph JSON: ") + e.what());
  }
}

}  // namespace slicekit
