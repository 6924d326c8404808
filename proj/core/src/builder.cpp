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

#include "slicekit/builder.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace slicekit {

namespace {

using Definitions = std::map<std::string, std::set<NodeId>>;

// Writer -> later reader pairs in reader order. A reader of two variables
// with a shared writer yields that pair twice.
template <typename Emit>
void forward_data_pairs(const MethodAst& method, Emit emit) {
  // Writers seen so far, per variable, in increasing id order.
  std::map<std::string, std::vector<NodeId>> writers;
  for (const StatementNode& node : method.statements) {
    for (const std::string& var : node.reads) {
      auto it = writers.find(var);
      if (it == writers.end()) continue;
      for (NodeId w : it->second) emit(w, node.id);
    }
    for (const std::string& var : node.writes) writers[var].push_back(node.id);
  }
}

std::set<NodePair> forward_data_edges(const MethodAst& method) {
  std::set<NodePair> edges;
  forward_data_pairs(method, [&](NodeId w, NodeId r) { edges.emplace(w, r); });
  return edges;
}

void merge_into(Definitions& into, const Definitions& from) {
  for (const auto& [var, defs] : from) into[var].insert(defs.begin(), defs.end());
}

// Structured reaching definitions over the statement tree, without loop
// back-edges. Every definition reaching a node has a smaller id.
class ReachingDefinitions {
 public:
  explicit ReachingDefinitions(const MethodAst& method) : method_(method) {}

  std::set<NodePair> run() {
    Definitions defs;
    const StatementNode& proto = method_.node(kPrototypeId);
    define(proto, defs);
    sequence(proto.children, 0, proto.children.size(), defs);
    return std::move(edges_);
  }

 private:
  void use(const StatementNode& node, const Definitions& defs) {
    for (const std::string& var : node.reads) {
      auto it = defs.find(var);
      if (it == defs.end()) continue;
      for (NodeId w : it->second) edges_.emplace(w, node.id);
    }
  }

  static void define(const StatementNode& node, Definitions& defs) {
    for (const std::string& var : node.writes) defs[var] = {node.id};
  }

  void sequence(const std::vector<NodeId>& ids, std::size_t begin,
                std::size_t end, Definitions& defs) {
    for (std::size_t i = begin; i < end; ++i) statement(method_.node(ids[i]), defs);
  }

  void statement(const StatementNode& node, Definitions& defs) {
    use(node, defs);
    define(node, defs);
    switch (node.kind) {
      case StatementKind::If: {
        Definitions then_defs = defs;
        sequence(node.children, 0, node.then_count, then_defs);
        Definitions else_defs = defs;
        sequence(node.children, node.then_count, node.children.size(), else_defs);
        defs = std::move(then_defs);
        merge_into(defs, else_defs);
        break;
      }
      case StatementKind::While:
      case StatementKind::For: {
        // The body may run zero times.
        Definitions body = defs;
        sequence(node.children, 0, node.children.size(), body);
        merge_into(defs, body);
        break;
      }
      default:
        break;
    }
  }

  const MethodAst& method_;
  std::set<NodePair> edges_;
};

std::set<NodePair> loop_back_edges(const MethodAst& method) {
  std::set<NodePair> edges;
  for (const StatementNode& loop : method.statements) {
    if (!is_loop(loop.kind)) continue;
    std::vector<NodeId> members = method.descendants(loop.id);
    members.insert(members.begin(), loop.id);
    for (NodeId writer : members) {
      const auto& writes = method.node(writer).writes;
      if (writes.empty()) continue;
      for (NodeId reader : members) {
        if (reader >= writer) break;
        for (const std::string& var : method.node(reader).reads) {
          if (writes.contains(var)) {
            edges.emplace(writer, reader);
            break;
          }
        }
      }
    }
  }
  return edges;
}

}  // namespace

std::string_view to_string(DependenceMode mode) {
  switch (mode) {
    case DependenceMode::AllDefs: return "all-defs";
    case DependenceMode::ReachingDefs: return "reaching-defs";
    case DependenceMode::LoopAware: return "loop-aware";
  }
  return "?";
}

std::optional<DependenceMode> dependence_mode_from_string(std::string_view name) {
  if (name == "all-defs") return DependenceMode::AllDefs;
  if (name == "reaching-defs") return DependenceMode::ReachingDefs;
  if (name == "loop-aware") return DependenceMode::LoopAware;
  return std::nullopt;
}

std::set<NodePair> data_edges(const MethodAst& method) {
  return forward_data_edges(method);
}

std::set<NodePair> data_edges(const MethodAst& method, DependenceMode mode) {
  switch (mode) {
    case DependenceMode::AllDefs:
      return forward_data_edges(method);
    case DependenceMode::ReachingDefs:
      return ReachingDefinitions(method).run();
    case DependenceMode::LoopAware: {
      std::set<NodePair> edges = forward_data_edges(method);
      edges.merge(loop_back_edges(method));
      return edges;
    }
  }
  return {};
}

std::set<NodePair> control_edges(const MethodAst& method) {
  std::set<NodePair> edges;
  for (NodeId v = 1; v < method.size(); ++v) edges.emplace(kPrototypeId, v);
  for (const StatementNode& node : method.statements) {
    if (!node.is_control()) continue;
    for (NodeId child : node.children) edges.emplace(node.id, child);
  }
  return edges;
}

DependencyGraph build_graph(const MethodAst& method, DependenceMode mode) {
  // Adjacency is filled directly; the edge count is quadratic in the
  // statement count, so avoiding a global ordered set matters.
  std::vector<std::vector<Arc>> adjacency(method.size());
  auto add = [&](NodeId u, NodeId v, EdgeKind kind) { adjacency[u].push_back({v, kind}); };
  for (const auto& [u, v] : control_edges(method)) add(u, v, EdgeKind::Control);
  if (mode == DependenceMode::AllDefs) {
    forward_data_pairs(method, [&](NodeId u, NodeId v) { add(u, v, EdgeKind::Data); });
  } else {
    for (const auto& [u, v] : data_edges(method, mode)) add(u, v, EdgeKind::Data);
  }
  for (auto& arcs : adjacency) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  }
  return DependencyGraph::from_sorted_adjacency(std::move(adjacency));
}

}  // namespace slicekit
