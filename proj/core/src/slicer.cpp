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

#include "slicekit/slicer.hpp"

#include <deque>
#include <iterator>

#include "slicekit/error.hpp"

namespace slicekit {

const std::set<std::string>& default_sink_methods() {
  static const std::set<std::string> sinks = {"append", "print", "println", "write"};
  return sinks;
}

const std::set<std::string>& default_wrapper_types() {
  static const std::set<std::string> wrappers = {
      "BufferedStream", "BufferedWriter", "ObjectOutputStream", "PrintWriter", "Writer",
  };
  return wrappers;
}

DependencyGraph transpose(const DependencyGraph& graph) {
  std::vector<std::vector<Arc>> reversed(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u)
    for (const Arc& arc : graph.fan_out(u)) reversed[arc.dst].push_back({u, arc.kind});
  return DependencyGraph::from_sorted_adjacency(std::move(reversed));
}

namespace {

// Breadth-first search from start, skipping nodes already marked in seen.
// Newly discovered nodes are appended to nodes in discovery order.
void breadth_first(const DependencyGraph& graph, NodeId start, std::vector<bool>& seen,
                   std::vector<NodeId>& nodes) {
  if (seen[start]) return;
  std::deque<NodeId> queue;
  queue.push_back(start);
  nodes.push_back(start);
  seen[start] = true;
  while (!queue.empty()) {
    NodeId current = queue.front();
    queue.pop_front();
    for (const Arc& arc : graph.fan_out(current)) {
      if (seen[arc.dst]) continue;
      queue.push_back(arc.dst);
      nodes.push_back(arc.dst);
      seen[arc.dst] = true;
    }
  }
}

}  // namespace

std::vector<NodeId> reachable(const DependencyGraph& graph, NodeId start) {
  if (!graph.contains(start)) throw UnknownNode(start);
  std::vector<NodeId> nodes;
  std::vector<bool> seen(graph.node_count(), false);
  breadth_first(graph, start, seen, nodes);
  return nodes;
}

OutputAliases resolve_output_aliases(const MethodAst& method,
                                     std::string_view stream_variable,
                                     const std::set<std::string>& wrapper_types) {
  if (!method.knows_name(stream_variable))
    throw UnknownVariable(std::string(stream_variable));

  OutputAliases aliases;
  aliases.names.insert(std::string(stream_variable));
  bool changed = true;
  while (changed) {
    changed = false;
    ++aliases.passes;
    for (const StatementNode& node : method.statements) {
      if (!node.assigned_to || aliases.names.contains(*node.assigned_to)) continue;
      bool wraps = false;
      if (node.constructed_wrapper_of &&
          aliases.names.contains(*node.constructed_wrapper_of)) {
        wraps = true;
        for (const std::string& type : node.constructed_types)
          wraps = wraps && wrapper_types.contains(type);
      }
      bool copies = node.copy_of && aliases.names.contains(*node.copy_of);
      if (wraps || copies) {
        aliases.names.insert(*node.assigned_to);
        changed = true;
      }
    }
  }
  return aliases;
}

void validate_criterion(const MethodAst& method, const SliceCriterion& criterion) {
  if (criterion.sink_methods.empty())
    throw InvalidCriterion("the sink-method set must not be empty");
  if (criterion.stream_variable.empty() || !method.knows_name(criterion.stream_variable))
    throw UnknownVariable(criterion.stream_variable);
}

std::set<NodeId> find_sinks(const MethodAst& method, const SliceCriterion& criterion,
                            const std::set<std::string>& wrapper_types) {
  OutputAliases aliases =
      resolve_output_aliases(method, criterion.stream_variable, wrapper_types);
  std::set<NodeId> sinks;
  for (const StatementNode& node : method.statements) {
    if (node.kind != StatementKind::Invocation || !node.receiver || !node.called_method)
      continue;
    if (aliases.contains(*node.receiver) &&
        criterion.sink_methods.contains(*node.called_method))
      sinks.insert(node.id);
  }
  return sinks;
}

Slice compute_slice(const MethodAst& method, const SliceCriterion& criterion,
                    const SliceOptions& options) {
  validate_criterion(method, criterion);
  return compute_slice(method, build_graph(method, options.mode), criterion, options);
}

Slice compute_slice(const MethodAst& method, const DependencyGraph& graph,
                    const SliceCriterion& criterion, const SliceOptions& options) {
  validate_criterion(method, criterion);
  Slice slice;
  slice.criterion = criterion;
  slice.sink_nodes = find_sinks(method, criterion, options.wrapper_types);
  if (slice.sink_nodes.empty()) {
    std::string methods;
    for (const std::string& m : criterion.sink_methods)
      methods += (methods.empty() ? "" : ", ") + m;
    slice.warnings.push_back("no sink invocation (" + methods + ") on output stream '" +
                             criterion.stream_variable + "'; the slice is empty");
    return slice;
  }
  DependencyGraph reversed = transpose(graph);
  // Union of reachable(reversed, sink). Whatever an earlier sink reached
  // is already closed, so the marks are shared across sinks.
  std::vector<bool> seen(reversed.node_count(), false);
  std::vector<NodeId> reached;
  for (NodeId sink : slice.sink_nodes) breadth_first(reversed, sink, seen, reached);
  slice.nodes.insert(reached.begin(), reached.end());
  return slice;
}

}  // namespace slicekit
