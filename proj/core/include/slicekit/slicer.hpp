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

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/ast.hpp"
#include "slicekit/builder.hpp"
#include "slicekit/graph.hpp"

namespace slicekit {

/// {print, println, write, append}
const std::set<std::string>& default_sink_methods();

/// Class names whose single-argument construction wraps an existing
/// stream: PrintWriter, BufferedWriter, BufferedStream, ObjectOutputStream,
/// Writer.
const std::set<std::string>& default_wrapper_types();

struct SliceCriterion {
  std::string stream_variable;
  std::set<std::string> sink_methods = default_sink_methods();

  bool operator==(const SliceCriterion&) const = default;
};

struct SliceOptions {
  DependenceMode mode = DependenceMode::AllDefs;
  std::set<std::string> wrapper_types = default_wrapper_types();
};

struct Slice {
  SliceCriterion criterion;
  std::set<NodeId> sink_nodes;
  /// Sinks plus everything they reach in the transpose graph.
  std::set<NodeId> nodes;
  std::vector<std::string> warnings;

  bool empty() const { return nodes.empty(); }
  bool contains(NodeId id) const { return nodes.contains(id); }
};

/// Reverses every edge, keeping kinds. Runs in O(|V| + |E|): the fan-outs
/// of the result come out already sorted because sources are visited in
/// ascending order.
DependencyGraph transpose(const DependencyGraph& graph);

/// Breadth-first search from start. The start node is always part of the
/// result; fan-outs are visited in ascending (dst, kind) order. Returns the
/// nodes in discovery order, without duplicates.
///
/// Throws UnknownNode if start is not a node of graph.
std::vector<NodeId> reachable(const DependencyGraph& graph, NodeId start);

struct OutputAliases {
  std::set<std::string> names;
  /// Sweeps over the statements until nothing changed, including the final
  /// confirming sweep.
  std::size_t passes = 0;

  bool contains(std::string_view name) const {
    return names.contains(std::string(name));
  }
};

/// Smallest name set containing stream_variable and closed under
///  - `T w = new T(v);` (or nested wrappers) with v in the set and every
///    constructed type in wrapper_types,
///  - `w = v;` plain copies with v in the set.
///
/// Throws UnknownVariable when stream_variable does not occur in method.
OutputAliases resolve_output_aliases(
    const MethodAst& method, std::string_view stream_variable,
    const std::set<std::string>& wrapper_types = default_wrapper_types());

/// Throws UnknownVariable or InvalidCriterion.
void validate_criterion(const MethodAst& method,
                        const SliceCriterion& criterion);

/// Invocation statements whose receiver is an output alias and whose
/// method name is a sink. Any argument count is accepted.
std::set<NodeId> find_sinks(
    const MethodAst& method, const SliceCriterion& criterion,
    const std::set<std::string>& wrapper_types = default_wrapper_types());

/// Builds the dependency graph, transposes it and unions the breadth-first
/// reachable sets of every sink. An empty sink set yields an empty slice
/// with a warning.
Slice compute_slice(const MethodAst& method, const SliceCriterion& criterion,
                    const SliceOptions& options = {});

/// Variant over a prebuilt graph of method.
Slice compute_slice(const MethodAst& method, const DependencyGraph& graph,
                    const SliceCriterion& criterion,
                    const SliceOptions& options = {});

/// Pretty-prints the sliced statements in id order as a mini-language
/// method: one statement per line, two-space indentation, control
/// statements re-opened with braces around their retained children.
/// Returns an empty string for an empty slice.
std::string render_slice(const Slice& slice, const MethodAst& method);

/// Canonical JSON: {"criterion": {"sinkMethods", "streamVariable"},
/// "nodes", "sinkNodes", "warnings"}. See docs/slice-schema.md.
std::string slice_to_json(const Slice& slice);

}  // namespace slicekit
