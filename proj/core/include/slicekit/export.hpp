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

#include <set>
#include <string>
#include <string_view>

#include "slicekit/ast.hpp"
#include "slicekit/graph.hpp"

namespace slicekit {

/// Graphviz rendering. Nodes are emitted in id order and labelled with
/// their statement text; control edges are solid, data edges dashed.
/// Output is deterministic byte for byte.
std::string to_dot(const DependencyGraph& graph, const MethodAst& method);

/// Same as above, with the nodes in highlighted filled and the nodes in
/// emphasized (a subset, typically the slice sinks) drawn bold.
std::string to_dot(const DependencyGraph& graph, const MethodAst& method,
                   const std::set<NodeId>& highlighted,
                   const std::set<NodeId>& emphasized = {});

/// Canonical JSON (sorted keys, two-space indent, id-ordered arrays):
///   {"edges": [{"dst", "kind", "src"}...], "nodes": [{"id", "kind", "line", "text"}...]}
/// The schema is documented in docs/graph-schema.md.
std::string to_json(const DependencyGraph& graph, const MethodAst& method);

/// Reads the edge structure back from to_json output. Throws SchemaError.
DependencyGraph graph_from_json(std::string_view json);

}  // namespace slicekit
