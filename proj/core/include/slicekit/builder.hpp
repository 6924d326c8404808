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

#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "slicekit/ast.hpp"
#include "slicekit/graph.hpp"

namespace slicekit {

/// How data dependences are computed.
enum class DependenceMode {
  /// Single forward pass: every writer links to every later reader of the
  /// variable, with no kill analysis and no loop back-edges.
  AllDefs,
  /// Forward structured reaching definitions: a write kills earlier writes
  /// of the same variable on the same path; branches merge. Still no loop
  /// back-edges.
  ReachingDefs,
  /// AllDefs edges plus back-edges from later writers to earlier readers
  /// inside the same loop (loop header included).
  LoopAware,
};

std::string_view to_string(DependenceMode mode);
std::optional<DependenceMode> dependence_mode_from_string(std::string_view name);

/// Builds the statement-level dependency graph of a method:
///  - control edges from the prototype to every other statement,
///  - control edges from each if/while/for to its direct inner statements,
///  - data edges writer -> reader as selected by mode.
/// Edges point from the provider to the dependent statement.
DependencyGraph build_graph(const MethodAst& method,
                            DependenceMode mode = DependenceMode::AllDefs);

using NodePair = std::pair<NodeId, NodeId>;

/// Writer -> later reader pairs of the default mode: (i, j) for every
/// i < j with writes(i) and reads(j) sharing a variable.
std::set<NodePair> data_edges(const MethodAst& method);

std::set<NodePair> data_edges(const MethodAst& method, DependenceMode mode);

std::set<NodePair> control_edges(const MethodAst& method);

}  // namespace slicekit
