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

#include <compare>
#include <cstddef>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "slicekit/ast.hpp"

namespace slicekit {

enum class EdgeKind {
  Control,
  Data,
};

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(std::string_view name);

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  EdgeKind kind = EdgeKind::Control;

  auto operator<=>(const Edge&) const = default;
};

/// One fan-out entry of a node: the target and the dependence kind.
struct Arc {
  NodeId dst = 0;
  EdgeKind kind = EdgeKind::Control;

  auto operator<=>(const Arc&) const = default;
};

/// Directed, edge-labelled graph over the dense node ids 0..n-1.
///
/// Stored as adjacency lists sorted by (dst, kind) with no duplicate arcs
/// and no self-loops. The same (src, dst) pair may carry one arc of each
/// kind. Immutable once built.
class DependencyGraph {
 public:
  DependencyGraph() = default;

  /// Builds a graph from an arbitrary edge list. Duplicates are merged.
  /// Throws std::invalid_argument on self-edges or out-of-range ids.
  DependencyGraph(std::size_t node_count, std::span<const Edge> edges);

  /// Takes adjacency lists that already satisfy the class invariants
  /// (sorted, unique, in range, loop-free). Checked in debug builds only.
  static DependencyGraph from_sorted_adjacency(
      std::vector<std::vector<Arc>> adjacency);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::vector<NodeId> node_ids() const;

  bool contains(NodeId id) const { return id < adjacency_.size(); }
  bool has_edge(NodeId src, NodeId dst, EdgeKind kind) const;
  bool has_edge(const Edge& e) const { return has_edge(e.src, e.dst, e.kind); }

  /// Fan-out of id in ascending (dst, kind) order.
  std::span<const Arc> fan_out(NodeId id) const;

  /// All edges in ascending (src, dst, kind) order.
  std::vector<Edge> edges() const;

  bool operator==(const DependencyGraph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  explicit DependencyGraph(std::vector<std::vector<Arc>> adjacency);

  std::vector<std::vector<Arc>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace slicekit
