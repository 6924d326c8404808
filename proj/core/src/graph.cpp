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

#include "slicekit/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slicekit {

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Control ? "control" : "data";
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view name) {
  if (name == "control") return EdgeKind::Control;
  if (name == "data") return EdgeKind::Data;
  return std::nullopt;
}

DependencyGraph::DependencyGraph(std::size_t node_count,
                                 std::span<const Edge> edges)
    : adjacency_(node_count) {
  for (const Edge& e : edges) {
    if (e.src >= node_count || e.dst >= node_count)
      throw std::invalid_argument("edge " + std::to_string(e.src) + " -> " +
                                  std::to_string(e.dst) + " references a missing node");
    if (e.src == e.dst)
      throw std::invalid_argument("self-edge on node " + std::to_string(e.src));
    adjacency_[e.src].push_back({e.dst, e.kind});
  }
  for (auto& arcs : adjacency_) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    edge_count_ += arcs.size();
  }
}

DependencyGraph::DependencyGraph(std::vector<std::vector<Arc>> adjacency)
    : adjacency_(std::move(adjacency)) {
  for (const auto& arcs : adjacency_) edge_count_ += arcs.size();
}

DependencyGraph DependencyGraph::from_sorted_adjacency(
    std::vector<std::vector<Arc>> adjacency) {
#ifndef NDEBUG
  for (std::size_t src = 0; src < adjacency.size(); ++src) {
    const auto& arcs = adjacency[src];
    assert(std::is_sorted(arcs.begin(), arcs.end()));
    assert(std::adjacent_find(arcs.begin(), arcs.end()) == arcs.end());
    for (const Arc& a : arcs) assert(a.dst < adjacency.size() && a.dst != src);
  }
#endif
  return DependencyGraph(std::move(adjacency));
}

std::vector<NodeId> DependencyGraph::node_ids() const {
  std::vector<NodeId> ids(adjacency_.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return ids;
}

bool DependencyGraph::has_edge(NodeId src, NodeId dst, EdgeKind kind) const {
  if (!contains(src)) return false;
  const auto& arcs = adjacency_[src];
  return std::binary_search(arcs.begin(), arcs.end(), Arc{dst, kind});
}

std::span<const Arc> DependencyGraph::fan_out(NodeId id) const {
  return adjacency_.at(id);
}

std::vector<Edge> DependencyGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId src = 0; src < adjacency_.size(); ++src)
    for (const Arc& a : adjacency_[src]) out.push_back({src, a.dst, a.kind});
  return out;
}

}  // namespace slicekit
