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

// Independent reference implementations used only by tests. Nothing here
// calls into builder.cpp or slicer.cpp; inputs come from parse_method.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slicekit/ast.hpp"
#include "slicekit/graph.hpp"

namespace slicekit::oracle {

using Pair = std::pair<NodeId, NodeId>;
using BoolMatrix = std::vector<std::vector<bool>>;

inline bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    if (b.contains(x)) return true;
  return false;
}

/// {(i, j) : i < j, writes(i) ∩ reads(j) ≠ ∅}
inline std::set<Pair> brute_force_data_edges(const MethodAst& m) {
  std::set<Pair> out;
  for (NodeId i = 0; i < m.size(); ++i)
    for (NodeId j = i + 1; j < m.size(); ++j)
      if (intersects(m.statements[i].writes, m.statements[j].reads)) out.emplace(i, j);
  return out;
}

/// Prototype -> everything, controller -> direct inner statements.
inline std::set<Pair> prescribed_control_edges(const MethodAst& m) {
  std::set<Pair> out;
  for (NodeId v = 1; v < m.size(); ++v) out.emplace(0, v);
  for (const auto& node : m.statements) {
    if (node.kind != StatementKind::If && node.kind != StatementKind::While &&
        node.kind != StatementKind::For)
      continue;
    for (NodeId c : node.children) out.emplace(node.id, c);
  }
  return out;
}

inline std::set<Edge> expected_graph_edges(const MethodAst& m) {
  std::set<Edge> out;
  for (auto [u, v] : prescribed_control_edges(m)) out.insert({u, v, EdgeKind::Control});
  for (auto [u, v] : brute_force_data_edges(m)) out.insert({u, v, EdgeKind::Data});
  return out;
}

inline BoolMatrix adjacency_matrix(std::size_t n, const std::vector<Edge>& edges) {
  BoolMatrix a(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) a[e.src][e.dst] = true;
  return a;
}

/// Transitive closure by boolean matrix squaring R <- R ∨ R·R until nothing
/// changes. R[s][v] is true iff a non-empty path s ⇝ v exists.
inline BoolMatrix transitive_closure(BoolMatrix r) {
  const std::size_t n = r.size();
  while (true) {
    BoolMatrix next = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!r[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) next[i][j] = true;
      }
    if (next == r) return r;
    r = std::move(next);
  }
}

/// Reversed adjacency built directly from an edge set.
inline std::vector<std::vector<NodeId>> reversed_adjacency(std::size_t n,
                                                           const std::set<Edge>& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : edges) adj[e.dst].push_back(e.src);
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

/// Every node lying on some directed path that starts at a sink, found by
/// enumerating the simple paths depth-first (on-path cycle guard).
inline std::set<NodeId> path_enumeration_slice(
    const std::vector<std::vector<NodeId>>& adj, const std::set<NodeId>& sinks,
    std::size_t* paths_enumerated = nullptr) {
  std::set<NodeId> nodes;
  std::vector<bool> on_path(adj.size(), false);
  std::size_t paths = 0;
  std::function<void(NodeId)> dfs = [&](NodeId v) {
    ++paths;
    nodes.insert(v);
    on_path[v] = true;
    for (NodeId w : adj[v])
      if (!on_path[w]) dfs(w);
    on_path[v] = false;
  };
  for (NodeId s : sinks) dfs(s);
  if (paths_enumerated) *paths_enumerated = paths;
  return nodes;
}

/// Alias closure by applying the two rules one statement at a time in a
/// random order until a full round adds nothing.
inline std::set<std::string> alias_fixpoint(const MethodAst& m, const std::string& stream,
                                            const std::set<std::string>& wrappers,
                                            std::mt19937& rng) {
  std::set<std::string> names = {stream};
  std::vector<NodeId> order(m.size());
  for (NodeId i = 0; i < m.size(); ++i) order[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId id : order) {
      const StatementNode& s = m.statements[id];
      if (!s.assigned_to) continue;
      bool wrap = s.constructed_wrapper_of && names.contains(*s.constructed_wrapper_of) &&
                  std::all_of(s.constructed_types.begin(), s.constructed_types.end(),
                              [&](const std::string& t) { return wrappers.contains(t); });
      bool copy = s.copy_of && names.contains(*s.copy_of);
      if ((wrap || copy) && names.insert(*s.assigned_to).second) changed = true;
    }
  }
  return names;
}

inline std::set<NodeId> sinks_for(const MethodAst& m, const std::set<std::string>& aliases,
                                  const std::set<std::string>& sink_methods) {
  std::set<NodeId> out;
  for (const auto& s : m.statements)
    if (s.kind == StatementKind::Invocation && s.receiver && aliases.contains(*s.receiver) &&
        s.called_method && sink_methods.contains(*s.called_method))
      out.insert(s.id);
  return out;
}

/// Slice of m computed entirely from the oracle pieces above.
inline std::set<NodeId> oracle_slice(const MethodAst& m, const std::string& stream,
                                     const std::set<std::string>& sink_methods,
                                     const std::set<std::string>& wrappers,
                                     std::set<NodeId>* sinks_out = nullptr) {
  std::mt19937 rng(7);
  auto aliases = alias_fixpoint(m, stream, wrappers, rng);
  auto sinks = sinks_for(m, aliases, sink_methods);
  if (sinks_out) *sinks_out = sinks;
  return path_enumeration_slice(reversed_adjacency(m.size(), expected_graph_edges(m)), sinks);
}

/// Statement count of a file written one statement per line: every line
/// that is not blank, a comment, or pure brace structure counts once
/// (the prototype line included).
inline std::size_t count_statement_lines(const std::string& source) {
  std::istringstream in(source);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    std::string t;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') t += c;
    if (t.empty() || t == "{" || t == "}" || t == "}else{" || t.rfind("//", 0) == 0) continue;
    ++count;
  }
  return count;
}

struct RandomGraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

/// n nodes, each ordered pair (u ≠ v) and kind present with probability
/// density.
inline RandomGraph random_graph(std::mt19937& rng, std::size_t max_nodes, double max_density) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomGraph g;
  g.node_count = size_dist(rng);
  double density = unit(rng) * max_density;
  for (NodeId u = 0; u < g.node_count; ++u)
    for (NodeId v = 0; v < g.node_count; ++v) {
      if (u == v) continue;
      if (unit(rng) < density) g.edges.push_back({u, v, EdgeKind::Control});
      if (unit(rng) < density) g.edges.push_back({u, v, EdgeKind::Data});
    }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

/// A generated method together with the reads/writes sets the generator
/// intended for each node (index = node id).
struct GeneratedProgram {
  std::string source;
  std::vector<std::set<std::string>> reads;
  std::vector<std::set<std::string>> writes;
  std::size_t statement_count = 0;  // excluding the prototype
};

/// Straight-line and loop programs over int parameters a..e and a Writer
/// `out`, at most max_statements statements, one per line.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint32_t seed) : rng_(seed) {}

  GeneratedProgram generate(std::size_t max_statements) {
    program_ = {};
    out_.str("");
    budget_ = std::uniform_int_distribution<std::size_t>(1, max_statements)(rng_);
    out_ << "void gen(int a, int b, int c, int d, int e, Writer out) {\n";
    record({}, {"a", "b", "c", "d", "e", "out"});
    block(1, 0);
    out_ << "}\n";
    program_.source = out_.str();
    return program_;
  }

 private:
  static constexpr const char* kVars[] = {"a", "b", "c", "d", "e"};

  std::string var() { return kVars[pick(5)]; }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  void record(std::set<std::string> reads, std::set<std::string> writes) {
    program_.reads.push_back(std::move(reads));
    program_.writes.push_back(std::move(writes));
  }

  // Operand: a variable or a literal; adds read variables to reads.
  std::string operand(std::set<std::string>& reads) {
    if (pick(4) == 0) return std::to_string(pick(10));
    std::string v = var();
    reads.insert(v);
    return v;
  }

  std::string expr(std::set<std::string>& reads) {
    std::string s = operand(reads);
    static constexpr const char* kOps[] = {" + ", " - ", " * "};
    for (std::size_t n = pick(3); n > 0; --n) s += kOps[pick(3)] + operand(reads);
    return s;
  }

  void indent(int depth) { out_ << std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  void block(int depth, std::size_t nesting) {
    std::size_t count = 1 + pick(4);
    for (std::size_t i = 0; i < count && budget_ > 0; ++i) statement(depth, nesting);
  }

  void statement(int depth, std::size_t nesting) {
    --budget_;
    ++program_.statement_count;
    std::set<std::string> reads, writes;
    indent(depth);
    std::size_t choice = pick(nesting < 2 && budget_ > 0 ? 9 : 6);
    switch (choice) {
      case 0:
      case 1: {
        std::string target = var();
        out_ << target << " = " << expr(reads) << ";\n";
        writes = {target};
        break;
      }
      case 2: {
        std::string target = var();
        out_ << target << " += " << expr(reads) << ";\n";
        reads.insert(target);
        writes = {target};
        break;
      }
      case 3: {
        std::string target = var();
        out_ << (pick(2) ? "++" + target : target + "--") << ";\n";
        reads = writes = {target};
        break;
      }
      case 4:
      case 5: {
        reads.insert("out");
        out_ << "out." << (pick(2) ? "print" : "write") << "(" << expr(reads) << ");\n";
        break;
      }
      case 6: {
        std::string lhs = operand(reads);
        out_ << "while (" << lhs << " < " << operand(reads) << ") {\n";
        record(std::move(reads), {});
        block(depth + 1, nesting + 1);
        indent(depth);
        out_ << "}\n";
        return;
      }
      case 7: {
        std::string lhs = operand(reads);
        out_ << "if (" << lhs << " != " << operand(reads) << ") {\n";
        record(std::move(reads), {});
        block(depth + 1, nesting + 1);
        if (budget_ > 0 && pick(2)) {
          indent(depth);
          out_ << "} else {\n";
          block(depth + 1, nesting + 1);
        }
        indent(depth);
        out_ << "}\n";
        return;
      }
      default: {
        std::string counter = var();
        std::set<std::string> header_reads = {counter};
        std::string bound = operand(header_reads);
        out_ << "for (" << counter << " = 0; " << counter << " < " << bound << "; " << counter
             << "++) {\n";
        record(std::move(header_reads), {counter});
        block(depth + 1, nesting + 1);
        indent(depth);
        out_ << "}\n";
        return;
      }
    }
    record(std::move(reads), std::move(writes));
  }

  std::mt19937 rng_;
  std::ostringstream out_;
  GeneratedProgram program_;
  std::size_t budget_ = 0;
};

}  // namespace slicekit::oracle
