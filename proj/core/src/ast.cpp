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

#include <algorithm>
#include <array>
#include <utility>

#include "slicekit/ast.hpp"
#include "slicekit/error.hpp"

namespace slicekit {

namespace {

constexpr std::array<std::pair<StatementKind, std::string_view>, 9> kKindNames = {{
    {StatementKind::Prototype, "prototype"},
    {StatementKind::Declaration, "declaration"},
    {StatementKind::Assignment, "assignment"},
    {StatementKind::ExpressionStatement, "expression-statement"},
    {StatementKind::Invocation, "invocation"},
    {StatementKind::If, "if"},
    {StatementKind::While, "while"},
    {StatementKind::For, "for"},
    {StatementKind::Return, "return"},
}};

}  // namespace

std::string_view to_string(StatementKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<StatementKind> statement_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_control(StatementKind kind) {
  return kind == StatementKind::If || is_loop(kind);
}

bool is_loop(StatementKind kind) {
  return kind == StatementKind::While || kind == StatementKind::For;
}

const StatementNode& MethodAst::node(NodeId id) const {
  if (id >= statements.size()) throw UnknownNode(id);
  return statements[id];
}

bool MethodAst::knows_name(std::string_view name) const {
  std::string key(name);
  if (declared_variables.contains(key) || free_variables.contains(key) ||
      receiver_paths.contains(key))
    return true;
  return std::any_of(parameters.begin(), parameters.end(),
                     [&](const Parameter& p) { return p.name == name; });
}

std::vector<NodeId> MethodAst::descendants(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack(node(id).children.rbegin(), node(id).children.rend());
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    const auto& kids = statements[cur].children;
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace slicekit
