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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slicekit {

using NodeId = std::size_t;

/// Id of the method prototype, the entry node of every dependency graph.
inline constexpr NodeId kPrototypeId = 0;

enum class StatementKind {
  Prototype,
  Declaration,
  Assignment,
  ExpressionStatement,
  Invocation,
  If,
  While,
  For,
  Return,
};

/// Lower-case, hyphenated name used in every serialized form
/// ("expression-statement", "while", ...).
std::string_view to_string(StatementKind kind);
std::optional<StatementKind> statement_kind_from_string(std::string_view name);

/// True for if/while/for: statements that govern execution of their
/// children.
bool is_control(StatementKind kind);
bool is_loop(StatementKind kind);

struct SourcePosition {
  int line = 1;
  int column = 1;

  auto operator<=>(const SourcePosition&) const = default;
};

struct StatementNode {
  NodeId id = 0;
  StatementKind kind = StatementKind::ExpressionStatement;
  /// Verbatim source. Control statements keep only their header
  /// (`while (i <= 10)`), the prototype its signature.
  std::string text;
  std::set<std::string> reads;
  std::set<std::string> writes;
  /// Direct inner statements, in textual order. For `if`, the first
  /// then_count entries form the then-branch and the rest the else-branch.
  std::vector<NodeId> children;
  std::size_t then_count = 0;
  bool has_else = false;
  std::optional<NodeId> parent;
  SourcePosition position;

  // Invocation statements only.
  std::optional<std::string> receiver;
  std::optional<std::string> called_method;

  /// Set for `T w = new T(v);` and `w = new T(v);`, also through nested
  /// constructions `new A(new B(v))`: v is the innermost first argument.
  std::optional<std::string> constructed_wrapper_of;
  /// Constructed type names from outermost to innermost.
  std::vector<std::string> constructed_types;
  /// Set for plain copies `w = v;` and `T w = v;`.
  std::optional<std::string> copy_of;
  /// Target of a declaration initializer or plain `=` assignment.
  std::optional<std::string> assigned_to;

  bool is_control() const { return slicekit::is_control(kind); }
};

struct Parameter {
  std::string name;
  std::string type;

  bool operator==(const Parameter&) const = default;
};

struct MethodAst {
  std::string name;
  std::string return_type;
  std::vector<Parameter> parameters;
  /// Indexed by NodeId; statements[0] is the prototype.
  std::vector<StatementNode> statements;
  std::string source_text;

  /// Locals declared anywhere in the body, including for-loop headers.
  std::set<std::string> declared_variables;
  /// Identifiers used without a visible declaration (fields, implicit
  /// globals). They still take part in data dependences by name.
  std::set<std::string> free_variables;
  /// Dotted receiver paths of invocation statements, such as `System.err`.
  std::set<std::string> receiver_paths;

  const StatementNode& node(NodeId id) const;
  std::size_t size() const { return statements.size(); }

  /// Whether name denotes a parameter, local, free variable or receiver
  /// path occurring in this method.
  bool knows_name(std::string_view name) const;

  /// All transitive inner statements of id, in id order.
  std::vector<NodeId> descendants(NodeId id) const;
};

}  // namespace slicekit
