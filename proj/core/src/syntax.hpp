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

// Expression-level syntax shared by parse_method and extract_reads_writes.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/ast.hpp"
#include "slicekit/token.hpp"

namespace slicekit::detail {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind {
    Name,
    Literal,
    Unary,    // prefix operator, operands[0]
    Postfix,  // postfix ++/--, operands[0]
    Binary,   // operands[0] op operands[1]
    Assign,   // operands[0] is always a Name
    Call,     // object (nullable) . text ( operands... )
    Member,   // object . text
    New,      // new text ( operands... )
  };

  Kind kind = Kind::Literal;
  std::string text;
  ExprPtr object;
  std::vector<ExprPtr> operands;
};

/// Undeclared capitalised heads of member chains (`System.err`,
/// `Integer.parseInt`) name classes, not variables.
bool is_static_reference(const Expr& e);

struct Effects {
  std::set<std::string> reads;
  std::set<std::string> writes;
};

void collect_effects(const Expr& e, Effects& out);

/// Dotted identifier path at the root of a call chain: `out` for
/// `out.append(a).append(b)`, `System.err` for `System.err.println(x)`.
std::optional<std::string> receiver_path(const Expr& e);

struct Declarator {
  std::string type;
  const Token* name = nullptr;
  ExprPtr init;
};

/// A declaration, assignment, invocation or other expression statement.
struct SimpleStatement {
  StatementKind kind = StatementKind::ExpressionStatement;
  std::optional<Declarator> declaration;
  ExprPtr expr;
};

struct ForHeader {
  std::vector<Declarator> declarations;
  std::vector<ExprPtr> init;
  ExprPtr condition;
  std::vector<ExprPtr> update;
};

struct Prototype {
  std::string return_type;
  std::string name;
  struct Param {
    std::string type;
    const Token* name = nullptr;
  };
  std::vector<Param> params;
};

/// Facts derived from a simple statement that the node records.
struct SimpleFacts {
  Effects effects;
  std::optional<std::string> receiver;
  std::optional<std::string> called_method;
  std::optional<std::string> constructed_wrapper_of;
  std::vector<std::string> constructed_types;
  std::optional<std::string> copy_of;
  /// Variable defined by a declaration initializer or a plain `=`.
  std::optional<std::string> assigned_to;
};

SimpleFacts analyze(const SimpleStatement& stmt);
Effects analyze(const ForHeader& header);

/// Recursive-descent parser over a token stream. Holds no AST of its own;
/// callers drive it statement by statement.
class SyntaxParser {
 public:
  explicit SyntaxParser(const std::vector<Token>& tokens);

  const Token& peek(std::size_t ahead = 0) const;
  std::size_t position() const { return index_; }
  const Token& token_at(std::size_t index) const { return tokens_[index]; }
  bool at(std::string_view text) const;
  bool at_end() const;
  const Token& next();
  const Token& expect(std::string_view text);
  const Token& expect_identifier();
  void expect_end();
  [[noreturn]] void fail(std::vector<std::string> expected) const;

  Prototype parse_prototype();
  bool at_declaration() const;
  /// Parses a statement that is not a block or control statement, up to and
  /// including its ';'.
  SimpleStatement parse_simple_statement();
  /// `if (cond)` / `while (cond)`; returns the condition.
  ExprPtr parse_condition_header(std::string_view keyword);
  ForHeader parse_for_header();
  /// `return expr? ;`
  ExprPtr parse_return();

  ExprPtr parse_expression();

 private:
  std::string parse_type();
  Declarator parse_declarator();
  ExprPtr parse_assignment();
  ExprPtr parse_binary(int min_precedence);
  ExprPtr parse_unary();
  ExprPtr parse_postfix();
  ExprPtr parse_primary();
  std::vector<ExprPtr> parse_arguments();
  void require_name(const Expr& e, const Token& op) const;

  const std::vector<Token>& tokens_;
  std::size_t index_ = 0;
};

std::string describe(const Token& tok);

}  // namespace slicekit::detail
