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

#include "syntax.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "slicekit/error.hpp"

namespace slicekit::detail {

namespace {

constexpr std::array<std::string_view, 8> kPrimitiveTypes = {
    "boolean", "byte", "char", "double", "float", "int", "long", "short",
};

bool is_primitive_type(const Token& tok) {
  if (tok.kind != TokenKind::Keyword) return false;
  for (std::string_view t : kPrimitiveTypes)
    if (tok.text == t) return true;
  return false;
}

bool is_assignment_operator(const Token& tok) {
  if (tok.kind != TokenKind::Operator) return false;
  return tok.text == "=" || tok.text == "+=" || tok.text == "-=" ||
         tok.text == "*=" || tok.text == "/=" || tok.text == "%=";
}

int binary_precedence(const Token& tok) {
  if (tok.kind != TokenKind::Operator) return -1;
  const std::string& op = tok.text;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
  if (op == "+" || op == "-") return 5;
  if (op == "*" || op == "/" || op == "%") return 6;
  return -1;
}

bool is_increment(std::string_view op) { return op == "++" || op == "--"; }

ExprPtr make(Expr::Kind kind, std::string text) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->text = std::move(text);
  return e;
}

void collect_object(const Expr& object, Effects& out) {
  if (!is_static_reference(object)) collect_effects(object, out);
}

void unwrap_construction(const Expr& init, SimpleFacts& facts) {
  if (init.kind == Expr::Kind::Name) {
    facts.copy_of = init.text;
    return;
  }
  const Expr* cur = &init;
  std::vector<std::string> types;
  while (cur->kind == Expr::Kind::New) {
    types.push_back(cur->text);
    if (cur->operands.empty()) return;
    cur = cur->operands.front().get();
  }
  if (!types.empty() && cur->kind == Expr::Kind::Name) {
    facts.constructed_wrapper_of = cur->text;
    facts.constructed_types = std::move(types);
  }
}

}  // namespace

bool is_static_reference(const Expr& e) {
  return e.kind == Expr::Kind::Name && !e.text.empty() &&
         std::isupper(static_cast<unsigned char>(e.text.front()));
}

void collect_effects(const Expr& e, Effects& out) {
  switch (e.kind) {
    case Expr::Kind::Name:
      out.reads.insert(e.text);
      break;
    case Expr::Kind::Literal:
      break;
    case Expr::Kind::Unary:
    case Expr::Kind::Postfix:
      if (is_increment(e.text)) {
        out.reads.insert(e.operands[0]->text);
        out.writes.insert(e.operands[0]->text);
      } else {
        collect_effects(*e.operands[0], out);
      }
      break;
    case Expr::Kind::Binary:
      collect_effects(*e.operands[0], out);
      collect_effects(*e.operands[1], out);
      break;
    case Expr::Kind::Assign:
      out.writes.insert(e.operands[0]->text);
      if (e.text != "=") out.reads.insert(e.operands[0]->text);
      collect_effects(*e.operands[1], out);
      break;
    case Expr::Kind::Call:
      if (e.object) collect_object(*e.object, out);
      for (const auto& arg : e.operands) collect_effects(*arg, out);
      break;
    case Expr::Kind::Member:
      collect_object(*e.object, out);
      break;
    case Expr::Kind::New:
      for (const auto& arg : e.operands) collect_effects(*arg, out);
      break;
  }
}

std::optional<std::string> receiver_path(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::Member: {
      auto base = receiver_path(*e.object);
      if (!base) return std::nullopt;
      return *base + "." + e.text;
    }
    case Expr::Kind::Call:
      if (!e.object) return std::nullopt;
      return receiver_path(*e.object);
    default:
      return std::nullopt;
  }
}

SimpleFacts analyze(const SimpleStatement& stmt) {
  SimpleFacts facts;
  if (stmt.declaration) {
    const Declarator& d = *stmt.declaration;
    if (d.init) {
      facts.effects.writes.insert(d.name->text);
      facts.assigned_to = d.name->text;
      collect_effects(*d.init, facts.effects);
      unwrap_construction(*d.init, facts);
    }
    return facts;
  }
  const Expr& e = *stmt.expr;
  collect_effects(e, facts.effects);
  if (e.kind == Expr::Kind::Assign && e.text == "=") {
    facts.assigned_to = e.operands[0]->text;
    unwrap_construction(*e.operands[1], facts);
  }
  if (e.kind == Expr::Kind::Call) {
    facts.called_method = e.text;
    if (e.object) facts.receiver = receiver_path(*e.object);
  }
  return facts;
}

Effects analyze(const ForHeader& header) {
  Effects effects;
  for (const Declarator& d : header.declarations) {
    if (!d.init) continue;
    effects.writes.insert(d.name->text);
    collect_effects(*d.init, effects);
  }
  for (const auto& e : header.init) collect_effects(*e, effects);
  if (header.condition) collect_effects(*header.condition, effects);
  for (const auto& e : header.update) collect_effects(*e, effects);
  return effects;
}

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::End) return "end of input";
  return "'" + tok.text + "'";
}

SyntaxParser::SyntaxParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

const Token& SyntaxParser::peek(std::size_t ahead) const {
  std::size_t i = index_ + ahead;
  return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

bool SyntaxParser::at(std::string_view text) const {
  const Token& tok = peek();
  return tok.kind != TokenKind::End && tok.kind != TokenKind::Literal &&
         tok.text == text;
}

bool SyntaxParser::at_end() const { return peek().kind == TokenKind::End; }

const Token& SyntaxParser::next() {
  const Token& tok = peek();
  if (index_ < tokens_.size() - 1) ++index_;
  return tok;
}

const Token& SyntaxParser::expect(std::string_view text) {
  if (!at(text)) fail({"'" + std::string(text) + "'"});
  return next();
}

const Token& SyntaxParser::expect_identifier() {
  if (peek().kind != TokenKind::Identifier) fail({"identifier"});
  return next();
}

void SyntaxParser::expect_end() {
  if (!at_end()) fail({"end of input"});
}

void SyntaxParser::fail(std::vector<std::string> expected) const {
  const Token& tok = peek();
  throw ParseError(tok.line, tok.column, std::move(expected), describe(tok));
}

std::string SyntaxParser::parse_type() {
  if (at("final")) next();
  const Token& tok = peek();
  if (is_primitive_type(tok) || tok.kind == TokenKind::Identifier ||
      (tok.kind == TokenKind::Keyword && tok.text == "void")) {
    next();
    return tok.text;
  }
  fail({"type"});
}

Prototype SyntaxParser::parse_prototype() {
  Prototype proto;
  proto.return_type = parse_type();
  proto.name = expect_identifier().text;
  expect("(");
  if (!at(")")) {
    while (true) {
      Prototype::Param param;
      param.type = parse_type();
      param.name = &expect_identifier();
      proto.params.push_back(param);
      if (!at(",")) break;
      next();
    }
  }
  expect(")");
  return proto;
}

bool SyntaxParser::at_declaration() const {
  const Token& first = peek();
  if (first.kind == TokenKind::Keyword && first.text == "final") return true;
  if (is_primitive_type(first)) return true;
  return first.kind == TokenKind::Identifier &&
         peek(1).kind == TokenKind::Identifier;
}

Declarator SyntaxParser::parse_declarator() {
  Declarator d;
  d.type = parse_type();
  d.name = &expect_identifier();
  if (at("=")) {
    next();
    d.init = parse_expression();
  }
  return d;
}

SimpleStatement SyntaxParser::parse_simple_statement() {
  SimpleStatement stmt;
  if (at_declaration()) {
    stmt.kind = StatementKind::Declaration;
    stmt.declaration = parse_declarator();
    expect(";");
    return stmt;
  }
  const Token& first = peek();
  stmt.expr = parse_expression();
  switch (stmt.expr->kind) {
    case Expr::Kind::Assign:
      stmt.kind = StatementKind::Assignment;
      break;
    case Expr::Kind::Call:
      stmt.kind = StatementKind::Invocation;
      break;
    case Expr::Kind::Unary:
    case Expr::Kind::Postfix:
      if (is_increment(stmt.expr->text)) {
        stmt.kind = StatementKind::ExpressionStatement;
        break;
      }
      [[fallthrough]];
    default:
      if (stmt.expr->kind == Expr::Kind::New) {
        stmt.kind = StatementKind::ExpressionStatement;
        break;
      }
      throw ParseError(first.line, first.column,
                       {"statement (assignment, increment, call or new)"},
                       "expression " + describe(first));
  }
  expect(";");
  return stmt;
}

ExprPtr SyntaxParser::parse_condition_header(std::string_view keyword) {
  expect(keyword);
  expect("(");
  ExprPtr cond = parse_expression();
  expect(")");
  return cond;
}

ForHeader SyntaxParser::parse_for_header() {
  ForHeader header;
  expect("for");
  expect("(");
  if (!at(";")) {
    if (at_declaration()) {
      header.declarations.push_back(parse_declarator());
      while (at(",")) {
        next();
        Declarator d;
        d.type = header.declarations.front().type;
        d.name = &expect_identifier();
        if (at("=")) {
          next();
          d.init = parse_expression();
        }
        header.declarations.push_back(std::move(d));
      }
    } else {
      header.init.push_back(parse_expression());
      while (at(",")) {
        next();
        header.init.push_back(parse_expression());
      }
    }
  }
  expect(";");
  if (!at(";")) header.condition = parse_expression();
  expect(";");
  if (!at(")")) {
    header.update.push_back(parse_expression());
    while (at(",")) {
      next();
      header.update.push_back(parse_expression());
    }
  }
  expect(")");
  return header;
}

ExprPtr SyntaxParser::parse_return() {
  expect("return");
  ExprPtr value;
  if (!at(";")) value = parse_expression();
  expect(";");
  return value;
}

ExprPtr SyntaxParser::parse_expression() { return parse_assignment(); }

void SyntaxParser::require_name(const Expr& e, const Token& op) const {
  if (e.kind != Expr::Kind::Name)
    throw ParseError(op.line, op.column, {"variable operand of '" + op.text + "'"},
                     "complex expression");
}

ExprPtr SyntaxParser::parse_assignment() {
  ExprPtr lhs = parse_binary(1);
  if (!is_assignment_operator(peek())) return lhs;
  const Token& op = next();
  require_name(*lhs, op);
  auto e = make(Expr::Kind::Assign, op.text);
  e->operands.push_back(std::move(lhs));
  e->operands.push_back(parse_assignment());
  return e;
}

ExprPtr SyntaxParser::parse_binary(int min_precedence) {
  ExprPtr lhs = parse_unary();
  while (true) {
    int prec = binary_precedence(peek());
    if (prec < min_precedence) return lhs;
    const Token& op = next();
    ExprPtr rhs = parse_binary(prec + 1);
    auto e = make(Expr::Kind::Binary, op.text);
    e->operands.push_back(std::move(lhs));
    e->operands.push_back(std::move(rhs));
    lhs = std::move(e);
  }
}

ExprPtr SyntaxParser::parse_unary() {
  const Token& tok = peek();
  if (tok.kind == TokenKind::Operator &&
      (tok.text == "!" || tok.text == "-" || tok.text == "+" ||
       is_increment(tok.text))) {
    next();
    ExprPtr operand = parse_unary();
    if (is_increment(tok.text)) require_name(*operand, tok);
    auto e = make(Expr::Kind::Unary, tok.text);
    e->operands.push_back(std::move(operand));
    return e;
  }
  return parse_postfix();
}

ExprPtr SyntaxParser::parse_postfix() {
  ExprPtr e = parse_primary();
  while (true) {
    if (at(".")) {
      next();
      const Token& member = expect_identifier();
      if (at("(")) {
        auto call = make(Expr::Kind::Call, member.text);
        call->object = std::move(e);
        call->operands = parse_arguments();
        e = std::move(call);
      } else {
        auto field = make(Expr::Kind::Member, member.text);
        field->object = std::move(e);
        e = std::move(field);
      }
    } else if (peek().kind == TokenKind::Operator && is_increment(peek().text)) {
      const Token& op = next();
      require_name(*e, op);
      auto post = make(Expr::Kind::Postfix, op.text);
      post->operands.push_back(std::move(e));
      e = std::move(post);
    } else {
      return e;
    }
  }
}

ExprPtr SyntaxParser::parse_primary() {
  const Token& tok = peek();
  switch (tok.kind) {
    case TokenKind::Literal:
      next();
      return make(Expr::Kind::Literal, tok.text);
    case TokenKind::Identifier:
      next();
      if (at("(")) {
        auto call = make(Expr::Kind::Call, tok.text);
        call->operands = parse_arguments();
        return call;
      }
      return make(Expr::Kind::Name, tok.text);
    case TokenKind::Keyword:
      if (tok.text == "new") {
        next();
        const Token& type = expect_identifier();
        auto e = make(Expr::Kind::New, type.text);
        e->operands = parse_arguments();
        return e;
      }
      break;
    case TokenKind::Punctuation:
      if (tok.text == "(") {
        next();
        ExprPtr inner = parse_expression();
        expect(")");
        return inner;
      }
      break;
    default:
      break;
  }
  fail({"expression"});
}

std::vector<ExprPtr> SyntaxParser::parse_arguments() {
  expect("(");
  std::vector<ExprPtr> args;
  if (!at(")")) {
    while (true) {
      args.push_back(parse_expression());
      if (!at(",")) break;
      next();
    }
  }
  expect(")");
  return args;
}

}  // namespace slicekit::detail
