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

#include "slicekit/parser.hpp"

#include <utility>

#include "slicekit/error.hpp"
#include "slicekit/token.hpp"
#include "syntax.hpp"

namespace slicekit {

namespace {

using detail::SyntaxParser;

class MethodParser {
 public:
  explicit MethodParser(std::string_view source)
      : source_(source), tokens_(tokenize(source)), parser_(tokens_) {}

  MethodAst run() {
    method_.source_text = std::string(source_);

    std::size_t first = parser_.position();
    detail::Prototype proto = parser_.parse_prototype();
    method_.name = proto.name;
    method_.return_type = proto.return_type;

    scopes_.emplace_back();
    StatementNode& entry = add_node(StatementKind::Prototype, first, std::nullopt);
    for (const auto& param : proto.params) {
      declare(*param.name, /*local=*/false);
      method_.parameters.push_back({param.name->text, param.type});
      entry.writes.insert(param.name->text);
    }

    parser_.expect("{");
    std::vector<NodeId> top = parse_block_contents(kPrototypeId);
    parser_.expect("}");
    parser_.expect_end();

    StatementNode& proto_node = method_.statements[kPrototypeId];
    proto_node.then_count = top.size();
    proto_node.children = std::move(top);
    return std::move(method_);
  }

 private:
  StatementNode& add_node(StatementKind kind, std::size_t first_token,
                          std::optional<NodeId> parent) {
    std::size_t last_token = parser_.position() - 1;
    const Token& first = tokens_[first_token];
    const Token& last = tokens_[last_token];
    StatementNode node;
    node.id = method_.statements.size();
    node.kind = kind;
    node.text = std::string(
        source_.substr(first.offset, last.end_offset() - first.offset));
    node.position = {first.line, first.column};
    node.parent = parent;
    method_.statements.push_back(std::move(node));
    return method_.statements.back();
  }

  void record_effects(NodeId id, detail::Effects effects) {
    StatementNode& node = method_.statements[id];
    for (const auto& name : effects.reads)
      if (!visible(name)) method_.free_variables.insert(name);
    for (const auto& name : effects.writes)
      if (!visible(name)) method_.free_variables.insert(name);
    node.reads = std::move(effects.reads);
    node.writes = std::move(effects.writes);
  }

  bool visible(const std::string& name) const {
    for (const auto& scope : scopes_)
      if (scope.contains(name)) return true;
    return false;
  }

  void declare(const Token& name, bool local = true) {
    if (!scopes_.back().insert(name.text).second)
      throw DuplicateDeclaration(name.text, name.line, name.column);
    if (local) method_.declared_variables.insert(name.text);
  }

  std::vector<NodeId> parse_block_contents(NodeId parent) {
    std::vector<NodeId> ids;
    while (!parser_.at("}")) {
      if (parser_.at_end()) parser_.fail({"'}'"});
      for (NodeId id : parse_statement(parent)) ids.push_back(id);
    }
    return ids;
  }

  // Returns the ids of the statements directly produced, more than one
  // only when a block is flattened.
  std::vector<NodeId> parse_statement(NodeId parent) {
    if (parser_.at("{")) {
      parser_.next();
      scopes_.emplace_back();
      std::vector<NodeId> ids = parse_block_contents(parent);
      scopes_.pop_back();
      parser_.expect("}");
      return ids;
    }
    if (parser_.at("if")) return {parse_if(parent)};
    if (parser_.at("while")) return {parse_while(parent)};
    if (parser_.at("for")) return {parse_for(parent)};
    if (parser_.at("return")) return {parse_return(parent)};
    return {parse_simple(parent)};
  }

  std::vector<NodeId> parse_body(NodeId parent) {
    scopes_.emplace_back();
    std::vector<NodeId> ids = parse_statement(parent);
    scopes_.pop_back();
    return ids;
  }

  NodeId parse_if(NodeId parent) {
    std::size_t first = parser_.position();
    detail::ExprPtr cond = parser_.parse_condition_header("if");
    NodeId id = add_node(StatementKind::If, first, parent).id;
    detail::Effects effects;
    detail::collect_effects(*cond, effects);
    record_effects(id, std::move(effects));

    std::vector<NodeId> children = parse_body(id);
    std::size_t then_count = children.size();
    bool has_else = false;
    if (parser_.at("else")) {
      parser_.next();
      has_else = true;
      for (NodeId child : parse_body(id)) children.push_back(child);
    }
    StatementNode& node = method_.statements[id];
    node.children = std::move(children);
    node.then_count = then_count;
    node.has_else = has_else;
    return id;
  }

  NodeId parse_while(NodeId parent) {
    std::size_t first = parser_.position();
    detail::ExprPtr cond = parser_.parse_condition_header("while");
    NodeId id = add_node(StatementKind::While, first, parent).id;
    detail::Effects effects;
    detail::collect_effects(*cond, effects);
    record_effects(id, std::move(effects));
    finish_loop(id);
    return id;
  }

  NodeId parse_for(NodeId parent) {
    std::size_t first = parser_.position();
    scopes_.emplace_back();
    detail::ForHeader header = parser_.parse_for_header();
    for (const auto& d : header.declarations) declare(*d.name);
    NodeId id = add_node(StatementKind::For, first, parent).id;
    record_effects(id, detail::analyze(header));
    finish_loop(id);
    scopes_.pop_back();
    return id;
  }

  void finish_loop(NodeId id) {
    std::vector<NodeId> children = parse_body(id);
    StatementNode& node = method_.statements[id];
    node.then_count = children.size();
    node.children = std::move(children);
  }

  NodeId parse_return(NodeId parent) {
    std::size_t first = parser_.position();
    detail::ExprPtr value = parser_.parse_return();
    NodeId id = add_node(StatementKind::Return, first, parent).id;
    detail::Effects effects;
    if (value) detail::collect_effects(*value, effects);
    record_effects(id, std::move(effects));
    return id;
  }

  NodeId parse_simple(NodeId parent) {
    std::size_t first = parser_.position();
    detail::SimpleStatement stmt = parser_.parse_simple_statement();
    detail::SimpleFacts facts = detail::analyze(stmt);
    NodeId id = add_node(stmt.kind, first, parent).id;
    record_effects(id, std::move(facts.effects));
    if (stmt.declaration) declare(*stmt.declaration->name);

    StatementNode& node = method_.statements[id];
    if (stmt.kind == StatementKind::Invocation) {
      node.called_method = std::move(facts.called_method);
      node.receiver = std::move(facts.receiver);
      if (node.receiver) method_.receiver_paths.insert(*node.receiver);
    }
    node.constructed_wrapper_of = std::move(facts.constructed_wrapper_of);
    node.constructed_types = std::move(facts.constructed_types);
    node.copy_of = std::move(facts.copy_of);
    node.assigned_to = std::move(facts.assigned_to);
    return id;
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  SyntaxParser parser_;
  MethodAst method_;
  std::vector<std::set<std::string>> scopes_;
};

detail::Effects simple_effects(const detail::SimpleStatement& stmt) {
  return detail::analyze(stmt).effects;
}

}  // namespace

MethodAst parse_method(std::string_view source) {
  return MethodParser(source).run();
}

ReadsWrites extract_reads_writes(const StatementNode& node) {
  std::vector<Token> tokens = tokenize(node.text);
  SyntaxParser parser(tokens);
  detail::Effects effects;

  switch (node.kind) {
    case StatementKind::Prototype:
      for (const auto& param : parser.parse_prototype().params)
        effects.writes.insert(param.name->text);
      break;
    case StatementKind::Declaration:
    case StatementKind::Assignment:
    case StatementKind::ExpressionStatement:
    case StatementKind::Invocation:
      effects = simple_effects(parser.parse_simple_statement());
      break;
    case StatementKind::If:
      detail::collect_effects(*parser.parse_condition_header("if"), effects);
      break;
    case StatementKind::While:
      detail::collect_effects(*parser.parse_condition_header("while"), effects);
      break;
    case StatementKind::For:
      effects = detail::analyze(parser.parse_for_header());
      break;
    case StatementKind::Return:
      if (auto value = parser.parse_return()) detail::collect_effects(*value, effects);
      break;
  }
  parser.expect_end();
  return {std::move(effects.reads), std::move(effects.writes)};
}

}  // namespace slicekit
