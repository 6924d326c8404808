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

#include <string>

#include "json.hpp"
#include "slicekit/slicer.hpp"
#include "slicekit/token.hpp"

namespace slicekit {

namespace {

// Statement text on one line: comments dropped, whitespace between tokens
// collapsed to a single space.
std::string single_line(std::string_view text) {
  std::string out;
  for (const Token& tok : tokenize(text)) {
    if (tok.kind == TokenKind::End) break;
    if (!out.empty() && !tok.leading_trivia.empty()) out += ' ';
    out += tok.text;
  }
  return out;
}

class SliceRenderer {
 public:
  SliceRenderer(const Slice& slice, const MethodAst& method)
      : slice_(slice), method_(method) {}

  std::string run() {
    const StatementNode& proto = method_.node(kPrototypeId);
    out_ += single_line(proto.text) + " {\n";
    children(proto, 0, proto.children.size(), 1);
    out_ += "}\n";
    return std::move(out_);
  }

 private:
  void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void children(const StatementNode& parent, std::size_t begin, std::size_t end,
                int depth) {
    for (std::size_t i = begin; i < end; ++i)
      statement(method_.node(parent.children[i]), depth);
  }

  bool any_included(const StatementNode& parent, std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i < end; ++i) {
      const StatementNode& child = method_.node(parent.children[i]);
      if (slice_.contains(child.id)) return true;
      if (child.is_control() && any_included(child, 0, child.children.size())) return true;
    }
    return false;
  }

  void statement(const StatementNode& node, int depth) {
    if (!slice_.contains(node.id)) {
      // Not reachable for control-closed slices; keep inner statements
      // visible rather than dropping them.
      if (node.is_control()) children(node, 0, node.children.size(), depth);
      return;
    }
    indent(depth);
    if (!node.is_control()) {
      out_ += single_line(node.text) + "\n";
      return;
    }
    out_ += single_line(node.text) + " {\n";
    children(node, 0, node.then_count, depth + 1);
    if (node.kind == StatementKind::If &&
        any_included(node, node.then_count, node.children.size())) {
      indent(depth);
      out_ += "} else {\n";
      children(node, node.then_count, node.children.size(), depth + 1);
    }
    indent(depth);
    out_ += "}\n";
  }

  const Slice& slice_;
  const MethodAst& method_;
  std::string out_;
};

}  // namespace

std::string render_slice(const Slice& slice, const MethodAst& method) {
  if (slice.empty()) return {};
  return SliceRenderer(slice, method).run();
}

std::string slice_to_json(const Slice& slice) {
  nlohmann::json doc = {
      {"criterion",
       {{"streamVariable", slice.criterion.stream_variable},
        {"sinkMethods", slice.criterion.sink_methods}}},
      {"nodes", slice.nodes},
      {"sinkNodes", slice.sink_nodes},
      {"warnings", slice.warnings},
  };
  return doc.dump(2);
}

}  // namespace slicekit
