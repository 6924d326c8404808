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

#include <set>
#include <string>
#include <string_view>

#include "slicekit/ast.hpp"

namespace slicekit {

/// Parses exactly one method definition of the mini-language (see
/// docs/grammar.ebnf) into a statement tree with dense, textual-order ids.
///
/// Throws LexError, ParseError or DuplicateDeclaration.
MethodAst parse_method(std::string_view source);

struct ReadsWrites {
  std::set<std::string> reads;
  std::set<std::string> writes;

  bool operator==(const ReadsWrites&) const = default;
};

/// Recomputes the variable sets of a single statement from its own text.
///
/// Writes are targets of `=`, compound assignment, `++`/`--` and
/// declaration initializers; every other identifier occurrence is a read.
/// Compound assignments and increments also read their target. For control
/// statements only the header contributes. The prototype writes every
/// parameter name.
ReadsWrites extract_reads_writes(const StatementNode& node);

}  // namespace slicekit
