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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace slicekit {

enum class TokenKind {
  Identifier,
  Keyword,
  Literal,
  Operator,
  Punctuation,
  /// Sentinel closing every stream; its leading trivia holds whatever
  /// whitespace and comments follow the last real token.
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  /// Whitespace and comments between the previous token and this one.
  std::string leading_trivia;
  int line = 1;    // 1-based
  int column = 1;  // 1-based, counted in code points
  std::size_t offset = 0;  // byte offset of text in the source

  std::size_t end_offset() const { return offset + text.size(); }
};

/// Splits source into tokens. The returned stream always ends with a
/// TokenKind::End token, and concatenating leading_trivia + text over the
/// stream reproduces the source byte for byte.
///
/// Throws LexError on characters outside the alphabet, unterminated string
/// or character literals and unterminated block comments.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace slicekit
