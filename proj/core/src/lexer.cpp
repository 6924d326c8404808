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
#include <cctype>

#include "slicekit/error.hpp"
#include "slicekit/token.hpp"

namespace slicekit {

namespace {

constexpr std::array<std::string_view, 16> kKeywords = {
    "boolean", "char", "double", "else", "float",  "for",   "if",   "int",
    "long",    "new",  "return", "void", "while",  "short", "byte", "final",
};

// Literal-valued words lex as literals, not keywords.
constexpr std::array<std::string_view, 3> kLiteralWords = {"true", "false",
                                                           "null"};

// Longest match first.
constexpr std::array<std::string_view, 22> kOperators = {
    "++", "--", "+=", "-=", "*=", "/=", "%=", "==", "!=", "<=", ">=",
    "&&", "||", "+",  "-",  "*",  "/",  "%",  "=",  "<",  ">",  "!",
};

constexpr std::string_view kPunctuation = "(){};,.";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_continuation_byte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      std::size_t trivia_start = pos_;
      skip_trivia();
      Token tok;
      tok.leading_trivia = std::string(src_.substr(trivia_start, pos_ - trivia_start));
      tok.line = line_;
      tok.column = column_;
      tok.offset = pos_;
      if (pos_ >= src_.size()) {
        tok.kind = TokenKind::End;
        tokens.push_back(std::move(tok));
        return tokens;
      }
      std::size_t start = pos_;
      tok.kind = lex_one();
      tok.text = std::string(src_.substr(start, pos_ - start));
      tokens.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if (!is_continuation_byte(src_[pos_])) {
      ++column_;
    }
    ++pos_;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  std::string current_char() const {
    std::size_t len = 1;
    while (pos_ + len < src_.size() && is_continuation_byte(src_[pos_ + len])) ++len;
    return std::string(src_.substr(pos_, len));
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int line = line_, column = column_;
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size())
          throw LexError(line, column, "/*", "unterminated block comment");
        advance(2);
      } else {
        return;
      }
    }
  }

  TokenKind lex_one() {
    char c = peek();
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_part(peek())) advance();
      std::string_view word = src_.substr(start, pos_ - start);
      if (std::find(kLiteralWords.begin(), kLiteralWords.end(), word) != kLiteralWords.end())
        return TokenKind::Literal;
      return is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (is_ident_start(peek()))
        throw LexError(line_, column_, current_char(), "malformed number literal");
      return TokenKind::Literal;
    }
    if (c == '"' || c == '\'') {
      lex_quoted(c);
      return TokenKind::Literal;
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        return TokenKind::Operator;
      }
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      return TokenKind::Punctuation;
    }
    throw LexError(line_, column_, current_char(), "unexpected character");
  }

  void lex_quoted(char quote) {
    int line = line_, column = column_;
    const char* what = quote == '"' ? "unterminated string literal"
                                    : "unterminated character literal";
    advance();
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n')
        throw LexError(line, column, std::string(1, quote), what);
      char c = peek();
      if (c == '\\') {
        advance();
        if (pos_ >= src_.size() || peek() == '\n')
          throw LexError(line, column, std::string(1, quote), what);
        advance();
      } else if (c == quote) {
        advance();
        return;
      } else {
        advance();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Literal: return "literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace slicekit
