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
#include <stdexcept>
#include <string>
#include <vector>

namespace slicekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character outside the mini-language alphabet, or an unterminated
/// literal or comment.
class LexError : public Error {
 public:
  LexError(int line, int column, std::string offending, std::string reason);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& offending() const { return offending_; }

 private:
  int line_;
  int column_;
  std::string offending_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected,
             std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// A variable declared twice in the same scope. Parameters and the
/// top-level statements of the method body share one scope.
class DuplicateDeclaration : public Error {
 public:
  DuplicateDeclaration(std::string name, int line, int column);

  const std::string& name() const { return name_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string name_;
  int line_;
  int column_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(std::size_t id);
  std::size_t id() const { return id_; }

 private:
  std::size_t id_;
};

/// Malformed slicing criterion (for example an empty sink-method set).
class InvalidCriterion : public Error {
 public:
  using Error::Error;
};

/// Graph JSON that does not follow the canonical schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace slicekit
