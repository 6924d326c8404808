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

#include "slicekit/error.hpp"

#include <sstream>

namespace slicekit {

namespace {

std::string located(int line, int column, const std::string& message) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

std::string describe_expected(const std::vector<std::string>& expected,
                              const std::string& found) {
  std::ostringstream out;
  out << "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  out << " but found " << found;
  return out.str();
}

}  // namespace

LexError::LexError(int line, int column, std::string offending,
                   std::string reason)
    : Error(located(line, column, reason + " '" + offending + "'")),
      line_(line),
      column_(column),
      offending_(std::move(offending)) {}

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       std::string found)
    : Error(located(line, column, describe_expected(expected, found))),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

DuplicateDeclaration::DuplicateDeclaration(std::string name, int line,
                                           int column)
    : Error(located(line, column,
                    "variable '" + name + "' is already declared in this scope")),
      name_(std::move(name)),
      line_(line),
      column_(column) {}

UnknownVariable::UnknownVariable(std::string name)
    : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}

UnknownNode::UnknownNode(std::size_t id)
    : Error("unknown node " + std::to_string(id)), id_(id) {}

}  // namespace slicekit
