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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slicekit/builder.hpp"
#include "slicekit/slicer.hpp"

namespace slicekit::cli {

// Process exit statuses. Documented in README.md.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;   // also: corpus mismatch
inline constexpr int kExitUnknownName = 2;
inline constexpr int kExitIoError = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

enum class Command { Slice, Graph, Corpus };

enum class OutputFormat { Text, Json, Dot };

struct RunConfig {
  Command command = Command::Slice;
  std::filesystem::path input_path;
  /// Reserved: files hold one method, so this only checks its name.
  std::optional<std::string> method_name;
  std::string stream_variable;
  std::set<std::string> sink_methods = default_sink_methods();
  DependenceMode mode = DependenceMode::AllDefs;
  OutputFormat output_format = OutputFormat::Text;
  bool emit_graph = false;
  bool color = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;  // payload, for standard output
  std::string err;  // diagnostics, for standard error
};

RunResult run(const RunConfig& config);

/// Checks every `.mj` file in directory against its `.expected.json`
/// golden slice. Files are sliced in parallel; the report is sorted by
/// file name.
RunResult run_corpus(const std::filesystem::path& directory,
                     OutputFormat format = OutputFormat::Text,
                     bool color = false);

/// Full command line handling: args excludes the program name.
int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err);

/// True unless SLICEKIT_COLOR=0 or standard error is not a terminal.
bool color_enabled();

}  // namespace slicekit::cli
