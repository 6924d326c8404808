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

#include "slicekit/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slicekit/error.hpp"
#include "slicekit/export.hpp"
#include "slicekit/parser.hpp"

namespace slicekit::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string diagnostic(std::string_view severity, std::string_view message, bool color) {
  std::string out;
  if (color) {
    out += severity == "error" ? "\x1b[1;31m" : "\x1b[1;33m";
    out += severity;
    out += ":\x1b[0m ";
  } else {
    out += severity;
    out += ": ";
  }
  out += message;
  out += '\n';
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

MethodAst load_method(const RunConfig& config) {
  MethodAst method = parse_method(read_file(config.input_path));
  if (config.method_name && *config.method_name != method.name)
    throw UnknownVariable(*config.method_name);
  return method;
}

RunResult run_slice(const RunConfig& config) {
  MethodAst method = load_method(config);
  SliceCriterion criterion{config.stream_variable, config.sink_methods};
  SliceOptions options;
  options.mode = config.mode;
  DependencyGraph graph = build_graph(method, config.mode);
  Slice slice = compute_slice(method, graph, criterion, options);

  RunResult result;
  for (const std::string& warning : slice.warnings)
    result.err += diagnostic("warning", warning, config.color);

  switch (config.output_format) {
    case OutputFormat::Text:
      result.out = render_slice(slice, method);
      if (config.emit_graph) {
        if (!result.out.empty()) result.out += '\n';
        result.out += to_dot(graph, method, slice.nodes, slice.sink_nodes);
      }
      break;
    case OutputFormat::Json:
      if (config.emit_graph) {
        json doc = {{"graph", json::parse(to_json(graph, method))},
                    {"slice", json::parse(slice_to_json(slice))}};
        result.out = doc.dump(2) + "\n";
      } else {
        result.out = slice_to_json(slice) + "\n";
      }
      break;
    case OutputFormat::Dot:
      result.out = to_dot(graph, method, slice.nodes, slice.sink_nodes);
      break;
  }
  return result;
}

RunResult run_graph(const RunConfig& config) {
  MethodAst method = load_method(config);
  DependencyGraph graph = build_graph(method, config.mode);
  RunResult result;
  result.out = config.output_format == OutputFormat::Json
                   ? to_json(graph, method) + "\n"
                   : to_dot(graph, method);
  return result;
}

std::vector<std::size_t> sorted_difference(const std::vector<std::size_t>& a,
                                           const std::set<NodeId>& b) {
  std::vector<std::size_t> out;
  for (std::size_t v : a)
    if (!b.contains(v)) out.push_back(v);
  return out;
}

std::vector<std::size_t> sorted_difference(const std::set<NodeId>& a,
                                           const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (std::size_t v : a)
    if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
  return out;
}

struct CorpusEntry {
  std::string file;
  bool pass = false;
  std::string error;
  std::vector<std::size_t> missing, extra, sink_missing, sink_extra;
};

CorpusEntry check_corpus_file(const std::filesystem::path& source,
                              const std::filesystem::path& golden_path) {
  CorpusEntry entry;
  entry.file = source.filename().string();
  try {
    json golden = json::parse(read_file(golden_path));
    SliceCriterion criterion;
    criterion.stream_variable = golden.at("criterion").at("streamVariable").get<std::string>();
    criterion.sink_methods =
        golden.at("criterion").at("sinkMethods").get<std::set<std::string>>();
    auto expected_nodes = golden.at("nodes").get<std::vector<std::size_t>>();
    auto expected_sinks = golden.at("sinkNodes").get<std::vector<std::size_t>>();

    MethodAst method = parse_method(read_file(source));
    Slice slice = compute_slice(method, criterion);
    entry.missing = sorted_difference(expected_nodes, slice.nodes);
    entry.extra = sorted_difference(slice.nodes, expected_nodes);
    entry.sink_missing = sorted_difference(expected_sinks, slice.sink_nodes);
    entry.sink_extra = sorted_difference(slice.sink_nodes, expected_sinks);
    entry.pass = entry.missing.empty() && entry.extra.empty() &&
                 entry.sink_missing.empty() && entry.sink_extra.empty();
  } catch (const json::exception& e) {
    entry.error = "malformed golden: " + std::string(e.what());
  } catch (const Error& e) {
    entry.error = e.what();
  }
  return entry;
}

std::string id_list(const std::vector<std::size_t>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

std::string text_report(const std::vector<CorpusEntry>& entries, std::size_t passed) {
  std::string out;
  for (const CorpusEntry& e : entries) {
    if (e.pass) {
      out += "PASS " + e.file + "\n";
      continue;
    }
    out += "FAIL " + e.file + ":";
    if (!e.error.empty()) {
      out += " " + e.error + "\n";
      continue;
    }
    if (!e.missing.empty()) out += " missing nodes " + id_list(e.missing);
    if (!e.extra.empty()) out += " extra nodes " + id_list(e.extra);
    if (!e.sink_missing.empty()) out += " missing sinks " + id_list(e.sink_missing);
    if (!e.sink_extra.empty()) out += " extra sinks " + id_list(e.sink_extra);
    out += "\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(entries.size()) + " pass\n";
  return out;
}

std::string json_report(const std::vector<CorpusEntry>& entries, std::size_t passed) {
  json files = json::array();
  for (const CorpusEntry& e : entries) {
    json item = {{"file", e.file},
                 {"status", e.pass ? "pass" : "fail"},
                 {"missing", e.missing},
                 {"extra", e.extra},
                 {"sinkMissing", e.sink_missing},
                 {"sinkExtra", e.sink_extra}};
    if (!e.error.empty()) item["error"] = e.error;
    files.push_back(std::move(item));
  }
  json doc = {{"files", std::move(files)}, {"passed", passed}, {"total", entries.size()}};
  return doc.dump(2) + "\n";
}

std::set<std::string> split_names(const std::vector<std::string>& parts) {
  std::set<std::string> names;
  for (const std::string& part : parts)
    if (!part.empty()) names.insert(part);
  return names;
}

}  // namespace

bool color_enabled() {
  const char* env = std::getenv("SLICEKIT_COLOR");
  if (env && std::string_view(env) == "0") return false;
  return ::isatty(STDERR_FILENO) == 1;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    switch (config.command) {
      case Command::Slice:
        return run_slice(config);
      case Command::Graph:
        return run_graph(config);
      case Command::Corpus:
        return run_corpus(config.input_path, config.output_format, config.color);
    }
  } catch (const LexError& e) {
    result = {kExitParseError, "", diagnostic("error", config.input_path.string() + ":" + e.what(), config.color)};
  } catch (const ParseError& e) {
    result = {kExitParseError, "", diagnostic("error", config.input_path.string() + ":" + e.what(), config.color)};
  } catch (const DuplicateDeclaration& e) {
    result = {kExitParseError, "", diagnostic("error", config.input_path.string() + ":" + e.what(), config.color)};
  } catch (const UnknownVariable& e) {
    std::string what = config.method_name && e.name() == *config.method_name
                           ? "unknown method '" + e.name() + "'"
                           : e.what();
    result = {kExitUnknownName, "", diagnostic("error", what, config.color)};
  } catch (const InvalidCriterion& e) {
    result = {kExitUsage, "", diagnostic("error", e.what(), config.color)};
  } catch (const IoError& e) {
    result = {kExitIoError, "", diagnostic("error", e.what(), config.color)};
  } catch (const std::exception& e) {
    result = {kExitInternal, "", diagnostic("error", std::string("internal error: ") + e.what(), config.color)};
  }
  return result;
}

RunResult run_corpus(const std::filesystem::path& directory, OutputFormat format,
                     bool color) {
  RunResult result;
  std::error_code ec;
  if (!std::filesystem::is_directory(directory, ec)) {
    result.exit_code = kExitIoError;
    result.err = diagnostic("error", "'" + directory.string() + "' is not a readable directory", color);
    return result;
  }

  std::vector<std::filesystem::path> sources;
  for (const auto& entry : std::filesystem::directory_iterator(directory, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mj")
      sources.push_back(entry.path());
  }
  if (ec) {
    result.exit_code = kExitIoError;
    result.err = diagnostic("error", "cannot list '" + directory.string() + "': " + ec.message(), color);
    return result;
  }
  std::sort(sources.begin(), sources.end());

  std::vector<std::filesystem::path> goldens;
  for (const auto& source : sources) {
    auto golden = source;
    golden.replace_extension(".expected.json");
    if (!std::filesystem::is_regular_file(golden)) {
      result.exit_code = kExitIoError;
      result.err += diagnostic("error", "missing golden '" + golden.string() + "'", color);
    }
    goldens.push_back(std::move(golden));
  }
  if (result.exit_code != kExitOk) return result;

  std::vector<std::future<CorpusEntry>> pending;
  for (std::size_t i = 0; i < sources.size(); ++i)
    pending.push_back(std::async(std::launch::async, check_corpus_file, sources[i], goldens[i]));
  std::vector<CorpusEntry> entries;
  for (auto& f : pending) entries.push_back(f.get());

  std::size_t passed = static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.pass; }));
  result.out = format == OutputFormat::Json ? json_report(entries, passed)
                                            : text_report(entries, passed);
  if (passed != entries.size()) {
    result.exit_code = kExitParseError;
    result.err = diagnostic("error",
                            std::to_string(entries.size() - passed) + " corpus file(s) disagree with their goldens",
                            color);
  }
  return result;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"slicekit: backward slices of output-stream writes"};
  app.require_subcommand(1);

  RunConfig config;
  std::string input;
  std::string mode = "all-defs";
  std::string format;
  std::vector<std::string> sinks;

  CLI::App* slice = app.add_subcommand("slice", "Print the slice of a method on an output stream");
  slice->add_option("file", input, "Method source (.mj)")->required();
  slice->add_option("--stream", config.stream_variable, "Output stream variable")->required();
  slice->add_option("--sinks", sinks, "Comma-separated sink method names")->delimiter(',');
  slice->add_option("--mode", mode, "Data-dependence mode")
      ->check(CLI::IsMember({"all-defs", "reaching-defs", "loop-aware"}));
  slice->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  slice->add_option("--method", config.method_name, "Expected method name");
  slice->add_flag("--emit-graph", config.emit_graph, "Also emit the dependency graph");

  CLI::App* graph = app.add_subcommand("graph", "Print the dependency graph of a method");
  graph->add_option("file", input, "Method source (.mj)")->required();
  graph->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--mode", mode, "Data-dependence mode")
      ->check(CLI::IsMember({"all-defs", "reaching-defs", "loop-aware"}));
  graph->add_option("--method", config.method_name, "Expected method name");

  CLI::App* corpus = app.add_subcommand("corpus", "Check a directory of programs against golden slices");
  corpus->add_option("dir", input, "Corpus directory")->required();
  corpus->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_storage;
  argv_storage.push_back("slicekit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.input_path = input;
  config.mode = *dependence_mode_from_string(mode);
  config.color = color_enabled();
  if (!sinks.empty()) config.sink_methods = split_names(sinks);
  if (*slice) {
    config.command = Command::Slice;
    if (format == "json") config.output_format = OutputFormat::Json;
    if (format == "dot") config.output_format = OutputFormat::Dot;
  } else if (*graph) {
    config.command = Command::Graph;
    config.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Dot;
  } else {
    config.command = Command::Corpus;
    if (format == "json") config.output_format = OutputFormat::Json;
  }

  RunResult result = run(config);
  out << result.out;
  err << result.err;
  out.flush();
  return result.exit_code;
}

}  // namespace slicekit::cli
