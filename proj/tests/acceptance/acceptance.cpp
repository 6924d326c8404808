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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Every check is exact; nothing is sampled or tolerated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle/corpus.hpp"
#include "oracle/oracle.hpp"
#include "slicekit/slicekit.hpp"
#ifdef SLICEKIT_HAVE_CLI
#include "slicekit/cli.hpp"
#endif

using namespace slicekit;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = SLICEKIT_TEST_DIR "/corpus";

// Collects the first few failure reasons of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& why) {
    ++checks_;
    if (ok) return;
    if (reasons_.size() < 5) reasons_.push_back(why);
    ++failures_;
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& r : reasons_) s += "\n    " + r;
    if (checks_ == 0) s += "\n    no checks ran";
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> reasons_;
};

std::string ids(const std::set<NodeId>& s) {
  std::string out = "{";
  for (NodeId id : s) out += (out.size() > 1 ? "," : "") + std::to_string(id);
  return out + "}";
}

std::set<Edge> edge_set(const DependencyGraph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

struct CorpusCase {
  fs::path path;
  std::string source;
  MethodAst method;
  SliceCriterion criterion;
};

std::vector<CorpusCase> load_corpus() {
  std::vector<CorpusCase> out;
  for (const auto& file : oracle::corpus_files(kCorpus)) {
    CorpusCase c{file, oracle::read_text(file), {}, {}};
    c.method = parse_method(c.source);
    c.criterion = oracle::corpus_criterion(c.source);
    out.push_back(std::move(c));
  }
  return out;
}

void criterion_transpose(Check& c) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 100; ++trial) {
    auto rg = oracle::random_graph(rng, 50, 0.3);
    DependencyGraph g(rg.node_count, rg.edges);
    DependencyGraph t = transpose(g);
    c.expect(transpose(t) == g, "trial " + std::to_string(trial) + ": T(T(G)) != G");
    c.expect(t.edge_count() == g.edge_count(), "trial " + std::to_string(trial) + ": |E^T| != |E|");
    bool reversed = true;
    for (const Edge& e : g.edges()) reversed = reversed && t.has_edge(e.dst, e.src, e.kind);
    c.expect(reversed, "trial " + std::to_string(trial) + ": an edge is not reversed");
  }
}

void criterion_bfs(Check& c) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    auto rg = oracle::random_graph(rng, 12, 0.3);
    DependencyGraph g(rg.node_count, rg.edges);
    auto closure = oracle::transitive_closure(oracle::adjacency_matrix(rg.node_count, rg.edges));
    for (NodeId s = 0; s < rg.node_count; ++s) {
      auto found = reachable(g, s);
      std::set<NodeId> got(found.begin(), found.end());
      std::set<NodeId> want = {s};
      for (NodeId v = 0; v < rg.node_count; ++v)
        if (closure[s][v]) want.insert(v);
      c.expect(got == want && got.size() == found.size(),
               "trial " + std::to_string(trial) + " start " + std::to_string(s) + ": bfs " +
                   ids(got) + " oracle " + ids(want));
    }
  }
}

void criterion_textual_example(Check& c) {
  MethodAst m = parse_method("void m(Writer out, int y) { x = y; z = x; out.print(z); }");
  DependencyGraph g = build_graph(m);
  c.expect(g.has_edge(1, 2, EdgeKind::Data), "missing data edge x = y -> z = x");
  c.expect(!g.has_edge(2, 1, EdgeKind::Data), "data edge points backwards");
  Slice s = compute_slice(m, {"out"});
  c.expect(s.contains(1) && s.contains(2), "slice " + ids(s.nodes) + " lacks a statement");
  c.expect(s.sink_nodes == std::set<NodeId>{3}, "sink set " + ids(s.sink_nodes));
}

void criterion_loop_example(Check& c) {
  MethodAst m = parse_method(
      "void loop(int i, int sum) {\n"
      "  while (i <= 10) {\n"
      "    sum = sum + 1;\n"
      "    ++i;\n"
      "  }\n"
      "}\n");
  c.expect(m.size() == 4, "expected 4 nodes, got " + std::to_string(m.size()));
  if (m.size() != 4) return;
  std::set<std::pair<NodeId, NodeId>> control;
  for (const Edge& e : build_graph(m).edges())
    if (e.kind == EdgeKind::Control) control.emplace(e.src, e.dst);
  std::set<std::pair<NodeId, NodeId>> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  c.expect(control == want, "control edges differ from prototype->all, while->{2,3}");
}

void criterion_graph_oracle(Check& c) {
  oracle::ProgramGenerator gen(977);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = gen.generate(12);
    MethodAst m = parse_method(p.source);
    std::set<std::pair<NodeId, NodeId>> got;
    for (const Edge& e : build_graph(m).edges())
      if (e.kind == EdgeKind::Data) got.emplace(e.src, e.dst);
    c.expect(got == oracle::brute_force_data_edges(m),
             "program " + std::to_string(trial) + ": data edges differ");
    bool facts = m.size() == p.reads.size();
    for (NodeId i = 0; facts && i < m.size(); ++i)
      facts = m.statements[i].reads == p.reads[i] && m.statements[i].writes == p.writes[i];
    c.expect(facts, "program " + std::to_string(trial) + ": reads/writes differ from generator");
  }
}

void criterion_slice_invariants(Check& c, const std::vector<CorpusCase>& corpus) {
  c.expect(corpus.size() == 15, "corpus has " + std::to_string(corpus.size()) + " programs");
  for (const auto& cc : corpus) {
    const std::string name = cc.path.filename().string();
    Slice s = compute_slice(cc.method, cc.criterion);
    for (NodeId k : s.sink_nodes) c.expect(s.contains(k), name + ": sink missing");
    // An empty slice has nothing to anchor; node 0 is required otherwise.
    if (!s.empty()) c.expect(s.contains(kPrototypeId), name + ": prototype missing");
    for (NodeId v : s.nodes)
      for (auto p = cc.method.node(v).parent; p; p = cc.method.node(*p).parent)
        c.expect(s.contains(*p), name + ": enclosing " + std::to_string(*p) + " missing");
    std::set<NodeId> oracle_sinks;
    auto want = oracle::oracle_slice(cc.method, cc.criterion.stream_variable,
                                     cc.criterion.sink_methods, default_wrapper_types(),
                                     &oracle_sinks);
    c.expect(s.nodes == want, name + ": slice " + ids(s.nodes) + " oracle " + ids(want));
    c.expect(s.sink_nodes == oracle_sinks, name + ": sinks differ from oracle");
    auto golden = cc.path;
    golden.replace_extension(".expected.json");
    c.expect(slice_to_json(s) + "\n" == oracle::read_text(golden), name + ": differs from golden");
  }
}

void criterion_alias(Check& c, const std::vector<CorpusCase>& corpus) {
  const CorpusCase* direct = nullptr;
  const CorpusCase* wrapped = nullptr;
  for (const auto& cc : corpus) {
    if (cc.path.filename() == "01_direct_write.mj") direct = &cc;
    if (cc.path.filename() == "02_wrapper_write.mj") wrapped = &cc;
  }
  c.expect(direct && wrapped, "direct/wrapper corpus pair not found");
  if (!direct || !wrapped) return;

  NodeId wrapper_decl = 0;
  for (const auto& node : wrapped->method.statements)
    if (node.constructed_wrapper_of == direct->criterion.stream_variable) wrapper_decl = node.id;
  c.expect(wrapper_decl != 0, "no wrapper declaration in the wrapper variant");
  if (wrapper_decl == 0) return;

  auto aliases = resolve_output_aliases(wrapped->method, wrapped->criterion.stream_variable);
  c.expect(aliases.contains("w"), "w is not an output alias");
  bool writes_only_through_w = true;
  for (const auto& node : wrapped->method.statements)
    if (node.receiver == wrapped->criterion.stream_variable) writes_only_through_w = false;
  c.expect(writes_only_through_w, "wrapper variant writes to the stream directly");

  Slice d = compute_slice(direct->method, direct->criterion);
  Slice w = compute_slice(wrapped->method, wrapped->criterion);
  c.expect(!w.empty(), "wrapper slice is empty");
  c.expect(w.contains(wrapper_decl), "wrapper declaration not in slice");

  std::set<NodeId> renumbered;
  for (NodeId v : w.nodes)
    if (v != wrapper_decl) renumbered.insert(v > wrapper_decl ? v - 1 : v);
  c.expect(renumbered == d.nodes, "wrapper slice " + ids(renumbered) + " direct slice " + ids(d.nodes));

  for (const CorpusCase* cc : {direct, wrapped}) {
    auto want = oracle::oracle_slice(cc->method, cc->criterion.stream_variable,
                                     cc->criterion.sink_methods, default_wrapper_types());
    Slice got = compute_slice(cc->method, cc->criterion);
    c.expect(got.nodes == want, cc->path.filename().string() + ": oracle disagrees");
  }
}

std::string corpus_report() {
#ifdef SLICEKIT_HAVE_CLI
  cli::RunResult r = cli::run_corpus(kCorpus, cli::OutputFormat::Json, false);
  return std::to_string(r.exit_code) + "\n" + r.out + r.err;
#else
  nlohmann::json report = nlohmann::json::array();
  for (const auto& cc : load_corpus())
    report.push_back(nlohmann::json::parse(slice_to_json(compute_slice(cc.method, cc.criterion))));
  return report.dump(2);
#endif
}

void criterion_determinism(Check& c) {
  std::string first = corpus_report();
  std::string second = corpus_report();
  c.expect(!first.empty(), "empty report");
  c.expect(first == second, "two corpus runs differ");
#ifdef SLICEKIT_HAVE_CLI
  c.expect(first.rfind("0\n", 0) == 0, "corpus run did not pass");
#endif
}

}  // namespace

int main() {
  std::vector<CorpusCase> corpus;
  std::string load_error;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    load_error = e.what();
  }

  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"transpose involution on 100 random graphs", criterion_transpose},
      {"bfs equals transitive-closure oracle on 200 random graphs", criterion_bfs},
      {"x = y; z = x; data edge and slice", criterion_textual_example},
      {"while loop control edges", criterion_loop_example},
      {"data edges equal brute force on 100 generated programs", criterion_graph_oracle},
      {"corpus slice invariants and path-enumeration oracle",
       [&](Check& c) { criterion_slice_invariants(c, corpus); }},
      {"wrapper alias slice equals direct slice", [&](Check& c) { criterion_alias(c, corpus); }},
      {"two corpus runs give byte-identical reports", criterion_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      if (!load_error.empty() && (i == 5 || i == 6)) check.expect(false, "corpus: " + load_error);
      else criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s criterion %zu: %s (%zu checks, %lld ms)%s\n", check.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].name, check.checks(), static_cast<long long>(ms),
                check.ok() ? "" : check.summary().c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
