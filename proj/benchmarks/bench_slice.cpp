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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "slicekit/slicekit.hpp"

namespace {

// A method of n statements over ten locals, with a while loop every 25
// statements and a write to `out` every 10.
std::string synthetic_method(int n) {
  std::mt19937 rng(static_cast<std::uint32_t>(n));
  auto var = [&] { return "v" + std::to_string(rng() % 10); };
  std::string src = "void big(Writer out, int v0, int v1, int v2, int v3, int v4, int v5, int v6, "
                    "int v7, int v8, int v9) {\n";
  int open = 0;
  for (int i = 0; i < n; ++i) {
    if (i % 25 == 24 && open == 0) {
      src += "  while (" + var() + " < 100) {\n";
      open = 1;
    } else if (i % 10 == 9) {
      src += "    out.print(" + var() + ");\n";
    } else {
      src += "    " + var() + " = " + var() + " + " + var() + ";\n";
    }
    if (open && i % 25 == 12) {
      src += "  }\n";
      open = 0;
    }
  }
  if (open) src += "  }\n";
  return src + "}\n";
}

void BM_Parse(benchmark::State& state) {
  std::string src = synthetic_method(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slicekit::parse_method(src));
  state.SetComplexityN(state.range(0));
}

void BM_BuildGraph(benchmark::State& state) {
  auto m = slicekit::parse_method(synthetic_method(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(slicekit::build_graph(m));
  state.SetComplexityN(state.range(0));
}

void BM_Transpose(benchmark::State& state) {
  auto m = slicekit::parse_method(synthetic_method(static_cast<int>(state.range(0))));
  auto g = slicekit::build_graph(m);
  for (auto _ : state) benchmark::DoNotOptimize(slicekit::transpose(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
  state.SetComplexityN(static_cast<int64_t>(g.node_count() + g.edge_count()));
}

void BM_Slice(benchmark::State& state) {
  auto m = slicekit::parse_method(synthetic_method(static_cast<int>(state.range(0))));
  auto g = slicekit::build_graph(m);
  slicekit::SliceCriterion criterion{"out"};
  for (auto _ : state) benchmark::DoNotOptimize(slicekit::compute_slice(m, g, criterion));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Parse)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK(BM_BuildGraph)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK(BM_Transpose)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK(BM_Slice)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK_MAIN();
