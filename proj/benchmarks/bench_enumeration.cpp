// Copyright 2026 The sachs-lab Authors.
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

#include "bench_graphs.hpp"
#include "sachs/enumerate.hpp"

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 9, 1);

// Enumeration results are cached, so only the first iteration does real work;
// a single iteration is reported.
void BM_EnumerateSeven(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sachs::enumerate_graphs(7).size());
}
BENCHMARK(BM_EnumerateSeven)->Iterations(1)->Unit(benchmark::kMillisecond);

}  // namespace
