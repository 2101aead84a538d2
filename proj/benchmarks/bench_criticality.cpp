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
#include "sachs/critical_structure.hpp"
#include "sachs/criticality.hpp"

namespace {

void BM_SachsCritical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = sachs::complete_graph(n);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::is_k_sachs_critical(g, n - 3));
}
BENCHMARK(BM_SachsCritical)->DenseRange(6, 12, 2);

void BM_MinimalCritical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = sachs::complete_graph(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(sachs::is_minimal_k_critical(g, n - 2, sachs::CriticalityMode::kSachs, false));
}
BENCHMARK(BM_MinimalCritical)->DenseRange(5, 9, 1);

void BM_CriticalDifferenceBruteForce(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::critical_difference(g));
}
BENCHMARK(BM_CriticalDifferenceBruteForce)->DenseRange(8, 16, 4);

void BM_CriticalDifferenceMatching(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::fast_critical_difference(g));
}
BENCHMARK(BM_CriticalDifferenceMatching)->DenseRange(8, 16, 4);

}  // namespace
