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
#include "sachs/planarity.hpp"

namespace {

void BM_PlanarTest(benchmark::State& state) {
  const auto g = bench::triangulated_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sachs::test_planarity(g));
  state.counters["n"] = g.order();
}
BENCHMARK(BM_PlanarTest)->DenseRange(4, 16, 4);

void BM_PlanarEmbeddingAndCheck(benchmark::State& state) {
  const auto g = bench::triangulated_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto v = sachs::is_planar(g);
    benchmark::DoNotOptimize(sachs::verify_embedding(g, v.embedding()));
  }
}
BENCHMARK(BM_PlanarEmbeddingAndCheck)->DenseRange(4, 16, 4);

void BM_KuratowskiExtraction(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::is_planar(g));
}
BENCHMARK(BM_KuratowskiExtraction)->DenseRange(10, 30, 10);

void BM_KPlanarity(benchmark::State& state) {
  const auto g = bench::random_graph(12, 0.35, 6);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sachs::is_k_planar(g, k));
}
BENCHMARK(BM_KPlanarity)->DenseRange(0, 3);

}  // namespace
