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
#include "sachs/matching.hpp"
#include "sachs/sachs_factor.hpp"

namespace {

void BM_BlossomMatching(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::max_matching_general(g));
}
BENCHMARK(BM_BlossomMatching)->RangeMultiplier(2)->Range(16, 256);

void BM_DoubleCoverMatching(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.1, 2);
  const auto cover = sachs::double_cover(g);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::max_bipartite_matching(cover));
}
BENCHMARK(BM_DoubleCoverMatching)->RangeMultiplier(2)->Range(16, 256);

void BM_OneTwoFactor(benchmark::State& state) {
  const auto g = bench::random_graph(static_cast<int>(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::has_one_two_factor(g));
}
BENCHMARK(BM_OneTwoFactor)->RangeMultiplier(2)->Range(8, 64);

void BM_TutteViolatorBruteForce(benchmark::State& state) {
  sachs::Graph g = bench::random_graph(static_cast<int>(state.range(0)), 0.25, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sachs::has_perfect_matching(g));
}
BENCHMARK(BM_TutteViolatorBruteForce)->DenseRange(8, 16, 4);

}  // namespace
