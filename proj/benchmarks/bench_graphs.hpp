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

#ifndef SACHS_BENCH_GRAPHS_HPP_
#define SACHS_BENCH_GRAPHS_HPP_

#include <random>

#include "sachs/graph.hpp"

namespace bench {

inline sachs::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  sachs::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Triangulated grid: planar with m close to 3n.
inline sachs::Graph triangulated_grid(int side) {
  sachs::Graph g(side * side);
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < side) g.add_edge(id(r, c), id(r + 1, c));
      if (r + 1 < side && c + 1 < side) g.add_edge(id(r, c), id(r + 1, c + 1));
    }
  return g;
}

}  // namespace bench

#endif  // SACHS_BENCH_GRAPHS_HPP_
