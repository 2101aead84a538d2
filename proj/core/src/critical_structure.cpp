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

#include "sachs/critical_structure.hpp"

#include <bit>
#include <string>

#include "sachs/error.hpp"
#include "sachs/matching.hpp"
#include "sachs/sachs_factor.hpp"

namespace sachs {

int difference(const Graph& g, const VertexSet& x) {
  return x.size() - neighborhood(g, x).size();
}

CriticalPair critical_difference(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw Error(ErrorCode::kSizeLimitExceeded, "critical difference scan needs n <= 16");

  int best_any = 0;
  int best_independent = 0;
  std::uint64_t witness_any = 0;
  std::uint64_t witness_independent = 0;
  // Increasing size, lexicographic within a size: only a strictly larger
  // value replaces the current witness.
  for_each_subset_by_size(n, 1, [&](std::uint64_t x) {
    const std::uint64_t nb = detail::neighborhood_mask(g, x);
    const int value = std::popcount(x) - std::popcount(nb);
    if (value > best_any) {
      best_any = value;
      witness_any = x;
    }
    if ((nb & x) == 0 && value > best_independent) {
      best_independent = value;
      witness_independent = x;
    }
    return true;
  });
  if (best_any != best_independent) {
    throw Error(ErrorCode::kContradictionDetected,
                "d(G)=" + std::to_string(best_any) + " but id(G)=" + std::to_string(best_independent));
  }
  return {best_any, best_independent, VertexSet::from_mask(n, witness_any),
          VertexSet::from_mask(n, witness_independent)};
}

int fast_critical_difference(const Graph& g) {
  return g.order() - max_bipartite_matching(double_cover(g)).size();
}

}  // namespace sachs
