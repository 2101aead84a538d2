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

#ifndef SACHS_CRITICAL_STRUCTURE_HPP_
#define SACHS_CRITICAL_STRUCTURE_HPP_

#include "sachs/graph.hpp"

namespace sachs {

// Critical difference d(G) = max |X| - |N(X)| over all X, and the same
// maximum over independent X, with witnesses. The empty set takes part in
// both maxima, so both values are >= 0.
struct CriticalPair {
  int d = 0;
  int id = 0;
  VertexSet critical_set;
  VertexSet critical_independent_set;
};

// |X| - |N(X)|.
int difference(const Graph& g, const VertexSet& x);

// Exhaustive over all 2^n subsets. Witnesses are the smallest maximizers,
// lexicographically least among equals. Throws SizeLimitExceeded above
// n = 16 and ContradictionDetected if d != id.
CriticalPair critical_difference(const Graph& g);

// n minus the matching number of the bipartite double cover.
int fast_critical_difference(const Graph& g);

}  // namespace sachs

#endif  // SACHS_CRITICAL_STRUCTURE_HPP_
