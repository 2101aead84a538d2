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

#ifndef SACHS_ENUMERATE_HPP_
#define SACHS_ENUMERATE_HPP_

#include <string>
#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;

// Relabeling perm (new vertex i = old perm[i]) whose upper-triangle bit
// string, read in graph6 column order, is lexicographically minimal over all
// n! relabelings. Throws SizeLimitExceeded above kMaxCanonicalOrder.
std::vector<int> canonical_labeling(const Graph& g);

// graph6 bytes of the canonically relabeled graph. Equal for two graphs iff
// they are isomorphic; bytewise order matches bit-string order.
std::string canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

// One representative per isomorphism class on n vertices, each already in
// canonical labeling, sorted by canonical form. Results are cached.
// Throws SizeLimitExceeded above kMaxEnumerationOrder.
const std::vector<Graph>& enumerate_graphs(int n);

// Every class with min_n <= order <= max_n, ordered by order then form.
std::vector<Graph> enumerate_graphs_up_to(int max_n, int min_n = 0);

}  // namespace sachs

#endif  // SACHS_ENUMERATE_HPP_
