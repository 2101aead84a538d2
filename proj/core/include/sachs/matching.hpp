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

#ifndef SACHS_MATCHING_HPP_
#define SACHS_MATCHING_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "sachs/graph.hpp"
#include "sachs/vertex_set.hpp"

namespace sachs {

// Set of pairwise disjoint edges of a host graph, sorted.
struct Matching {
  std::vector<EdgeRef> pairs;

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  bool operator==(const Matching&) const = default;
};

// Pairs are disjoint and present in g.
bool is_matching_of(const Graph& g, const Matching& m);

// Bipartite graph with parts [0, left) and [0, right); adjacency is stored
// from the left side only.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right);

  int left_size() const noexcept { return left_; }
  int right_size() const noexcept { return right_; }
  int edge_count() const noexcept { return edges_; }

  void add_edge(int l, int r);
  bool adjacent(int l, int r) const;
  const std::vector<int>& neighbors_of_left(int l) const { return adj_[static_cast<std::size_t>(l)]; }
  int right_degree(int r) const;

  // Right-side neighborhood of a set of left vertices.
  VertexSet neighborhood(const VertexSet& left_set) const;

 private:
  int left_ = 0;
  int right_ = 0;
  int edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

// mate arrays use -1 for unmatched vertices.
struct BipartiteMatching {
  std::vector<int> left_mate;
  std::vector<int> right_mate;

  int size() const;
  bool saturates_left() const;
  bool is_perfect() const;
};

// Left subset S with |S| > |N(S)|.
struct HallViolator {
  VertexSet set;
  int neighborhood_size = 0;

  int deficiency() const { return set.size() - neighborhood_size; }
};

// S with odd(G - S) > |S|.
struct TutteViolator {
  VertexSet set;
  int odd_count = 0;
};

// Hopcroft-Karp; adjacency order fixes which maximum matching is returned.
BipartiteMatching max_bipartite_matching(const BipartiteGraph& b);

// Left vertices reachable by alternating paths from every unmatched left
// vertex. This set does not depend on which maximum matching is supplied.
// Returns nullopt when m saturates the left part; throws MatchingNotMaximum
// if an augmenting path is found.
std::optional<HallViolator> hall_violator(const BipartiteGraph& b, const BipartiteMatching& m);

// Edmonds' blossom algorithm.
Matching max_matching_general(const Graph& g);

// A perfect matching, or the first S (by size, then lexicographic order)
// with odd(G - S) > |S|. Orders above 16 fall back to the Gallai-Edmonds
// barrier, which is a valid but not necessarily minimum violator.
std::variant<Matching, TutteViolator> has_perfect_matching(const Graph& g);

struct FactorCriticalResult {
  bool critical = false;
  bool parity_failure = false;  // n - k odd
  std::optional<VertexSet> failing_set;        // |S| = k, in g's labels
  std::optional<TutteViolator> inner_violator; // inside g - S, lifted to g's labels
};

// Definition-based: g - S has a perfect matching for every |S| = k.
// Throws KOutOfRange unless 0 <= k < n; requires n <= 64.
FactorCriticalResult is_k_factor_critical(const Graph& g, int k);

namespace detail {
// Perfect matching on the subgraph induced by `alive`; requires order <= 64.
bool has_perfect_matching_in(const Graph& g, std::uint64_t alive);
}  // namespace detail

}  // namespace sachs

#endif  // SACHS_MATCHING_HPP_
