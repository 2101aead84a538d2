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

#ifndef SACHS_GRAPH_HPP_
#define SACHS_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "sachs/vertex_set.hpp"

namespace sachs {

// Undirected edge with u < v.
struct EdgeRef {
  int u = 0;
  int v = 0;

  EdgeRef() = default;
  // Normalizes the endpoint order; u == v is rejected by Graph, not here.
  EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const EdgeRef&) const = default;
};

// Finite simple undirected graph on vertices 0..n-1 with bitset rows.
//
// Symmetric adjacency and the absence of loops are enforced by every
// mutator. Values are immutable once shared; copies are cheap enough at the
// sizes this library targets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws LoopEdge, DuplicateEdge or VertexOutOfRange.
  static Graph from_edges(int n, std::span<const EdgeRef> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  const VertexSet& neighbors(int v) const;
  // Row of v as a machine word; requires order() <= 64.
  std::uint64_t row_mask(int v) const { return masks_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint64_t> row_masks() const noexcept { return masks_; }

  // Edges sorted lexicographically by (u, v).
  std::vector<EdgeRef> edges() const;

  void add_edge(int u, int v);
  // Throws EdgeNotPresent.
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::uint64_t> masks_;
};

// Result of deleting a vertex set: survivors keep their relative order and
// original[i] is the id in the source graph of new vertex i.
struct InducedGraph {
  Graph graph;
  std::vector<int> original;
};

// N(S): plain union of neighborhoods; may intersect S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

InducedGraph delete_vertices(const Graph& g, const VertexSet& s);
InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_edge(const Graph& g, EdgeRef e);

int isolated_count(const Graph& g);
int odd_components(const Graph& g);
// Components as ascending vertex lists, ordered by their smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

struct MinDegree {
  int degree = 0;
  int vertex = -1;  // lowest-numbered vertex attaining the minimum
};
// For the empty graph returns {0, -1}.
MinDegree min_degree(const Graph& g);

bool is_complete(const Graph& g);
bool is_claw_free(const Graph& g);
// Exact vertex connectivity; complete graphs report n - 1. Order <= 16.
int vertex_connectivity(const Graph& g);

// Two-coloring as side[v] in {0, 1}; empty if the graph has an odd cycle.
std::vector<int> bipartition(const Graph& g);

// Named families.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_bipartite(int a, int b);  // parts [0,a) and [a,a+b)
Graph petersen_graph();

// Relabels g so that new vertex i is old vertex perm[i].
Graph permute(const Graph& g, std::span<const int> perm);

// Bitset-row helpers for the exact algorithms; all require order() <= 64.
namespace detail {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t all_vertices(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t neighborhood_mask(const Graph& g, std::uint64_t s);
// Vertices of `alive` with no neighbor inside `alive`.
int isolated_in(const Graph& g, std::uint64_t alive);
int odd_components_in(const Graph& g, std::uint64_t alive);
bool connected_in(const Graph& g, std::uint64_t alive);

}  // namespace detail

}  // namespace sachs

#endif  // SACHS_GRAPH_HPP_
