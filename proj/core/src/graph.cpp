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

#include "sachs/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sachs/error.hpp"

namespace sachs {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  if (n <= 64) masks_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const EdgeRef> edges) {
  Graph g(n);
  for (const EdgeRef& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[static_cast<std::size_t>(u)].contains(v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return rows_[static_cast<std::size_t>(v)].size();
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return rows_[static_cast<std::size_t>(v)];
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : rows_[static_cast<std::size_t>(u)].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(u));
  }
  if (rows_[static_cast<std::size_t>(u)].contains(v)) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
  if (!masks_.empty()) {
    masks_[static_cast<std::size_t>(u)] |= detail::bit(v);
    masks_[static_cast<std::size_t>(v)] |= detail::bit(u);
  }
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !rows_[static_cast<std::size_t>(u)].contains(v)) {
    throw Error(ErrorCode::kEdgeNotPresent,
                "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[static_cast<std::size_t>(u)].erase(v);
  rows_[static_cast<std::size_t>(v)].erase(u);
  if (!masks_.empty()) {
    masks_[static_cast<std::size_t>(u)] &= ~detail::bit(v);
    masks_[static_cast<std::size_t>(v)] &= ~detail::bit(u);
  }
  --m_;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && m_ == other.m_ && rows_ == other.rows_;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (int v : s.members()) out |= g.neighbors(v);
  return out;
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedGraph result;
  result.original = keep.members();
  const int k = static_cast<int>(result.original.size());
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) relabel[static_cast<std::size_t>(result.original[i])] = i;
  result.graph = Graph(k);
  for (int i = 0; i < k; ++i) {
    for (int w : g.neighbors(result.original[static_cast<std::size_t>(i)]).members()) {
      const int j = relabel[static_cast<std::size_t>(w)];
      if (j > i) result.graph.add_edge(i, j);
    }
  }
  return result;
}

InducedGraph delete_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, VertexSet::full(g.order()) - s);
}

Graph delete_edge(const Graph& g, EdgeRef e) {
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) ++count;
  }
  return count;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> comp{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : g.neighbors(comp[head]).members()) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int odd_components(const Graph& g) {
  int count = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() % 2 == 1) ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s.members()) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

MinDegree min_degree(const Graph& g) {
  MinDegree best;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (best.vertex < 0 || d < best.degree) best = {d, v};
  }
  if (best.vertex < 0) best.degree = 0;
  return best;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_claw_free(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c).members();
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
      }
    }
  }
  return true;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 16) {
    throw Error(ErrorCode::kSizeLimitExceeded, "vertex connectivity is exact only for n <= 16");
  }
  if (is_complete(g)) return n > 0 ? n - 1 : 0;
  const std::uint64_t all = detail::all_vertices(n);
  for (int s = 0; s <= n - 2; ++s) {
    bool cut_found = false;
    for_each_combination(n, s, [&](std::uint64_t cut) {
      if (!detail::connected_in(g, all & ~cut)) {
        cut_found = true;
        return false;
      }
      return true;
    });
    if (cut_found) return s;
  }
  return n - 2;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v).members()) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return {};
        }
      }
    }
  }
  return side;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation length differs from order");
  }
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int old = perm[static_cast<std::size_t>(i)];
    if (old < 0 || old >= n || inverse[static_cast<std::size_t>(old)] >= 0) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    inverse[static_cast<std::size_t>(old)] = i;
  }
  Graph out(n);
  for (const EdgeRef& e : g.edges()) {
    out.add_edge(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

namespace detail {

std::uint64_t neighborhood_mask(const Graph& g, std::uint64_t s) {
  std::uint64_t out = 0;
  while (s != 0) {
    out |= g.row_mask(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

int isolated_in(const Graph& g, std::uint64_t alive) {
  int count = 0;
  for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
    if ((g.row_mask(std::countr_zero(rest)) & alive) == 0) ++count;
  }
  return count;
}

int odd_components_in(const Graph& g, std::uint64_t alive) {
  int odd = 0;
  std::uint64_t unseen = alive;
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      const std::uint64_t grown = neighborhood_mask(g, frontier) & alive & ~comp;
      comp |= grown;
      frontier = grown;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    unseen &= ~comp;
  }
  return odd;
}

bool connected_in(const Graph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  std::uint64_t comp = alive & (~alive + 1);
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    const std::uint64_t grown = neighborhood_mask(g, frontier) & alive & ~comp;
    comp |= grown;
    frontier = grown;
  }
  return comp == alive;
}

}  // namespace detail

}  // namespace sachs
