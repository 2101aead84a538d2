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

#include "sachs/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "sachs/error.hpp"

namespace sachs {

bool is_matching_of(const Graph& g, const Matching& m) {
  VertexSet covered(g.order());
  for (const EdgeRef& e : m.pairs) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (covered.contains(e.u) || covered.contains(e.v)) return false;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return true;
}

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_(left), right_(right), adj_(static_cast<std::size_t>(left)) {
  if (left < 0 || right < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative part size");
  }
}

void BipartiteGraph::add_edge(int l, int r) {
  if (l < 0 || l >= left_ || r < 0 || r >= right_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "bipartite edge " + std::to_string(l) + "-" + std::to_string(r));
  }
  auto& row = adj_[static_cast<std::size_t>(l)];
  const auto it = std::lower_bound(row.begin(), row.end(), r);
  if (it != row.end() && *it == r) {
    throw Error(ErrorCode::kDuplicateEdge,
                "bipartite edge " + std::to_string(l) + "-" + std::to_string(r));
  }
  row.insert(it, r);
  ++edges_;
}

bool BipartiteGraph::adjacent(int l, int r) const {
  if (l < 0 || l >= left_) return false;
  const auto& row = adj_[static_cast<std::size_t>(l)];
  return std::binary_search(row.begin(), row.end(), r);
}

int BipartiteGraph::right_degree(int r) const {
  int d = 0;
  for (const auto& row : adj_) {
    if (std::binary_search(row.begin(), row.end(), r)) ++d;
  }
  return d;
}

VertexSet BipartiteGraph::neighborhood(const VertexSet& left_set) const {
  VertexSet out(right_);
  for (int l : left_set.members()) {
    for (int r : adj_[static_cast<std::size_t>(l)]) out.insert(r);
  }
  return out;
}

int BipartiteMatching::size() const {
  return static_cast<int>(
      std::count_if(left_mate.begin(), left_mate.end(), [](int r) { return r >= 0; }));
}

bool BipartiteMatching::saturates_left() const {
  return std::all_of(left_mate.begin(), left_mate.end(), [](int r) { return r >= 0; });
}

bool BipartiteMatching::is_perfect() const {
  return saturates_left() && left_mate.size() == right_mate.size();
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& b)
      : b_(b),
        left_mate_(static_cast<std::size_t>(b.left_size()), -1),
        right_mate_(static_cast<std::size_t>(b.right_size()), -1),
        dist_(static_cast<std::size_t>(b.left_size()), 0),
        next_(static_cast<std::size_t>(b.left_size()), 0) {}

  BipartiteMatching run() {
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int l = 0; l < b_.left_size(); ++l) {
        if (left_mate_[static_cast<std::size_t>(l)] < 0) dfs(l);
      }
    }
    return {left_mate_, right_mate_};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::vector<int> queue;
    for (int l = 0; l < b_.left_size(); ++l) {
      if (left_mate_[static_cast<std::size_t>(l)] < 0) {
        dist_[static_cast<std::size_t>(l)] = 0;
        queue.push_back(l);
      } else {
        dist_[static_cast<std::size_t>(l)] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int l = queue[head];
      for (int r : b_.neighbors_of_left(l)) {
        const int next = right_mate_[static_cast<std::size_t>(r)];
        if (next < 0) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    const auto& nbrs = b_.neighbors_of_left(l);
    for (auto& i = next_[static_cast<std::size_t>(l)]; i < static_cast<int>(nbrs.size()); ++i) {
      const int r = nbrs[static_cast<std::size_t>(i)];
      const int next = right_mate_[static_cast<std::size_t>(r)];
      if (next < 0 || (dist_[static_cast<std::size_t>(next)] ==
                           dist_[static_cast<std::size_t>(l)] + 1 &&
                       dfs(next))) {
        left_mate_[static_cast<std::size_t>(l)] = r;
        right_mate_[static_cast<std::size_t>(r)] = l;
        ++i;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  const BipartiteGraph& b_;
  std::vector<int> left_mate_;
  std::vector<int> right_mate_;
  std::vector<int> dist_;
  std::vector<int> next_;
};

// Edmonds' algorithm in the classic array form: base[] tracks contracted
// blossoms, p[] the alternating-tree parents of odd vertices.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.order()), adj_(static_cast<std::size_t>(n_)), match_(static_cast<std::size_t>(n_), -1) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).members();
  }

  Matching run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] >= 0) continue;
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (match_[static_cast<std::size_t>(w)] < 0) {
          match_[static_cast<std::size_t>(v)] = w;
          match_[static_cast<std::size_t>(w)] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[static_cast<std::size_t>(root)] >= 0) continue;
      int v = find_path(root);
      while (v >= 0) {
        const int pv = parent_[static_cast<std::size_t>(v)];
        const int ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(v)] = pv;
        match_[static_cast<std::size_t>(pv)] = v;
        v = ppv;
      }
    }
    Matching m;
    for (int v = 0; v < n_; ++v) {
      const int w = match_[static_cast<std::size_t>(v)];
      if (w > v) m.pairs.emplace_back(v, w);
    }
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    while (true) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] < 0) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    while (true) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      const int mv = match_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  int find_path(int root) {
    used_.assign(static_cast<std::size_t>(n_), 0);
    parent_.assign(static_cast<std::size_t>(n_), -1);
    base_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    used_[static_cast<std::size_t>(root)] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        const int mt = match_[static_cast<std::size_t>(to)];
        if (to == root || (mt >= 0 && parent_[static_cast<std::size_t>(mt)] >= 0)) {
          const int cur_base = lca(v, to);
          in_blossom_.assign(static_cast<std::size_t>(n_), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] < 0) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mt < 0) return to;
          used_[static_cast<std::size_t>(mt)] = 1;
          queue.push_back(mt);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

TutteViolator gallai_edmonds_barrier(const Graph& g, int matching_number) {
  VertexSet deficient(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const auto rest = delete_vertices(g, VertexSet::of(g.order(), {v}));
    if (max_matching_general(rest.graph).size() == matching_number) deficient.insert(v);
  }
  VertexSet barrier = neighborhood(g, deficient) - deficient;
  const int odd = odd_components(delete_vertices(g, barrier).graph);
  return {barrier, odd};
}

}  // namespace

BipartiteMatching max_bipartite_matching(const BipartiteGraph& b) {
  return HopcroftKarp(b).run();
}

std::optional<HallViolator> hall_violator(const BipartiteGraph& b, const BipartiteMatching& m) {
  if (static_cast<int>(m.left_mate.size()) != b.left_size() ||
      static_cast<int>(m.right_mate.size()) != b.right_size()) {
    throw Error(ErrorCode::kInvalidArgument, "matching does not fit the bipartite graph");
  }
  for (int l = 0; l < b.left_size(); ++l) {
    const int r = m.left_mate[static_cast<std::size_t>(l)];
    if (r >= 0 && (!b.adjacent(l, r) || m.right_mate[static_cast<std::size_t>(r)] != l)) {
      throw Error(ErrorCode::kInvalidArgument, "inconsistent matching");
    }
  }
  if (m.saturates_left()) return std::nullopt;

  VertexSet reached_left(b.left_size());
  VertexSet reached_right(b.right_size());
  std::vector<int> queue;
  for (int l = 0; l < b.left_size(); ++l) {
    if (m.left_mate[static_cast<std::size_t>(l)] < 0) {
      reached_left.insert(l);
      queue.push_back(l);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int r : b.neighbors_of_left(queue[head])) {
      if (reached_right.contains(r)) continue;
      reached_right.insert(r);
      const int next = m.right_mate[static_cast<std::size_t>(r)];
      if (next < 0) {
        throw Error(ErrorCode::kMatchingNotMaximum,
                    "augmenting path ends at right vertex " + std::to_string(r));
      }
      if (!reached_left.contains(next)) {
        reached_left.insert(next);
        queue.push_back(next);
      }
    }
  }
  return HallViolator{reached_left, reached_right.size()};
}

Matching max_matching_general(const Graph& g) { return Blossom(g).run(); }

std::variant<Matching, TutteViolator> has_perfect_matching(const Graph& g) {
  const int n = g.order();
  Matching m = max_matching_general(g);
  if (2 * m.size() == n) return m;
  if (n <= 16) {
    const std::uint64_t all = detail::all_vertices(n);
    std::optional<TutteViolator> found;
    for_each_subset_by_size(n, 0, [&](std::uint64_t s) {
      const int odd = detail::odd_components_in(g, all & ~s);
      if (odd > std::popcount(s)) {
        found = TutteViolator{VertexSet::from_mask(n, s), odd};
        return false;
      }
      return true;
    });
    if (!found) {
      throw Error(ErrorCode::kContradictionDetected,
                  "no perfect matching but no set S with odd(G-S) > |S|");
    }
    return *found;
  }
  return gallai_edmonds_barrier(g, m.size());
}

namespace detail {

namespace {

bool perfect_by_search(const Graph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  const int v = std::countr_zero(alive);
  const std::uint64_t rest = alive & ~bit(v);
  for (std::uint64_t cand = g.row_mask(v) & rest; cand != 0; cand &= cand - 1) {
    if (perfect_by_search(g, rest & ~bit(std::countr_zero(cand)))) return true;
  }
  return false;
}

}  // namespace

bool has_perfect_matching_in(const Graph& g, std::uint64_t alive) {
  const int count = std::popcount(alive);
  if (count % 2 == 1) return false;
  for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
    if ((g.row_mask(std::countr_zero(rest)) & alive) == 0) return false;
  }
  if (count <= 12) return perfect_by_search(g, alive);
  const auto sub = induced_subgraph(g, VertexSet::from_mask(g.order(), alive));
  return 2 * max_matching_general(sub.graph).size() == count;
}

}  // namespace detail

FactorCriticalResult is_k_factor_critical(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kKOutOfRange,
                "k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + ")");
  }
  if (n > 64) throw Error(ErrorCode::kSizeLimitExceeded, "k-factor-criticality needs n <= 64");

  FactorCriticalResult result;
  result.parity_failure = (n - k) % 2 == 1;
  const std::uint64_t all = detail::all_vertices(n);
  std::optional<std::uint64_t> failing;
  for_each_combination(n, k, [&](std::uint64_t s) {
    if (result.parity_failure || !detail::has_perfect_matching_in(g, all & ~s)) {
      failing = s;
      return false;
    }
    return true;
  });
  if (!failing) {
    result.critical = true;
    return result;
  }
  const VertexSet s = VertexSet::from_mask(n, *failing);
  const InducedGraph rest = delete_vertices(g, s);
  const auto inner = has_perfect_matching(rest.graph);
  const auto& violator = std::get<TutteViolator>(inner);
  VertexSet lifted(n);
  for (int v : violator.set.members()) lifted.insert(rest.original[static_cast<std::size_t>(v)]);
  result.failing_set = s;
  result.inner_violator = TutteViolator{lifted, violator.odd_count};
  return result;
}

}  // namespace sachs
