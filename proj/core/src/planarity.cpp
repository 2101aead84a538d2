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

#include "sachs/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace sachs {

namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;

  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;

  void swap() { std::swap(left, right); }
};

// Left-right planarity test after Brandes' formulation. Directed edges are
// numbered as they are oriented; -1 stands for "no edge".
class LeftRight {
 public:
  explicit LeftRight(const Graph& g)
      : g_(g),
        n_(g.order()),
        edge_id_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kNone),
        height_(static_cast<std::size_t>(n_), kNone),
        parent_edge_(static_cast<std::size_t>(n_), kNone),
        out_(static_cast<std::size_t>(n_)) {}

  // Empty optional when the graph is not planar.
  std::optional<RotationSystem> run() {
    if (n_ > 2 && g_.size() > 3 * n_ - 6) return std::nullopt;
    for (int v = 0; v < n_; ++v) {
      if (height_[idx(v)] == kNone) {
        height_[idx(v)] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    for (int v = 0; v < n_; ++v) sort_by_nesting(v);
    for (int v : roots_) {
      if (!test(v)) return std::nullopt;
    }
    for (std::size_t e = 0; e < src_.size(); ++e) {
      nesting_depth_[e] *= sign(static_cast<int>(e));
    }
    RotationSystem rot;
    rot.order.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      sort_by_nesting(v);
      for (int e : out_[idx(v)]) rot.order[idx(v)].push_back(dst_[idx(e)]);
    }
    left_ref_.assign(static_cast<std::size_t>(n_), kNone);
    right_ref_.assign(static_cast<std::size_t>(n_), kNone);
    for (int v : roots_) embed(v, rot);
    return rot;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  int new_edge(int v, int w) {
    const int e = static_cast<int>(src_.size());
    src_.push_back(v);
    dst_.push_back(w);
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_depth_.push_back(0);
    ref_.push_back(kNone);
    side_.push_back(1);
    stack_bottom_.push_back(0);
    lowpt_edge_.push_back(kNone);
    edge_id_[idx(v * n_ + w)] = e;
    out_[idx(v)].push_back(e);
    return e;
  }

  bool oriented(int v, int w) const {
    return edge_id_[idx(v * n_ + w)] != kNone || edge_id_[idx(w * n_ + v)] != kNone;
  }

  void orient(int v) {
    const int e = parent_edge_[idx(v)];
    for (int w : g_.neighbors(v).members()) {
      if (oriented(v, w)) continue;
      const int vw = new_edge(v, w);
      lowpt_[idx(vw)] = height_[idx(v)];
      lowpt2_[idx(vw)] = height_[idx(v)];
      if (height_[idx(w)] == kNone) {
        parent_edge_[idx(w)] = vw;
        height_[idx(w)] = height_[idx(v)] + 1;
        orient(w);
      } else {
        lowpt_[idx(vw)] = height_[idx(w)];
      }
      nesting_depth_[idx(vw)] = 2 * lowpt_[idx(vw)];
      if (lowpt2_[idx(vw)] < height_[idx(v)]) nesting_depth_[idx(vw)] += 1;
      if (e != kNone) {
        if (lowpt_[idx(vw)] < lowpt_[idx(e)]) {
          lowpt2_[idx(e)] = std::min(lowpt_[idx(e)], lowpt2_[idx(vw)]);
          lowpt_[idx(e)] = lowpt_[idx(vw)];
        } else if (lowpt_[idx(vw)] > lowpt_[idx(e)]) {
          lowpt2_[idx(e)] = std::min(lowpt2_[idx(e)], lowpt_[idx(vw)]);
        } else {
          lowpt2_[idx(e)] = std::min(lowpt2_[idx(e)], lowpt2_[idx(vw)]);
        }
      }
    }
  }

  void sort_by_nesting(int v) {
    auto& list = out_[idx(v)];
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return nesting_depth_[idx(a)] < nesting_depth_[idx(b)];
    });
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[idx(i.high)] > lowpt_[idx(b)];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[idx(p.right.low)];
    if (p.right.empty()) return lowpt_[idx(p.left.low)];
    return std::min(lowpt_[idx(p.left.low)], lowpt_[idx(p.right.low)]);
  }

  void set_ref(int e, int value) {
    if (e != kNone) ref_[idx(e)] = value;
  }

  bool test(int v) {
    const int e = parent_edge_[idx(v)];
    const auto& list = out_[idx(v)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int ei = list[i];
      const int w = dst_[idx(ei)];
      stack_bottom_[idx(ei)] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[idx(w)]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[idx(ei)] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[idx(ei)] < height_[idx(v)]) {
        if (i == 0) {
          if (e != kNone) lowpt_edge_[idx(e)] = lowpt_edge_[idx(ei)];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[idx(q.right.low)] > lowpt_[idx(e)]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[idx(e)]);
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[idx(ei)]);

    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[idx(e)];
    while (!stack_.empty() && lowest(stack_.back()) == height_[idx(u)]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[idx(p.left.low)] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[idx(p.left.high)] == u) p.left.high = ref_[idx(p.left.high)];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[idx(p.left.low)] = p.right.low;
        side_[idx(p.left.low)] = -1;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[idx(p.right.high)] == u) {
        p.right.high = ref_[idx(p.right.high)];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[idx(p.right.low)] = p.left.low;
        side_[idx(p.right.low)] = -1;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[idx(e)] < height_[idx(u)] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[idx(hl)] > lowpt_[idx(hr)])) {
        ref_[idx(e)] = hl;
      } else {
        ref_[idx(e)] = hr;
      }
    }
  }

  int sign(int e) {
    if (ref_[idx(e)] != kNone) {
      side_[idx(e)] *= sign(ref_[idx(e)]);
      ref_[idx(e)] = kNone;
    }
    return side_[idx(e)];
  }

  static void insert_after(std::vector<int>& list, int ref, int value) {
    auto it = std::find(list.begin(), list.end(), ref);
    list.insert(it == list.end() ? it : it + 1, value);
  }

  static void insert_before(std::vector<int>& list, int ref, int value) {
    list.insert(std::find(list.begin(), list.end(), ref), value);
  }

  void embed(int v, RotationSystem& rot) {
    for (int ei : out_[idx(v)]) {
      const int w = dst_[idx(ei)];
      if (ei == parent_edge_[idx(w)]) {
        auto& list = rot.order[idx(w)];
        list.insert(list.begin(), v);
        left_ref_[idx(v)] = w;
        right_ref_[idx(v)] = w;
        embed(w, rot);
      } else if (side_[idx(ei)] == 1) {
        insert_after(rot.order[idx(w)], right_ref_[idx(w)], v);
      } else {
        insert_before(rot.order[idx(w)], left_ref_[idx(w)], v);
        left_ref_[idx(w)] = v;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> edge_id_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<int> roots_;

  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_depth_, ref_, side_, stack_bottom_,
      lowpt_edge_;
  std::vector<ConflictPair> stack_;
  std::vector<int> left_ref_, right_ref_;
};

// Deletes edges one at a time while the rest stays non-planar; what is left
// is an edge-minimal non-planar subgraph, i.e. a Kuratowski subdivision.
KuratowskiWitness extract_kuratowski(const Graph& g) {
  Graph h = g;
  for (const EdgeRef& e : g.edges()) {
    h.remove_edge(e.u, e.v);
    if (LeftRight(h).run().has_value()) h.add_edge(e.u, e.v);
  }

  KuratowskiWitness w;
  std::vector<char> is_branch(static_cast<std::size_t>(h.order()), 0);
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) >= 3) {
      w.branch_vertices.push_back(v);
      is_branch[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (w.branch_vertices.size() == 5) {
    w.kind = KuratowskiKind::kK5;
  } else if (w.branch_vertices.size() == 6) {
    w.kind = KuratowskiKind::kK33;
  } else {
    throw Error(ErrorCode::kContradictionDetected,
                "minimal non-planar subgraph has " + std::to_string(w.branch_vertices.size()) +
                    " branch vertices");
  }

  for (int b : w.branch_vertices) {
    for (int first : h.neighbors(b).members()) {
      std::vector<int> path{b};
      int prev = b;
      int cur = first;
      while (!is_branch[static_cast<std::size_t>(cur)]) {
        path.push_back(cur);
        const auto next = h.neighbors(cur).members();
        const int step = next[0] == prev ? next[1] : next[0];
        prev = cur;
        cur = step;
      }
      path.push_back(cur);
      if (b < cur) w.paths.push_back(std::move(path));
    }
  }
  std::sort(w.paths.begin(), w.paths.end());

  if (w.kind == KuratowskiKind::kK33) {
    // Two-colour the branch vertices through the paths.
    std::map<int, int> colour;
    colour[w.branch_vertices[0]] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : w.paths) {
        const int a = p.front();
        const int z = p.back();
        if (colour.count(a) && !colour.count(z)) {
          colour[z] = 1 - colour[a];
          changed = true;
        } else if (colour.count(z) && !colour.count(a)) {
          colour[a] = 1 - colour[z];
          changed = true;
        }
      }
    }
    std::vector<int> side0, side1;
    for (int b : w.branch_vertices) (colour[b] == 0 ? side0 : side1).push_back(b);
    w.branch_vertices = side0;
    w.branch_vertices.insert(w.branch_vertices.end(), side1.begin(), side1.end());
  }
  return w;
}

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
  if (auto rot = LeftRight(g).run()) return {std::move(*rot)};
  return {extract_kuratowski(g)};
}

bool test_planarity(const Graph& g) { return LeftRight(g).run().has_value(); }

EmbeddingReport trace_embedding(const Graph& g, const RotationSystem& rotation) {
  const int n = g.order();
  if (static_cast<int>(rotation.order.size()) != n) {
    throw Error(ErrorCode::kMalformedRotation, "rotation has " + std::to_string(rotation.order.size()) +
                                                   " vertices, graph has " + std::to_string(n));
  }
  // position[v][w] = index of w in v's rotation
  std::vector<std::vector<int>> position(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int v = 0; v < n; ++v) {
    const auto& ord = rotation.order[static_cast<std::size_t>(v)];
    if (static_cast<int>(ord.size()) != g.degree(v)) {
      throw Error(ErrorCode::kMalformedRotation, "rotation at " + std::to_string(v) + " has wrong length");
    }
    for (std::size_t i = 0; i < ord.size(); ++i) {
      const int w = ord[i];
      if (w < 0 || w >= n || !g.adjacent(v, w) || position[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] >= 0) {
        throw Error(ErrorCode::kMalformedRotation,
                    "rotation at " + std::to_string(v) + " is not a permutation of its neighbors");
      }
      position[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = static_cast<int>(i);
    }
  }

  std::vector<std::vector<char>> used(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> faces_at(static_cast<std::size_t>(n), 0);  // faces charged to a start vertex
  for (int u = 0; u < n; ++u) {
    for (int v : rotation.order[static_cast<std::size_t>(u)]) {
      if (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      ++faces_at[static_cast<std::size_t>(u)];
      int a = u;
      int b = v;
      while (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        const auto& ord = rotation.order[static_cast<std::size_t>(b)];
        const int next = ord[static_cast<std::size_t>(
            (position[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] + 1) %
            static_cast<int>(ord.size()))];
        a = b;
        b = next;
      }
    }
  }

  EmbeddingReport report;
  report.planar = true;
  for (const auto& comp : components(g)) {
    int edges2 = 0;
    int faces = 0;
    for (int v : comp) {
      edges2 += g.degree(v);
      faces += faces_at[static_cast<std::size_t>(v)];
    }
    if (edges2 == 0) faces = 1;
    const int euler = static_cast<int>(comp.size()) - edges2 / 2 + faces;
    if (euler != 2) report.planar = false;
    report.faces += faces;
    ++report.components;
  }
  return report;
}

bool verify_embedding(const Graph& g, const RotationSystem& rotation) {
  return trace_embedding(g, rotation).planar;
}

KuratowskiCheck check_kuratowski(const Graph& g, const KuratowskiWitness& w) {
  auto fail = [](std::string why) { return KuratowskiCheck{false, std::move(why)}; };
  const int n = g.order();
  const std::size_t want_branch = w.kind == KuratowskiKind::kK5 ? 5 : 6;
  const std::size_t want_paths = w.kind == KuratowskiKind::kK5 ? 10 : 9;
  if (w.branch_vertices.size() != want_branch) return fail("wrong number of branch vertices");
  if (w.paths.size() != want_paths) return fail("wrong number of paths");

  std::vector<int> role(static_cast<std::size_t>(n), -1);  // branch index, or -2 for interior
  for (std::size_t i = 0; i < w.branch_vertices.size(); ++i) {
    const int b = w.branch_vertices[i];
    if (b < 0 || b >= n) return fail("branch vertex out of range");
    if (role[static_cast<std::size_t>(b)] != -1) return fail("repeated branch vertex");
    role[static_cast<std::size_t>(b)] = static_cast<int>(i);
  }

  std::set<std::pair<int, int>> realized;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return fail("path shorter than one edge");
    for (int v : p) {
      if (v < 0 || v >= n) return fail("path vertex out of range");
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.adjacent(p[i], p[i + 1])) {
        return fail("missing edge " + std::to_string(p[i]) + "-" + std::to_string(p[i + 1]));
      }
    }
    const int a = role[static_cast<std::size_t>(p.front())];
    const int z = role[static_cast<std::size_t>(p.back())];
    if (a < 0 || z < 0) return fail("path endpoint is not a branch vertex");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      int& r = role[static_cast<std::size_t>(p[i])];
      if (r >= 0) return fail("path interior meets a branch vertex");
      if (r == -2) return fail("path interiors intersect");
      r = -2;
    }
    const auto key = std::minmax(a, z);
    if (a == z) return fail("path is a loop");
    if (w.kind == KuratowskiKind::kK33 && (key.first < 3) == (key.second < 3)) {
      return fail("path joins two branch vertices on the same side");
    }
    if (!realized.insert(key).second) return fail("branch pair realized twice");
  }
  return {true, {}};
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w) { return check_kuratowski(g, w).ok; }

KPlanarityResult is_k_planar(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kKOutOfRange, "k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + ")");
  }
  if (n > 64) throw Error(ErrorCode::kSizeLimitExceeded, "k-planarity needs n <= 64");
  double subsets = 1;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  if (subsets > 1e7) throw Error(ErrorCode::kSizeLimitExceeded, "too many deletion sets");

  KPlanarityResult result;
  result.k_planar = true;
  for_each_combination(n, k, [&](std::uint64_t s) {
    const InducedGraph rest = delete_vertices(g, VertexSet::from_mask(n, s));
    if (test_planarity(rest.graph)) return true;
    KuratowskiWitness w = is_planar(rest.graph).witness();
    for (int& v : w.branch_vertices) v = rest.original[static_cast<std::size_t>(v)];
    for (auto& p : w.paths) {
      for (int& v : p) v = rest.original[static_cast<std::size_t>(v)];
    }
    result.k_planar = false;
    result.failing_set = VertexSet::from_mask(n, s);
    result.witness = std::move(w);
    return false;
  });
  return result;
}

bool every_deletion_planar(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kKOutOfRange, "k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  if (k == n) return true;
  return is_k_planar(g, k).k_planar;
}

std::string_view hypothesis_name(DegreeLemmaHypothesis h) {
  switch (h) {
    case DegreeLemmaHypothesis::kPartition:
      return "partition";
    case DegreeLemmaHypothesis::kNotBipartite:
      return "non-bipartite";
    case DegreeLemmaHypothesis::kNonPlanar:
      return "non-planar";
    case DegreeLemmaHypothesis::kBalance:
      return "balance";
    case DegreeLemmaHypothesis::kTooFewVertices:
      return "too-few-vertices";
    case DegreeLemmaHypothesis::kExtraEdge:
      return "extra-edge";
  }
  return "unknown";
}

HypothesisViolated::HypothesisViolated(DegreeLemmaHypothesis which)
    : Error(ErrorCode::kHypothesisViolated, std::string(hypothesis_name(which))), which_(which) {}

DegreeLemmaResult verify_degree_lemma(const Graph& h, const VertexSet& a, const VertexSet& b,
                                      DegreeLemmaVariant variant, std::optional<EdgeRef> extra_edge) {
  const int n = h.order();
  if (a.universe() != n || b.universe() != n || a.intersects(b) || a.size() + b.size() != n) {
    throw HypothesisViolated(DegreeLemmaHypothesis::kPartition);
  }
  if (n < 3) throw HypothesisViolated(DegreeLemmaHypothesis::kTooFewVertices);

  const bool wants_edge =
      variant == DegreeLemmaVariant::kEdgeInLargerSide || variant == DegreeLemmaVariant::kEdgeInNearBalanced;
  if (wants_edge != extra_edge.has_value()) throw HypothesisViolated(DegreeLemmaHypothesis::kExtraEdge);
  Graph scope = h;
  if (extra_edge) {
    const EdgeRef e = *extra_edge;
    if (e.u < 0 || e.v >= n || !h.adjacent(e.u, e.v) || !a.contains(e.u) || !a.contains(e.v)) {
      throw HypothesisViolated(DegreeLemmaHypothesis::kExtraEdge);
    }
    scope.remove_edge(e.u, e.v);
  }

  const int sa = a.size();
  const int sb = b.size();
  bool balanced = false;
  switch (variant) {
    case DegreeLemmaVariant::kBalanced:
      balanced = sa == sb;
      break;
    case DegreeLemmaVariant::kEdgeInLargerSide:
      balanced = sb + 1 <= sa && sa <= sb + 2;
      break;
    case DegreeLemmaVariant::kSmallerSide:
      balanced = sa == sb - 1;
      break;
    case DegreeLemmaVariant::kEdgeInNearBalanced:
      balanced = sb <= sa && sa <= sb + 1;
      break;
  }
  if (!balanced) throw HypothesisViolated(DegreeLemmaHypothesis::kBalance);

  for (const EdgeRef& e : scope.edges()) {
    if (a.contains(e.u) == a.contains(e.v)) throw HypothesisViolated(DegreeLemmaHypothesis::kNotBipartite);
  }
  if (!test_planarity(scope)) throw HypothesisViolated(DegreeLemmaHypothesis::kNonPlanar);

  DegreeLemmaResult result;
  result.edges = scope.size();
  result.bound = 2 * n - 4;
  result.edge_bound_holds = result.edges <= result.bound;
  result.low_degree = n;
  int best = -1;
  for (int v : a.members()) {
    if (h.degree(v) < result.low_degree) {
      result.low_degree = h.degree(v);
      best = v;
    }
  }
  if (best >= 0 && result.low_degree <= 3) result.low_vertex = best;
  return result;
}

}  // namespace sachs
