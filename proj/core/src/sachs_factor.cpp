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

#include "sachs/sachs_factor.hpp"

#include <array>
#include <bit>

#include "sachs/error.hpp"

namespace sachs {

BipartiteGraph double_cover(const Graph& g) {
  BipartiteGraph b(g.order(), g.order());
  for (const EdgeRef& e : g.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(e.v, e.u);
  }
  return b;
}

OneTwoFactor factor_from_permutation(const Graph& g, const BipartiteMatching& m) {
  const int n = g.order();
  if (static_cast<int>(m.left_mate.size()) != n || static_cast<int>(m.right_mate.size()) != n ||
      !m.is_perfect()) {
    throw Error(ErrorCode::kNotPerfect, "matching does not saturate both sides");
  }
  for (int v = 0; v < n; ++v) {
    const int w = m.left_mate[static_cast<std::size_t>(v)];
    if (w == v) throw Error(ErrorCode::kFixedPoint, "vertex " + std::to_string(v) + " maps to itself");
    if (!g.adjacent(v, w)) {
      throw Error(ErrorCode::kNotPerfect,
                  "pair " + std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
    }
  }
  OneTwoFactor f;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    FactorComponent comp;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = m.left_mate[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      comp.vertices.push_back(v);
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

std::variant<OneTwoFactor, HallViolator> has_one_two_factor(const Graph& g) {
  const BipartiteGraph cover = double_cover(g);
  const BipartiteMatching m = max_bipartite_matching(cover);
  if (m.is_perfect()) return factor_from_permutation(g, m);
  return *hall_violator(cover, m);
}

std::optional<DeficiencyCertificate> deficiency_violator_bruteforce(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kKOutOfRange,
                "k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + ")");
  }
  if (n > 16) throw Error(ErrorCode::kSizeLimitExceeded, "subset scan needs n <= 16");
  const std::uint64_t all = detail::all_vertices(n);
  std::optional<DeficiencyCertificate> found;
  for_each_subset_by_size(n, k, [&](std::uint64_t s) {
    const int isolated = detail::isolated_in(g, all & ~s);
    if (isolated > std::popcount(s) - k) {
      found = DeficiencyCertificate{VertexSet::from_mask(n, s), isolated, k};
      return false;
    }
    return true;
  });
  return found;
}

DeficiencyCertificate deficiency_from_hall(const Graph& g, const HallViolator& violator) {
  if (violator.set.universe() != g.order()) {
    throw Error(ErrorCode::kInvalidViolator, "violator universe differs from graph order");
  }
  const VertexSet nbhd = neighborhood(g, violator.set);
  if (violator.set.size() <= nbhd.size()) {
    throw Error(ErrorCode::kInvalidViolator,
                "|S| = " + std::to_string(violator.set.size()) +
                    " does not exceed |N(S)| = " + std::to_string(nbhd.size()));
  }
  DeficiencyCertificate cert;
  cert.set = nbhd - violator.set;
  cert.isolated = isolated_count(delete_vertices(g, cert.set).graph);
  cert.k = 0;
  if (!verify_deficiency(g, cert)) {
    throw Error(ErrorCode::kInvalidViolator, "derived certificate failed verification");
  }
  return cert;
}

bool validate_factor(const Graph& g, const OneTwoFactor& f, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const auto& vs = f.components[c].vertices;
    if (vs.size() < 2) return fail("component " + std::to_string(c) + " has fewer than two vertices");
    for (int v : vs) {
      if (v < 0 || v >= g.order()) return fail("vertex " + std::to_string(v) + " out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0) {
        return fail("vertex " + std::to_string(v) + " covered twice");
      }
      owner[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    const std::size_t links = vs.size() == 2 ? 1 : vs.size();
    for (std::size_t i = 0; i < links; ++i) {
      const int a = vs[i];
      const int b = vs[(i + 1) % vs.size()];
      if (!g.adjacent(a, b)) {
        return fail("missing edge " + std::to_string(a) + "-" + std::to_string(b));
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0) return fail("vertex " + std::to_string(v) + " uncovered");
  }
  return true;
}

bool verify_deficiency(const Graph& g, const DeficiencyCertificate& c) {
  if (c.set.universe() != g.order() || c.k < 0) return false;
  const int s = c.set.size();
  if (s < c.k) return false;
  const int isolated = isolated_count(delete_vertices(g, c.set).graph);
  return isolated == c.isolated && isolated > s - c.k;
}

namespace detail {

namespace {

bool augment(const Graph& g, std::uint64_t alive, int left, std::uint64_t& visited,
             std::array<int, 64>& right_mate) {
  for (std::uint64_t cand = g.row_mask(left) & alive & ~visited; cand != 0;
       cand = g.row_mask(left) & alive & ~visited) {
    const int r = std::countr_zero(cand);
    visited |= bit(r);
    const int owner = right_mate[static_cast<std::size_t>(r)];
    if (owner < 0 || augment(g, alive, owner, visited, right_mate)) {
      right_mate[static_cast<std::size_t>(r)] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_one_two_factor_in(const Graph& g, std::uint64_t alive) {
  for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
    if ((g.row_mask(std::countr_zero(rest)) & alive) == 0) return false;
  }
  std::array<int, 64> right_mate;
  right_mate.fill(-1);
  for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
    std::uint64_t visited = 0;
    if (!augment(g, alive, std::countr_zero(rest), visited, right_mate)) return false;
  }
  return true;
}

}  // namespace detail

TwoBicriticalResult is_two_bicritical(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorCode::kKOutOfRange, "two-bicriticality needs n >= 2");
  if (n > 16) throw Error(ErrorCode::kSizeLimitExceeded, "independent-set scan needs n <= 16");

  TwoBicriticalResult result;
  for_each_subset_by_size(n, 1, [&](std::uint64_t s) {
    if ((detail::neighborhood_mask(g, s) & s) != 0) return true;  // not independent
    const int nb = std::popcount(detail::neighborhood_mask(g, s));
    if (std::popcount(s) >= nb) {
      result.offending_set = VertexSet::from_mask(n, s);
      result.offending_neighborhood = nb;
      return false;
    }
    return true;
  });

  const std::uint64_t all = detail::all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (!detail::has_one_two_factor_in(g, all & ~detail::bit(v))) {
      result.failing_vertex = v;
      break;
    }
  }
  if (result.offending_set.has_value() != result.failing_vertex.has_value()) {
    throw Error(ErrorCode::kContradictionDetected,
                "independent-set condition and vertex-deletion definition disagree");
  }
  result.two_bicritical = !result.offending_set.has_value();
  return result;
}

}  // namespace sachs
