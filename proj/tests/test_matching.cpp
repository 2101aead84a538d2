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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/error.hpp"
#include "sachs/matching.hpp"
#include "sachs/sachs_factor.hpp"

using namespace sachs;

namespace {

BipartiteGraph full_bipartite(int l, int r) {
  BipartiteGraph b(l, r);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j) b.add_edge(i, j);
  return b;
}

}  // namespace

TEST_CASE("bipartite matching sizes") {
  CHECK(max_bipartite_matching(full_bipartite(3, 3)).size() == 3);
  CHECK(max_bipartite_matching(full_bipartite(1, 3)).size() == 1);
  CHECK(max_bipartite_matching(BipartiteGraph(4, 2)).size() == 0);
  const auto m = max_bipartite_matching(full_bipartite(3, 3));
  CHECK(m.is_perfect());
}

TEST_CASE("hall violators") {
  const BipartiteGraph claw = double_cover(star_graph(3));
  const auto violator = hall_violator(claw, max_bipartite_matching(claw));
  REQUIRE(violator.has_value());
  CHECK(violator->set == VertexSet::of(4, {1, 2, 3}));
  CHECK(violator->neighborhood_size == 1);

  const BipartiteGraph c4 = double_cover(cycle_graph(4));
  CHECK_FALSE(hall_violator(c4, max_bipartite_matching(c4)).has_value());

  const BipartiteGraph p3 = double_cover(path_graph(3));
  const auto end_points = hall_violator(p3, max_bipartite_matching(p3));
  REQUIRE(end_points.has_value());
  CHECK(end_points->set == VertexSet::of(3, {0, 2}));
  CHECK(end_points->neighborhood_size == 1);

  // An empty matching of a graph that has edges is not maximum.
  BipartiteMatching none{{-1, -1, -1}, {-1, -1, -1}};
  CHECK_THROWS_AS(hall_violator(p3, none), Error);
}

TEST_CASE("hall violator exists exactly when the left side is unsaturated") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> side(1, 5);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 400; ++trial) {
    const int l = side(rng);
    const int r = side(rng);
    BipartiteGraph b(l, r);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < r; ++j)
        if (coin(rng)) b.add_edge(i, j);
    const auto m = max_bipartite_matching(b);
    const auto v = hall_violator(b, m);
    CHECK(v.has_value() == !m.saturates_left());
    if (v) {
      CHECK(v->set.size() > v->neighborhood_size);
      CHECK(b.neighborhood(v->set).size() == v->neighborhood_size);
    }
  }
}

TEST_CASE("general matching") {
  CHECK(max_matching_general(complete_graph(4)).size() == 2);
  CHECK(max_matching_general(cycle_graph(5)).size() == 2);
  const Matching petersen = max_matching_general(petersen_graph());
  CHECK(petersen.size() == 5);
  CHECK(is_matching_of(petersen_graph(), petersen));
}

TEST_CASE("general matching agrees with brute force on every graph up to 7 vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Matching m = max_matching_general(g);
      CHECK(is_matching_of(g, m));
      CHECK(m.size() == oracle::matching_number(oracle::matrix_of(g), oracle::all(n)));
    }
}

TEST_CASE("perfect matchings and tutte violators") {
  const auto k4 = has_perfect_matching(complete_graph(4));
  REQUIRE(std::holds_alternative<Matching>(k4));
  CHECK(std::get<Matching>(k4).size() == 2);

  const auto claw = has_perfect_matching(star_graph(3));
  REQUIRE(std::holds_alternative<TutteViolator>(claw));
  CHECK(std::get<TutteViolator>(claw).set == VertexSet::of(4, {0}));
  CHECK(std::get<TutteViolator>(claw).odd_count == 3);

  const auto odd = has_perfect_matching(cycle_graph(7));
  REQUIRE(std::holds_alternative<TutteViolator>(odd));
  CHECK(std::get<TutteViolator>(odd).set.empty());
}

TEST_CASE("tutte violators hold as stated up to 10 vertices") {
  auto check = [](const Graph& g) {
    const auto r = has_perfect_matching(g);
    if (const auto* m = std::get_if<Matching>(&r)) {
      CHECK(is_matching_of(g, *m));
      CHECK(2 * m->size() == g.order());
    } else {
      const auto& t = std::get<TutteViolator>(r);
      const int odd = odd_components(delete_vertices(g, t.set).graph);
      CHECK(odd == t.odd_count);
      CHECK(odd > t.set.size());
    }
  };
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) check(g);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) check(oracle::random_graph(rng, 8 + trial % 3, 0.3));
  // Past the brute-force range the barrier fallback still certifies.
  std::mt19937_64 big(5);
  for (int trial = 0; trial < 20; ++trial) check(oracle::random_graph(big, 20, 0.12));
}

TEST_CASE("k-factor-criticality") {
  CHECK(is_k_factor_critical(cycle_graph(5), 1).critical);
  CHECK(is_k_factor_critical(complete_graph(4), 2).critical);
  const auto claw = is_k_factor_critical(star_graph(3), 0);
  CHECK_FALSE(claw.critical);
  REQUIRE(claw.inner_violator.has_value());
  CHECK(claw.inner_violator->set == VertexSet::of(4, {0}));
  const auto parity = is_k_factor_critical(complete_graph(5), 2);
  CHECK_FALSE(parity.critical);
  CHECK(parity.parity_failure);
  CHECK_THROWS_AS(is_k_factor_critical(complete_graph(3), 3), Error);
}

TEST_CASE("k-factor-criticality matches the odd-component condition") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto a = oracle::matrix_of(g);
      for (int k = (n % 2); k < n; k += 2) {
        const bool fast = is_k_factor_critical(g, k).critical;
        CHECK(fast == oracle::factor_critical(a, k));
        CHECK(fast == oracle::tutte_condition(a, k));
      }
    }
}
