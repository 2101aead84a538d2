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

#include "doctest.h"
#include "oracles.hpp"
#include "sachs/critical_structure.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/error.hpp"
#include "sachs/harness.hpp"
#include "sachs/sachs_factor.hpp"

using namespace sachs;

namespace {

BipartiteMatching permutation_matching(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  BipartiteMatching m{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (int v = 0; v < n; ++v) {
    m.left_mate[v] = sigma[v];
    m.right_mate[sigma[v]] = v;
  }
  return m;
}

}  // namespace

TEST_CASE("double cover") {
  const auto c4 = double_cover(cycle_graph(4));
  CHECK(c4.left_size() == 4);
  CHECK(c4.right_size() == 4);
  CHECK(c4.edge_count() == 8);
  for (int v = 0; v < 4; ++v) {
    CHECK(c4.neighbors_of_left(v).size() == 2);
    CHECK(c4.right_degree(v) == 2);
  }
  const auto claw = double_cover(star_graph(3));
  CHECK(claw.right_degree(0) == 3);
  CHECK(claw.right_degree(1) == 1);
  CHECK(double_cover(empty_graph(3)).edge_count() == 0);
  const Graph p = petersen_graph();
  const auto pc = double_cover(p);
  const auto s = VertexSet::of(10, {0, 2, 7});
  CHECK(pc.neighborhood(s) == neighborhood(p, s));
}

TEST_CASE("factor existence") {
  const auto c5 = has_one_two_factor(cycle_graph(5));
  REQUIRE(std::holds_alternative<OneTwoFactor>(c5));
  const auto& f = std::get<OneTwoFactor>(c5);
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].vertices.size() == 5);
  CHECK(validate_factor(cycle_graph(5), f));

  const auto p3 = has_one_two_factor(path_graph(3));
  REQUIRE(std::holds_alternative<HallViolator>(p3));
  CHECK(std::get<HallViolator>(p3).set == VertexSet::of(3, {0, 2}));
  CHECK(std::get<HallViolator>(p3).neighborhood_size == 1);

  const auto k4 = has_one_two_factor(complete_graph(4));
  REQUIRE(std::holds_alternative<OneTwoFactor>(k4));
  CHECK(validate_factor(complete_graph(4), std::get<OneTwoFactor>(k4)));
}

TEST_CASE("figure-3 graph factor") {
  const Fixture& fig = FixtureRegistry::instance().get("figure3");
  const auto r = has_one_two_factor(fig.graph);
  REQUIRE(std::holds_alternative<OneTwoFactor>(r));
  CHECK(validate_factor(fig.graph, std::get<OneTwoFactor>(r)));
  // The drawn factor: triangle a c d, edges b f and g h.
  const OneTwoFactor drawn{{FactorComponent{{0, 2, 3}}, FactorComponent{{1, 4}}, FactorComponent{{5, 6}}}};
  CHECK(validate_factor(fig.graph, drawn));
}

TEST_CASE("factors from permutations") {
  const auto k4 = factor_from_permutation(complete_graph(4), permutation_matching({1, 0, 3, 2}));
  CHECK(k4 == OneTwoFactor{{FactorComponent{{0, 1}}, FactorComponent{{2, 3}}}});
  const auto c5 = factor_from_permutation(cycle_graph(5), permutation_matching({1, 2, 3, 4, 0}));
  CHECK(c5 == OneTwoFactor{{FactorComponent{{0, 1, 2, 3, 4}}}});
  const auto k5 = factor_from_permutation(complete_graph(5), permutation_matching({1, 2, 0, 4, 3}));
  CHECK(k5 == OneTwoFactor{{FactorComponent{{0, 1, 2}}, FactorComponent{{3, 4}}}});

  BipartiteMatching partial{{1, 0, -1}, {1, 0, -1}};
  try {
    factor_from_permutation(complete_graph(3), partial);
    FAIL("expected NotPerfect");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPerfect);
  }
}

TEST_CASE("factor validator rejects malformed factors") {
  const Graph c5 = cycle_graph(5);
  std::string why;
  CHECK_FALSE(validate_factor(c5, OneTwoFactor{{FactorComponent{{0, 1}}, FactorComponent{{2, 3}}}}, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(validate_factor(c5, OneTwoFactor{{FactorComponent{{0, 2, 4, 1, 3}}}}));
  CHECK_FALSE(validate_factor(c5, OneTwoFactor{{FactorComponent{{0, 1, 2, 3, 4}}, FactorComponent{{0, 1}}}}));
  CHECK_FALSE(validate_factor(c5, OneTwoFactor{{FactorComponent{{0}}, FactorComponent{{1, 2, 3, 4}}}}));
}

TEST_CASE("brute-force deficiency") {
  const auto claw = deficiency_violator_bruteforce(star_graph(3), 0);
  REQUIRE(claw.has_value());
  CHECK(claw->set == VertexSet::of(4, {0}));
  CHECK(claw->isolated == 3);
  CHECK_FALSE(deficiency_violator_bruteforce(cycle_graph(5), 0).has_value());

  const Fixture& fig = FixtureRegistry::instance().get("figure3");
  const Graph broken = delete_edge(fig.graph, *fig.distinguished_edge);
  const auto cert = deficiency_violator_bruteforce(broken, 0);
  REQUIRE(cert.has_value());
  CHECK(cert->set == VertexSet::of(7, {1, 3, 5}));  // b, d, g
  CHECK(cert->isolated == 4);
  CHECK(verify_deficiency(broken, *cert));

  CHECK_THROWS_AS(deficiency_violator_bruteforce(cycle_graph(5), 5), Error);
  CHECK_THROWS_AS(deficiency_violator_bruteforce(empty_graph(17), 0), Error);
}

TEST_CASE("deficiency from hall violators") {
  const auto claw = deficiency_from_hall(star_graph(3), HallViolator{VertexSet::of(4, {1, 2, 3}), 1});
  CHECK(claw.set == VertexSet::of(4, {0}));
  CHECK(claw.isolated == 3);
  const auto p3 = deficiency_from_hall(path_graph(3), HallViolator{VertexSet::of(3, {0, 2}), 1});
  CHECK(p3.set == VertexSet::of(3, {1}));
  CHECK(p3.isolated == 2);
  const auto p5 = deficiency_from_hall(path_graph(5), HallViolator{VertexSet::of(5, {0, 2, 4}), 2});
  CHECK(p5.set == VertexSet::of(5, {1, 3}));
  CHECK(p5.isolated == 3);
  CHECK_THROWS_AS(deficiency_from_hall(cycle_graph(4), HallViolator{VertexSet::of(4, {0, 2}), 2}), Error);
}

TEST_CASE("two-bicritical graphs") {
  CHECK(is_two_bicritical(cycle_graph(5)).two_bicritical);
  CHECK(is_two_bicritical(complete_graph(4)).two_bicritical);
  const auto c4 = is_two_bicritical(cycle_graph(4));
  CHECK_FALSE(c4.two_bicritical);
  REQUIRE(c4.offending_set.has_value());
  CHECK(c4.offending_set->size() == 2);
  CHECK(is_independent(cycle_graph(4), *c4.offending_set));
  CHECK(c4.offending_neighborhood == 2);
  CHECK(c4.failing_vertex.has_value());
}

TEST_CASE("factor, deficiency and hall conditions agree on every graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto a = oracle::matrix_of(g);
      const auto r = has_one_two_factor(g);
      const bool factor = std::holds_alternative<OneTwoFactor>(r);
      CHECK(factor == oracle::factor_by_permutation(a, oracle::all(n)));
      CHECK(factor == !deficiency_violator_bruteforce(g, 0).has_value());
      CHECK(factor == oracle::factor_by_hall(a));
      if (factor) {
        CHECK(validate_factor(g, std::get<OneTwoFactor>(r)));
      } else {
        const auto cert = deficiency_from_hall(g, std::get<HallViolator>(r));
        CHECK(oracle::isolated(a, oracle::all(n) & ~static_cast<std::uint32_t>(cert.set.mask())) > cert.set.size());
        // Removing edges never creates a factor.
        for (const EdgeRef& e : g.edges())
          CHECK(std::holds_alternative<HallViolator>(has_one_two_factor(delete_edge(g, e))));
      }
      if (n >= 2) CHECK(is_two_bicritical(g).two_bicritical == oracle::sachs_critical(a, 1));
    }
}

TEST_CASE("critical difference") {
  CHECK(difference(cycle_graph(5), VertexSet(5)) == 0);
  CHECK(difference(star_graph(3), VertexSet::of(4, {1, 2, 3})) == 2);
  CHECK(difference(cycle_graph(5), VertexSet::of(5, {0, 2})) == -1);

  for (int n = 2; n <= 7; ++n) {
    const auto p = critical_difference(complete_graph(n));
    CHECK(p.d == 0);
    CHECK(p.id == 0);
    CHECK(p.critical_set.empty());
  }
  const auto claw = critical_difference(star_graph(3));
  CHECK(claw.d == 2);
  CHECK(claw.id == 2);
  CHECK(claw.critical_independent_set == VertexSet::of(4, {1, 2, 3}));
  const auto c5 = critical_difference(cycle_graph(5));
  CHECK(c5.d == 0);
  CHECK(c5.critical_set.empty());

  CHECK(fast_critical_difference(complete_graph(4)) == 0);
  CHECK(fast_critical_difference(star_graph(3)) == 2);
  CHECK(fast_critical_difference(empty_graph(3)) == 3);
  CHECK(critical_difference(empty_graph(3)).critical_set == VertexSet::full(3));
  CHECK_THROWS_AS(critical_difference(empty_graph(17)), Error);
}

TEST_CASE("critical difference agrees with brute force on every graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto a = oracle::matrix_of(g);
      const auto p = critical_difference(g);
      CHECK(p.d == oracle::max_difference(a, false));
      CHECK(p.id == oracle::max_difference(a, true));
      CHECK(p.d == fast_critical_difference(g));
      CHECK(difference(g, p.critical_set) == p.d);
      CHECK(difference(g, p.critical_independent_set) == p.id);
      CHECK(is_independent(g, p.critical_independent_set));
      CHECK((p.d == 0) == std::holds_alternative<OneTwoFactor>(has_one_two_factor(g)));
    }
}
