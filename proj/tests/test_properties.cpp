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

// Randomized checks over a fixed corpus of 500 graphs on at most 14 vertices.

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sachs/critical_structure.hpp"
#include "sachs/criticality.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/graph_io.hpp"
#include "sachs/matching.hpp"
#include "sachs/planarity.hpp"
#include "sachs/sachs_factor.hpp"

using namespace sachs;

namespace {

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = oracle::random_corpus(500, 14, 0x5eed2026);
  return graphs;
}

}  // namespace

TEST_CASE("graph6 round trip and independent encoding") {
  for (const Graph& g : corpus()) {
    const std::string text = emit_graph6(g);
    CHECK(text == oracle::graph6(oracle::matrix_of(g)));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("independent sets have disjoint neighbourhoods") {
  std::mt19937_64 rng(3);
  for (const Graph& g : corpus()) {
    const int n = g.order();
    std::uniform_int_distribution<std::uint64_t> pick(0, detail::all_vertices(n));
    for (int t = 0; t < 8; ++t) {
      const VertexSet s = VertexSet::from_mask(n, pick(rng));
      if (is_independent(g, s)) CHECK_FALSE(neighborhood(g, s).intersects(s));
    }
  }
}

TEST_CASE("factor, isolated-vertex and hall conditions coincide") {
  for (const Graph& g : corpus()) {
    const auto a = oracle::matrix_of(g);
    const int n = g.order();
    const auto r = has_one_two_factor(g);
    const bool factor = std::holds_alternative<OneTwoFactor>(r);
    CHECK(factor == oracle::factor_by_isolated_condition(a, oracle::all(n)));
    CHECK(factor == oracle::factor_by_hall(a));
    if (factor) {
      CHECK(validate_factor(g, std::get<OneTwoFactor>(r)));
    } else {
      const auto cert = deficiency_from_hall(g, std::get<HallViolator>(r));
      CHECK(verify_deficiency(g, cert));
      const auto brute = deficiency_violator_bruteforce(g, 0);
      REQUIRE(brute.has_value());
      CHECK(brute->set.size() <= cert.set.size());
    }
  }
}

TEST_CASE("critical difference equals its independent form and the matching shortcut") {
  for (const Graph& g : corpus()) {
    const auto p = critical_difference(g);
    CHECK(p.d == p.id);
    CHECK(p.d >= 0);
    CHECK(p.d == fast_critical_difference(g));
    CHECK(p.d == oracle::max_difference(oracle::matrix_of(g), false));
    CHECK((p.d == 0) == std::holds_alternative<OneTwoFactor>(has_one_two_factor(g)));
  }
}

TEST_CASE("two-bicriticality by both routes") {
  for (const Graph& g : corpus()) {
    if (g.order() < 2) continue;
    const auto r = is_two_bicritical(g);
    CHECK(r.two_bicritical ==
          oracle::factor_by_isolated_condition(oracle::matrix_of(g), oracle::all(g.order()), 1));
  }
}

TEST_CASE("matchings are maximum and violators are sound") {
  for (const Graph& g : corpus()) {
    const Matching m = max_matching_general(g);
    CHECK(is_matching_of(g, m));
    if (g.order() <= 12) CHECK(m.size() == oracle::matching_number(oracle::matrix_of(g), oracle::all(g.order())));
    const auto pm = has_perfect_matching(g);
    if (const auto* t = std::get_if<TutteViolator>(&pm)) {
      CHECK(odd_components(delete_vertices(g, t->set).graph) > t->set.size());
      CHECK(2 * m.size() < g.order());
    } else {
      CHECK(2 * m.size() == g.order());
    }
  }
}

TEST_CASE("planarity certificates") {
  for (const Graph& g : corpus()) {
    const auto v = is_planar(g);
    if (v.planar()) {
      CHECK(verify_embedding(g, v.embedding()));
      if (g.order() >= 3) CHECK(g.size() <= 3 * g.order() - 6);
    } else {
      const auto check = check_kuratowski(g, v.witness());
      INFO(check.reason);
      CHECK(check.ok);
    }
  }
}

TEST_CASE("sachs criticality at low levels matches the isolated-vertex condition") {
  for (const Graph& g : corpus()) {
    const int n = g.order();
    const auto a = oracle::matrix_of(g);
    for (int k = 0; k <= 2 && k < n; ++k) {
      const auto r = is_k_sachs_critical(g, k);
      CHECK(r.critical == oracle::factor_by_isolated_condition(a, oracle::all(n), k));
      if (r.critical) {
        CHECK(min_degree(g).degree >= k + 1);
      } else {
        REQUIRE(r.certificate.has_value());
        CHECK(verify_deficiency(g, *r.certificate));
      }
    }
  }
}

TEST_CASE("canonical forms survive relabeling") {
  std::mt19937_64 rng(17);
  for (const Graph& g : corpus()) {
    if (g.order() > 8) continue;
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(permute(g, perm)));
  }
}
