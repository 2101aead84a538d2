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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sachs/criticality.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/error.hpp"
#include "sachs/harness.hpp"
#include "sachs/planarity.hpp"

using namespace sachs;

TEST_CASE("complete graphs are minimal at the two top levels") {
  for (int n = 4; n <= 8; ++n) {
    const Graph kn = complete_graph(n);
    for (int k : {n - 3, n - 2}) {
      CHECK(is_k_sachs_critical(kn, k).critical);
      const auto m = is_minimal_k_sachs_critical(kn, k);
      CHECK(m.minimal);
      CHECK(m.audits.size() == static_cast<std::size_t>(kn.size()));
      for (const auto& audit : m.audits) {
        REQUIRE(audit.certificate.has_value());
        CHECK(verify_deficiency(delete_edge(kn, audit.edge), *audit.certificate));
      }
    }
    // One level lower, K_n is critical but an edge can go.
    if (n >= 5) CHECK_FALSE(is_minimal_k_sachs_critical(kn, n - 4).minimal);
  }
}

TEST_CASE("sachs criticality examples") {
  CHECK(is_k_sachs_critical(cycle_graph(5), 1).critical);

  const auto c4 = is_k_sachs_critical(cycle_graph(4), 1);
  CHECK_FALSE(c4.critical);
  REQUIRE(c4.failing_set.has_value());
  CHECK(*c4.failing_set == VertexSet::of(4, {0}));
  REQUIRE(c4.certificate.has_value());
  CHECK(c4.certificate->set.contains(0));
  CHECK(c4.certificate->set.size() >= 1);
  CHECK(verify_deficiency(cycle_graph(4), *c4.certificate));

  const auto claw = is_k_sachs_critical(star_graph(3), 0);
  CHECK_FALSE(claw.critical);
  REQUIRE(claw.certificate.has_value());
  CHECK(claw.certificate->set == VertexSet::of(4, {0}));

  CHECK_THROWS_AS(is_k_sachs_critical(cycle_graph(5), 5), Error);
  CHECK_THROWS_AS(is_k_sachs_critical(cycle_graph(5), -1), Error);

  // No parity filter in sachs mode; the perfect-matching notion needs n - k even.
  CHECK(is_k_critical(complete_graph(5), 2, CriticalityMode::kSachs));
  CHECK_FALSE(is_k_critical(complete_graph(5), 2, CriticalityMode::kPerfectMatching));
  CHECK(is_k_critical(complete_graph(5), 1, CriticalityMode::kPerfectMatching));
}

TEST_CASE("minimality examples") {
  const auto k5 = analyze_criticality(complete_graph(5), 2, CriticalityMode::kSachs, true);
  CHECK(k5.is_minimal == true);
  CHECK(k5.min_degree.degree == 4);
  CHECK(k5.bound_status == "k+2");

  const auto k4 = analyze_criticality(complete_graph(4), 1, CriticalityMode::kSachs, true);
  CHECK(k4.is_minimal == true);
  CHECK(k4.min_degree.degree == 3);
  CHECK(k4.bound_status == "k+2");

  const auto c5 = analyze_criticality(cycle_graph(5), 1, CriticalityMode::kSachs, true);
  CHECK(c5.is_minimal == true);
  CHECK(c5.min_degree.degree == 2);
  CHECK(c5.bound_status == "k+1");

  const auto k6 = analyze_criticality(complete_graph(6), 2, CriticalityMode::kSachs, true);
  CHECK(k6.is_minimal == false);
  REQUIRE(k6.non_minimal_edge.has_value());
  CHECK(is_k_sachs_critical(delete_edge(complete_graph(6), *k6.non_minimal_edge), 2).critical);
  CHECK(verify_report(complete_graph(6), k6));

  try {
    is_minimal_k_sachs_critical(cycle_graph(4), 1);
    FAIL("expected NotCritical");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotCritical);
  }
}

TEST_CASE("reports re-verify and tampering is caught") {
  auto r = analyze_criticality(cycle_graph(4), 1, CriticalityMode::kSachs, true);
  CHECK_FALSE(r.is_critical);
  CHECK(verify_report(cycle_graph(4), r));
  r.certificate->isolated += 1;
  CHECK_FALSE(verify_report(cycle_graph(4), r));

  auto pm = analyze_criticality(star_graph(3), 0, CriticalityMode::kPerfectMatching, true);
  CHECK_FALSE(pm.is_critical);
  CHECK(verify_report(star_graph(3), pm));

  auto k6 = analyze_criticality(complete_graph(6), 2, CriticalityMode::kSachs, true);
  k6.non_minimal_edge = EdgeRef(0, 1);
  k6.is_minimal = true;
  CHECK_FALSE(verify_report(complete_graph(6), k6));
}

TEST_CASE("bound relations") {
  CHECK(bound_relation(1, 1) == "below k+1");
  CHECK(bound_relation(2, 1) == "k+1");
  CHECK(bound_relation(3, 1) == "k+2");
  CHECK(bound_relation(4, 1) == "k+3");
  CHECK(bound_relation(5, 1) == "above k+3");
}

TEST_CASE("degree-bound contexts") {
  const auto k5 = check_degree_bounds(complete_graph(5), 2, DegreeContext::kMinimalDeletionPlanar);
  CHECK(k5.outcome == BoundOutcome::kPass);
  CHECK(k5.min_degree.degree == 4);
  CHECK(k5.upper == 4);

  const auto c5 = check_degree_bounds(cycle_graph(5), 1, DegreeContext::kMinimalPlanar);
  CHECK(c5.outcome == BoundOutcome::kPass);
  CHECK(c5.min_degree.degree == 2);

  const Fixture& fig = FixtureRegistry::instance().get("figure3");
  const auto f3 = check_degree_bounds(fig.graph, 0, DegreeContext::kBreakingEdgePlanar);
  CHECK(f3.outcome == BoundOutcome::kPass);
  CHECK(f3.min_degree.degree == 3);
  CHECK(f3.upper == 3);
  REQUIRE(f3.breaking_edge.has_value());
  CHECK_FALSE(is_k_sachs_critical(delete_edge(fig.graph, *f3.breaking_edge), 0).critical);

  // K5 is not planar, so the planar contexts reject it.
  const auto k5p = check_degree_bounds(complete_graph(5), 2, DegreeContext::kMinimalPlanar);
  CHECK(k5p.outcome == BoundOutcome::kHypothesisFail);
  CHECK_FALSE(k5p.failed_hypothesis.empty());
  CHECK(check_degree_bounds(cycle_graph(4), 1, DegreeContext::kObservation).outcome ==
        BoundOutcome::kHypothesisFail);
  CHECK(check_degree_bounds(complete_graph(4), 1, DegreeContext::kMinimalSmallK).outcome == BoundOutcome::kPass);
  CHECK(check_degree_bounds(cycle_graph(5), 1, DegreeContext::kMinimalFactorCritical).outcome ==
        BoundOutcome::kPass);

  CHECK(parse_context("minimal-planar") == DegreeContext::kMinimalPlanar);
  for (DegreeContext c : all_contexts()) CHECK(parse_context(context_name(c)) == c);
  try {
    parse_context("nonsense");
    FAIL("expected UnknownContext");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownContext);
  }
}

TEST_CASE("double minimality scan") {
  const auto k4 = conjecture_double_critical_scan(complete_graph(4));
  CHECK(k4.complete);
  CHECK(k4.status == DoubleCriticalStatus::kConsistent);
  CHECK(std::find(k4.levels.begin(), k4.levels.end(), 1) != k4.levels.end());

  const auto k5 = conjecture_double_critical_scan(complete_graph(5));
  CHECK(std::find(k5.levels.begin(), k5.levels.end(), 2) != k5.levels.end());
  CHECK(k5.status == DoubleCriticalStatus::kConsistent);

  // C5 is not 2-critical, but it is minimal at both t = 0 and t = 1, so it
  // falls outside the statement at the bottom level.
  CHECK_FALSE(is_k_sachs_critical(cycle_graph(5), 2).critical);
  const auto c5 = conjecture_double_critical_scan(cycle_graph(5));
  CHECK(c5.levels == std::vector<int>{0});
  CHECK(c5.status == DoubleCriticalStatus::kCounterexample);
  CHECK(oracle::sachs_minimal(oracle::matrix_of(cycle_graph(5)), 0));
  CHECK(oracle::sachs_minimal(oracle::matrix_of(cycle_graph(5)), 1));

  CHECK(conjecture_double_critical_scan(cycle_graph(4)).status == DoubleCriticalStatus::kNone);
}

TEST_CASE("criticality agrees with the isolated-vertex condition on every graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto a = oracle::matrix_of(g);
      for (int k = 0; k < n; ++k) {
        const auto r = is_k_sachs_critical(g, k);
        CHECK(r.critical == oracle::factor_by_isolated_condition(a, oracle::all(n), k));
        CHECK(r.critical == !deficiency_violator_bruteforce(g, k).has_value());
        if (r.critical) {
          CHECK(min_degree(g).degree >= k + 1);
        } else {
          REQUIRE(r.certificate.has_value());
          CHECK(r.certificate->set.size() >= k);
          CHECK(verify_deficiency(g, *r.certificate));
        }
      }
    }
}

TEST_CASE("minimality agrees with brute force on every graph up to 6 vertices") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto a = oracle::matrix_of(g);
      for (int k = 0; k < n; ++k) {
        if (!oracle::sachs_critical(a, k)) continue;
        const auto report = analyze_criticality(g, k, CriticalityMode::kSachs, true);
        REQUIRE(report.is_minimal.has_value());
        CHECK(*report.is_minimal == oracle::sachs_minimal(a, k));
        CHECK(verify_report(g, report));
      }
    }
}
