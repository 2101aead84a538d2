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

#include "sachs/criticality.hpp"

#include <algorithm>
#include <array>
#include <variant>

#include "sachs/error.hpp"
#include "sachs/planarity.hpp"

namespace sachs {

namespace {

void check_k(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kKOutOfRange, "k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + ")");
  }
  if (n > 64) throw Error(ErrorCode::kSizeLimitExceeded, "criticality needs n <= 64");
}

std::optional<std::uint64_t> first_failing_subset(const Graph& g, int k, CriticalityMode mode) {
  const int n = g.order();
  const std::uint64_t all = detail::all_vertices(n);
  if (mode == CriticalityMode::kPerfectMatching && (n - k) % 2 == 1) {
    std::optional<std::uint64_t> first;
    for_each_combination(n, k, [&](std::uint64_t s) {
      first = s;
      return false;
    });
    return first;
  }
  std::optional<std::uint64_t> failing;
  for_each_combination(n, k, [&](std::uint64_t s) {
    const bool ok = mode == CriticalityMode::kSachs ? detail::has_one_two_factor_in(g, all & ~s)
                                                    : detail::has_perfect_matching_in(g, all & ~s);
    if (ok) return true;
    failing = s;
    return false;
  });
  return failing;
}

// Deficiency set inside G - S, lifted and joined with S.
DeficiencyCertificate lifted_certificate(const Graph& g, const VertexSet& s, int k) {
  const InducedGraph rest = delete_vertices(g, s);
  const auto inner = has_one_two_factor(rest.graph);
  const DeficiencyCertificate local = deficiency_from_hall(rest.graph, std::get<HallViolator>(inner));
  DeficiencyCertificate cert;
  cert.set = s;
  for (int v : local.set.members()) cert.set.insert(rest.original[static_cast<std::size_t>(v)]);
  cert.k = k;
  cert.isolated = isolated_count(delete_vertices(g, cert.set).graph);
  if (!verify_deficiency(g, cert)) {
    throw Error(ErrorCode::kContradictionDetected, "lifted deficiency certificate failed verification");
  }
  return cert;
}

EdgeAudit audit_edge(const Graph& g, EdgeRef e, int k, CriticalityMode mode) {
  const Graph h = delete_edge(g, e);
  EdgeAudit audit{e, VertexSet(g.order()), std::nullopt, std::nullopt, false};
  if (mode == CriticalityMode::kSachs) {
    const SachsCriticalResult r = is_k_sachs_critical(h, k);
    audit.failing_set = *r.failing_set;
    audit.certificate = r.certificate;
  } else {
    const FactorCriticalResult r = is_k_factor_critical(h, k);
    audit.failing_set = *r.failing_set;
    audit.inner_violator = r.inner_violator;
    audit.parity_failure = r.parity_failure;
  }
  return audit;
}

bool tutte_witness_holds(const Graph& g, const VertexSet& s, const TutteViolator& t) {
  if (t.set.universe() != g.order() || t.set.intersects(s)) return false;
  const int odd = odd_components(delete_vertices(g, s | t.set).graph);
  return odd == t.odd_count && odd > t.set.size();
}

bool audit_holds(const Graph& g, const EdgeAudit& a, int k, CriticalityMode mode) {
  if (!g.adjacent(a.edge.u, a.edge.v) || a.failing_set.size() != k) return false;
  const Graph h = delete_edge(g, a.edge);
  if (mode == CriticalityMode::kSachs) {
    return a.certificate && a.failing_set.is_subset_of(a.certificate->set) && a.certificate->k == k &&
           verify_deficiency(h, *a.certificate);
  }
  if (a.parity_failure) return (g.order() - k) % 2 == 1;
  return a.inner_violator && tutte_witness_holds(h, a.failing_set, *a.inner_violator);
}

}  // namespace

std::string_view mode_name(CriticalityMode mode) {
  return mode == CriticalityMode::kSachs ? "sachs" : "perfect_matching";
}

SachsCriticalResult is_k_sachs_critical(const Graph& g, int k) {
  check_k(g, k);
  SachsCriticalResult result;
  const auto failing = first_failing_subset(g, k, CriticalityMode::kSachs);
  if (!failing) {
    result.critical = true;
    return result;
  }
  result.failing_set = VertexSet::from_mask(g.order(), *failing);
  result.certificate = lifted_certificate(g, *result.failing_set, k);
  return result;
}

bool is_k_critical(const Graph& g, int k, CriticalityMode mode) {
  check_k(g, k);
  return !first_failing_subset(g, k, mode).has_value();
}

std::optional<EdgeRef> removable_edge(const Graph& g, int k, CriticalityMode mode) {
  for (const EdgeRef& e : g.edges()) {
    if (is_k_critical(delete_edge(g, e), k, mode)) return e;
  }
  return std::nullopt;
}

std::optional<EdgeRef> breaking_edge(const Graph& g, int k, CriticalityMode mode) {
  for (const EdgeRef& e : g.edges()) {
    if (!is_k_critical(delete_edge(g, e), k, mode)) return e;
  }
  return std::nullopt;
}

MinimalityResult is_minimal_k_critical(const Graph& g, int k, CriticalityMode mode, bool collect_audits) {
  if (!is_k_critical(g, k, mode)) {
    throw Error(ErrorCode::kNotCritical, "graph is not " + std::to_string(k) + "-critical in " +
                                             std::string(mode_name(mode)) + " mode");
  }
  MinimalityResult result;
  for (const EdgeRef& e : g.edges()) {
    if (is_k_critical(delete_edge(g, e), k, mode)) {
      result.removable_edge = e;
      return result;
    }
    if (collect_audits) result.audits.push_back(audit_edge(g, e, k, mode));
  }
  result.minimal = true;
  return result;
}

MinimalityResult is_minimal_k_sachs_critical(const Graph& g, int k, bool collect_audits) {
  return is_minimal_k_critical(g, k, CriticalityMode::kSachs, collect_audits);
}

std::string bound_relation(int min_degree, int k) {
  const int gap = min_degree - k;
  if (gap < 1) return "below k+1";
  if (gap > 3) return "above k+3";
  return "k+" + std::to_string(gap);
}

CriticalityReport analyze_criticality(const Graph& g, int k, CriticalityMode mode, bool check_minimal) {
  check_k(g, k);
  CriticalityReport report;
  report.k = k;
  report.mode = mode;
  report.min_degree = min_degree(g);
  report.bound_status = bound_relation(report.min_degree.degree, k);
  if (mode == CriticalityMode::kSachs) {
    SachsCriticalResult r = is_k_sachs_critical(g, k);
    report.is_critical = r.critical;
    report.failing_set = std::move(r.failing_set);
    report.certificate = std::move(r.certificate);
  } else {
    FactorCriticalResult r = is_k_factor_critical(g, k);
    report.is_critical = r.critical;
    report.failing_set = std::move(r.failing_set);
    report.inner_violator = std::move(r.inner_violator);
    report.parity_failure = r.parity_failure;
  }
  if (check_minimal && report.is_critical) {
    MinimalityResult m = is_minimal_k_critical(g, k, mode, true);
    report.is_minimal = m.minimal;
    report.non_minimal_edge = m.removable_edge;
    report.audits = std::move(m.audits);
  }
  return report;
}

bool verify_report(const Graph& g, const CriticalityReport& report) {
  const int n = g.order();
  const int k = report.k;
  if (k < 0 || k >= n) return false;
  const MinDegree md = min_degree(g);
  if (md.degree != report.min_degree.degree || g.degree(report.min_degree.vertex) != md.degree) return false;

  if (!report.is_critical) {
    if (!report.failing_set || report.failing_set->size() != k) return false;
    if (report.mode == CriticalityMode::kSachs) {
      if (!report.certificate || report.certificate->k != k) return false;
      if (!report.failing_set->is_subset_of(report.certificate->set)) return false;
      if (!verify_deficiency(g, *report.certificate)) return false;
    } else if (report.parity_failure) {
      if ((n - k) % 2 == 0) return false;
    } else if (!report.inner_violator || !tutte_witness_holds(g, *report.failing_set, *report.inner_violator)) {
      return false;
    }
    return !report.is_minimal.has_value();
  }
  if (report.failing_set) return false;

  if (report.is_minimal.has_value()) {
    if (*report.is_minimal) {
      if (report.non_minimal_edge || static_cast<int>(report.audits.size()) != g.size()) return false;
    } else {
      if (!report.non_minimal_edge || !g.adjacent(report.non_minimal_edge->u, report.non_minimal_edge->v)) {
        return false;
      }
      const Graph h = delete_edge(g, *report.non_minimal_edge);
      const bool still = report.mode == CriticalityMode::kSachs && n <= 16
                             ? !deficiency_violator_bruteforce(h, k).has_value()
                             : is_k_critical(h, k, report.mode);
      if (!still) return false;
    }
    for (const EdgeAudit& a : report.audits) {
      if (!audit_holds(g, a, k, report.mode)) return false;
    }
  }
  return true;
}

namespace {

constexpr std::array<std::pair<DegreeContext, std::string_view>, 8> kContextNames{{
    {DegreeContext::kObservation, "observation"},
    {DegreeContext::kBreakingEdgePlanar, "breaking-edge-planar"},
    {DegreeContext::kBreakingEdgeKPlanar, "breaking-edge-k-planar"},
    {DegreeContext::kMinimalDeletionPlanar, "minimal-deletion-planar"},
    {DegreeContext::kMinimalPlanar, "minimal-planar"},
    {DegreeContext::kMinimalGeneral, "minimal"},
    {DegreeContext::kMinimalSmallK, "minimal-small-k"},
    {DegreeContext::kMinimalFactorCritical, "minimal-factor-critical"},
}};

}  // namespace

std::string_view context_name(DegreeContext c) {
  for (const auto& [ctx, name] : kContextNames) {
    if (ctx == c) return name;
  }
  return "unknown";
}

DegreeContext parse_context(std::string_view name) {
  for (const auto& [ctx, known] : kContextNames) {
    if (known == name) return ctx;
  }
  throw Error(ErrorCode::kUnknownContext, "no degree-bound context named '" + std::string(name) + "'");
}

std::vector<DegreeContext> all_contexts() {
  std::vector<DegreeContext> out;
  for (const auto& entry : kContextNames) out.push_back(entry.first);
  return out;
}

std::string_view outcome_name(BoundOutcome o) {
  switch (o) {
    case BoundOutcome::kPass:
      return "pass";
    case BoundOutcome::kHypothesisFail:
      return "hypothesis_fail";
    case BoundOutcome::kBoundViolation:
      return "bound_violation";
  }
  return "unknown";
}

DegreeBoundCheck check_degree_bounds(const Graph& g, int k, DegreeContext context) {
  check_k(g, k);
  const int n = g.order();
  DegreeBoundCheck check;
  check.context = context;
  check.k = k;
  check.min_degree = min_degree(g);
  check.lower = k + 1;

  auto fail = [&](std::string what) {
    check.outcome = BoundOutcome::kHypothesisFail;
    check.failed_hypothesis = std::move(what);
    return check;
  };
  const CriticalityMode mode = context == DegreeContext::kMinimalFactorCritical
                                   ? CriticalityMode::kPerfectMatching
                                   : CriticalityMode::kSachs;
  bool needs_minimal = context != DegreeContext::kObservation &&
                       context != DegreeContext::kBreakingEdgePlanar &&
                       context != DegreeContext::kBreakingEdgeKPlanar;
  switch (context) {
    case DegreeContext::kObservation:
      break;
    case DegreeContext::kBreakingEdgePlanar:
      check.upper = 3;
      if (k != 0) return fail("k = 0");
      break;
    case DegreeContext::kBreakingEdgeKPlanar:
      check.upper = k + 2;
      if (k == 0) return fail("k > 0");
      break;
    case DegreeContext::kMinimalSmallK:
      check.upper = k + 2;
      if (!(k == 0 || k == 1 || k == n - 5 || k == n - 4 || k == n - 3 || k == n - 2)) {
        return fail("k in {0,1,n-5,n-4,n-3,n-2}");
      }
      break;
    case DegreeContext::kMinimalFactorCritical:
      check.upper = k + 1;
      break;
    default:
      check.upper = k + 2;
      break;
  }
  // Cheapest hypotheses first: criticality rules out most graphs.
  if (!is_k_critical(g, k, mode)) return fail("k-critical");
  switch (context) {
    case DegreeContext::kBreakingEdgePlanar:
    case DegreeContext::kMinimalPlanar:
      if (!test_planarity(g)) return fail("planar");
      break;
    case DegreeContext::kBreakingEdgeKPlanar:
      if (!is_k_planar(g, k).k_planar) return fail("k-planar");
      break;
    case DegreeContext::kMinimalDeletionPlanar:
      // With k = 0 there is no set of size k - 1, so the condition is vacuous.
      if (k > 0 && !every_deletion_planar(g, k - 1)) return fail("(k-1)-deletion-planar");
      break;
    default:
      break;
  }
  if (needs_minimal) {
    if (removable_edge(g, k, mode)) return fail("minimal");
  } else if (context != DegreeContext::kObservation) {
    check.breaking_edge = breaking_edge(g, k, mode);
    if (!check.breaking_edge) return fail("breaking edge");
  }

  const int delta = check.min_degree.degree;
  const bool ok = delta >= check.lower && (!check.upper || delta <= *check.upper);
  check.outcome = ok ? BoundOutcome::kPass : BoundOutcome::kBoundViolation;
  return check;
}

DoubleCriticalReport conjecture_double_critical_scan(const Graph& g) {
  const int n = g.order();
  DoubleCriticalReport report;
  report.complete = is_complete(g);
  std::vector<char> minimal(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (int t = 0; t < n; ++t) {
    minimal[static_cast<std::size_t>(t)] =
        is_k_critical(g, t, CriticalityMode::kSachs) && !removable_edge(g, t, CriticalityMode::kSachs);
  }
  for (int t = 0; t + 1 < n; ++t) {
    if (minimal[static_cast<std::size_t>(t)] && minimal[static_cast<std::size_t>(t + 1)]) {
      report.levels.push_back(t);
    }
  }
  if (report.levels.empty()) {
    report.status = DoubleCriticalStatus::kNone;
  } else {
    report.status = report.complete ? DoubleCriticalStatus::kConsistent : DoubleCriticalStatus::kCounterexample;
  }
  return report;
}

}  // namespace sachs
