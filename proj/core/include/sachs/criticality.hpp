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

#ifndef SACHS_CRITICALITY_HPP_
#define SACHS_CRITICALITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sachs/graph.hpp"
#include "sachs/matching.hpp"
#include "sachs/sachs_factor.hpp"

namespace sachs {

// kSachs: G - S must keep a {1,2}-factor. kPerfectMatching: G - S must keep
// a perfect matching (and n - k must be even).
enum class CriticalityMode { kSachs, kPerfectMatching };

std::string_view mode_name(CriticalityMode mode);

struct SachsCriticalResult {
  bool critical = false;
  std::optional<VertexSet> failing_set;  // first |S| = k in lexicographic order
  // T = S plus the deficiency set found inside G - S, so i(G - T) > |T| - k.
  std::optional<DeficiencyCertificate> certificate;
};

// Every k-subset is deleted in turn. Throws KOutOfRange unless 0 <= k < n
// and SizeLimitExceeded above n = 64.
SachsCriticalResult is_k_sachs_critical(const Graph& g, int k);

// Boolean form without certificates; mode selects the factor notion.
bool is_k_critical(const Graph& g, int k, CriticalityMode mode);

// Why G - e stops being k-critical: a failing k-set of G - e and, in sachs
// mode, the lifted deficiency certificate (inner Tutte violator otherwise).
struct EdgeAudit {
  EdgeRef edge;
  VertexSet failing_set;
  std::optional<DeficiencyCertificate> certificate;
  std::optional<TutteViolator> inner_violator;
  bool parity_failure = false;
};

struct MinimalityResult {
  bool minimal = false;
  std::optional<EdgeRef> removable_edge;  // first edge e with G - e still k-critical
  std::vector<EdgeAudit> audits;          // one per edge checked before the verdict
};

// Every edge is tried against the full definition. Throws NotCritical when G
// itself is not k-critical in the chosen mode.
MinimalityResult is_minimal_k_critical(const Graph& g, int k, CriticalityMode mode,
                                       bool collect_audits = true);
MinimalityResult is_minimal_k_sachs_critical(const Graph& g, int k, bool collect_audits = true);

// First edge whose deletion keeps G k-critical, nullopt if there is none.
// Assumes G is k-critical; no certificates.
std::optional<EdgeRef> removable_edge(const Graph& g, int k, CriticalityMode mode);
// First edge whose deletion breaks k-criticality.
std::optional<EdgeRef> breaking_edge(const Graph& g, int k, CriticalityMode mode);

// "below k+1", "k+1", "k+2", "k+3" or "above k+3".
std::string bound_relation(int min_degree, int k);

struct CriticalityReport {
  int k = 0;
  CriticalityMode mode = CriticalityMode::kSachs;
  bool is_critical = false;
  std::optional<VertexSet> failing_set;
  std::optional<DeficiencyCertificate> certificate;  // sachs mode
  std::optional<TutteViolator> inner_violator;       // perfect-matching mode
  bool parity_failure = false;
  std::optional<bool> is_minimal;
  std::optional<EdgeRef> non_minimal_edge;
  std::vector<EdgeAudit> audits;
  MinDegree min_degree;
  std::string bound_status;
};

CriticalityReport analyze_criticality(const Graph& g, int k, CriticalityMode mode, bool check_minimal);

// Re-verifies every witness in the report from scratch; false on any
// mismatch.
bool verify_report(const Graph& g, const CriticalityReport& report);

enum class DegreeContext {
  kObservation,              // k-critical: delta >= k+1
  kBreakingEdgePlanar,       // k = 0, planar, some edge breaks the factor: delta <= 3
  kBreakingEdgeKPlanar,      // k > 0, k-planar, some edge breaks: delta <= k+2
  kMinimalDeletionPlanar,    // minimal, G - S planar for |S| = k-1: delta <= k+2
  kMinimalPlanar,            // minimal and planar: delta <= k+2
  kMinimalGeneral,           // minimal, no planarity: delta <= k+2 (conjectured)
  kMinimalSmallK,            // minimal, k in {0,1,n-5,n-4,n-3,n-2}: delta <= k+2
  kMinimalFactorCritical,    // minimal k-factor-critical: delta = k+1 (conjectured)
};

std::string_view context_name(DegreeContext c);
// Throws UnknownContext.
DegreeContext parse_context(std::string_view name);
std::vector<DegreeContext> all_contexts();

enum class BoundOutcome { kPass, kHypothesisFail, kBoundViolation };
std::string_view outcome_name(BoundOutcome o);

struct DegreeBoundCheck {
  DegreeContext context = DegreeContext::kObservation;
  int k = 0;
  BoundOutcome outcome = BoundOutcome::kHypothesisFail;
  std::string failed_hypothesis;  // empty unless kHypothesisFail
  MinDegree min_degree;
  int lower = 0;
  std::optional<int> upper;
  std::optional<EdgeRef> breaking_edge;
};

// Verifies the context's hypotheses, then places delta(G) against the
// interval it promises. Throws KOutOfRange unless 0 <= k < n.
DegreeBoundCheck check_degree_bounds(const Graph& g, int k, DegreeContext context);

enum class DoubleCriticalStatus { kNone, kConsistent, kCounterexample };

struct DoubleCriticalReport {
  std::vector<int> levels;  // t with G minimal at both t and t+1
  bool complete = false;
  DoubleCriticalStatus status = DoubleCriticalStatus::kNone;
};

// Scans t = 0..n-2. A non-complete graph with any such level is a
// counterexample to the double-minimality statement.
DoubleCriticalReport conjecture_double_critical_scan(const Graph& g);

}  // namespace sachs

#endif  // SACHS_CRITICALITY_HPP_
