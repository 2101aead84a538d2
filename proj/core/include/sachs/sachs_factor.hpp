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

#ifndef SACHS_SACHS_FACTOR_HPP_
#define SACHS_SACHS_FACTOR_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sachs/graph.hpp"
#include "sachs/matching.hpp"

namespace sachs {

// One component of a {1,2}-factor: a single edge (two vertices) or a cycle
// listed in traversal order (three or more vertices).
struct FactorComponent {
  std::vector<int> vertices;

  bool is_edge() const noexcept { return vertices.size() == 2; }
  bool is_cycle() const noexcept { return vertices.size() >= 3; }
  bool operator==(const FactorComponent&) const = default;
};

// Spanning subgraph whose components are edges and cycles.
struct OneTwoFactor {
  std::vector<FactorComponent> components;

  bool operator==(const OneTwoFactor&) const = default;
};

// Set S with i(G - S) > |S| - k (and |S| >= k); k = 0 witnesses the absence
// of a {1,2}-factor.
struct DeficiencyCertificate {
  VertexSet set;
  int isolated = 0;
  int k = 0;
};

// Left = V, right = a copy of V, (u, v') an edge iff uv in E(G).
BipartiteGraph double_cover(const Graph& g);

// A factor built from a perfect matching of the double cover, or the Hall
// violator of that cover when none exists.
std::variant<OneTwoFactor, HallViolator> has_one_two_factor(const Graph& g);

// Reads the matching as a permutation v -> mate(v) and turns each cycle of
// the permutation into a factor component: 2-cycles become edges, longer
// cycles stay cycles. Each component starts at its smallest vertex.
// Throws NotPerfect or FixedPoint.
OneTwoFactor factor_from_permutation(const Graph& g, const BipartiteMatching& m);

// First S by (size, lexicographic order) among |S| >= k with
// i(G - S) > |S| - k. Throws KOutOfRange unless 0 <= k < n, and
// SizeLimitExceeded above n = 16.
std::optional<DeficiencyCertificate> deficiency_violator_bruteforce(const Graph& g, int k);

// S' = N(S) \ S; every vertex of S outside N(S) is isolated in G - S'.
// Throws InvalidViolator when |S| <= |N(S)| or the result fails to verify.
DeficiencyCertificate deficiency_from_hall(const Graph& g, const HallViolator& violator);

// Independent checkers; they share no code with the constructions above.
bool validate_factor(const Graph& g, const OneTwoFactor& f, std::string* reason = nullptr);
bool verify_deficiency(const Graph& g, const DeficiencyCertificate& c);

struct TwoBicriticalResult {
  bool two_bicritical = false;
  // First nonempty independent S (by size, then lexicographic) with
  // |S| >= |N(S)|.
  std::optional<VertexSet> offending_set;
  int offending_neighborhood = 0;
  // Definition side: first v with no {1,2}-factor in G - v.
  std::optional<int> failing_vertex;
};

// Every nonempty independent S has |S| < |N(S)|, decided by enumeration and
// by deleting each vertex in turn. Throws ContradictionDetected if the two
// disagree, KOutOfRange for n < 2, SizeLimitExceeded above n = 16.
TwoBicriticalResult is_two_bicritical(const Graph& g);

namespace detail {
// {1,2}-factor of the subgraph induced by `alive`; requires order <= 64.
bool has_one_two_factor_in(const Graph& g, std::uint64_t alive);
}  // namespace detail

}  // namespace sachs

#endif  // SACHS_SACHS_FACTOR_HPP_
