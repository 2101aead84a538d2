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

#ifndef SACHS_PLANARITY_HPP_
#define SACHS_PLANARITY_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sachs/error.hpp"
#include "sachs/graph.hpp"

namespace sachs {

// Cyclic order of neighbors around each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

enum class KuratowskiKind { kK5, kK33 };

// Subdivision of K5 or K3,3 inside a graph. For K3,3 the first three branch
// vertices form one side. Each path runs between two branch vertices.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::kK5;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

// Exactly one certificate is populated.
struct PlanarityVerdict {
  std::variant<RotationSystem, KuratowskiWitness> certificate;

  bool planar() const noexcept { return certificate.index() == 0; }
  const RotationSystem& embedding() const { return std::get<RotationSystem>(certificate); }
  const KuratowskiWitness& witness() const { return std::get<KuratowskiWitness>(certificate); }
};

// Left-right planarity test. Planar graphs come back with a rotation system,
// the others with a Kuratowski subdivision extracted by edge deletion.
PlanarityVerdict is_planar(const Graph& g);

// Boolean planarity only; no certificate.
bool test_planarity(const Graph& g);

struct EmbeddingReport {
  bool planar = false;
  int faces = 0;  // summed over components; an isolated vertex counts one
  int components = 0;
};

// Traces faces by the next-edge-in-rotation rule and checks
// n_c - m_c + f_c = 2 per connected component. Throws MalformedRotation when
// a vertex's order is not a permutation of its neighbors.
EmbeddingReport trace_embedding(const Graph& g, const RotationSystem& rotation);
bool verify_embedding(const Graph& g, const RotationSystem& rotation);

struct KuratowskiCheck {
  bool ok = false;
  std::string reason;
};
KuratowskiCheck check_kuratowski(const Graph& g, const KuratowskiWitness& w);
bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w);

struct KPlanarityResult {
  bool k_planar = false;
  std::optional<VertexSet> failing_set;       // first non-planar deletion
  std::optional<KuratowskiWitness> witness;   // inside g - S, in g's labels
};

// G - S planar for every |S| = k, subsets scanned in lexicographic order.
// Throws KOutOfRange unless 0 <= k < n; SizeLimitExceeded when n > 64 or
// the scan would exceed ten million subsets.
KPlanarityResult is_k_planar(const Graph& g, int k);

// Planarity of G - S for every |S| = k, k may be 0..n.
bool every_deletion_planar(const Graph& g, int k);

enum class DegreeLemmaVariant {
  kBalanced,            // |A| = |B|
  kEdgeInLargerSide,    // |B|+1 <= |A| <= |B|+2, extra edge inside A
  kSmallerSide,         // |A| = |B| - 1
  kEdgeInNearBalanced,  // |B| <= |A| <= |B|+1, extra edge inside A
};

enum class DegreeLemmaHypothesis {
  kPartition,     // A, B do not partition V
  kNotBipartite,  // an edge inside A or B (other than e)
  kNonPlanar,
  kBalance,
  kTooFewVertices,
  kExtraEdge,     // e missing, not inside A, or supplied when not expected
};

std::string_view hypothesis_name(DegreeLemmaHypothesis h);

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(DegreeLemmaHypothesis which);
  DegreeLemmaHypothesis which() const noexcept { return which_; }

 private:
  DegreeLemmaHypothesis which_;
};

struct DegreeLemmaResult {
  std::optional<int> low_vertex;  // vertex of A with deg_H <= 3, if any
  int low_degree = 0;             // minimum deg_H over A
  int edges = 0;                  // edges of the bipartite graph in scope
  int bound = 0;                  // 2n - 4
  bool edge_bound_holds = false;
};

// Checks every hypothesis of the chosen variant (throwing HypothesisViolated
// on the first failure), then reports the minimum-degree vertex of A in H and
// the edge count of the bipartite planar graph (H, or H - e) against 2n - 4.
DegreeLemmaResult verify_degree_lemma(const Graph& h, const VertexSet& a, const VertexSet& b,
                                      DegreeLemmaVariant variant,
                                      std::optional<EdgeRef> extra_edge = std::nullopt);

}  // namespace sachs

#endif  // SACHS_PLANARITY_HPP_
