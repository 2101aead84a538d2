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

#ifndef SACHS_CERTIFICATES_HPP_
#define SACHS_CERTIFICATES_HPP_

#include <string>
#include <string_view>

#include "sachs/critical_structure.hpp"
#include "sachs/criticality.hpp"
#include "sachs/graph.hpp"
#include "sachs/matching.hpp"
#include "sachs/planarity.hpp"
#include "sachs/sachs_factor.hpp"

namespace sachs {

// Compact JSON objects tagged with a "type" field. Vertex sets are ascending
// arrays of ids.
std::string certificate_json(const OneTwoFactor& f);
std::string certificate_json(const DeficiencyCertificate& c);
std::string certificate_json(const HallViolator& h);
// `deleted` is the set removed before the violator was found (may be empty).
std::string certificate_json(const TutteViolator& t, const VertexSet& deleted);
std::string certificate_json(const Matching& m);
std::string certificate_json(const RotationSystem& r);
std::string certificate_json(const KuratowskiWitness& w);
std::string certificate_json(const CriticalPair& p);
std::string certificate_json(const CriticalityReport& r);
std::string certificate_json(const DegreeBoundCheck& c);
std::string certificate_json(const DegreeLemmaResult& r, const VertexSet& a, const VertexSet& b,
                             DegreeLemmaVariant variant, const std::optional<EdgeRef>& extra_edge);

// Parses a certificate produced above and re-checks it against `g` with the
// standalone verifiers. Never throws; malformed input yields false.
bool verify_certificate_json(const Graph& g, std::string_view json, std::string* reason = nullptr);

}  // namespace sachs

#endif  // SACHS_CERTIFICATES_HPP_
