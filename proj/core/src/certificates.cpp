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

#include "sachs/certificates.hpp"

#include "json.hpp"
#include "json_support.hpp"
#include "sachs/error.hpp"

namespace sachs {

using nlohmann::json;

namespace {

json edge_json(const EdgeRef& e) { return json::array({e.u, e.v}); }

json audit_json(const EdgeAudit& a) {
  json j{{"edge", edge_json(a.edge)}, {"failing_set", set_json(a.failing_set)}};
  if (a.certificate) j["certificate"] = json::parse(certificate_json(*a.certificate));
  if (a.inner_violator) j["inner_violator"] = json::parse(certificate_json(*a.inner_violator, a.failing_set));
  if (a.parity_failure) j["parity_failure"] = true;
  return j;
}

std::string_view variant_name(DegreeLemmaVariant v) {
  switch (v) {
    case DegreeLemmaVariant::kBalanced:
      return "balanced";
    case DegreeLemmaVariant::kEdgeInLargerSide:
      return "edge-in-larger-side";
    case DegreeLemmaVariant::kSmallerSide:
      return "smaller-side";
    case DegreeLemmaVariant::kEdgeInNearBalanced:
      return "edge-in-near-balanced";
  }
  return "unknown";
}

DegreeLemmaVariant parse_variant(const std::string& s) {
  for (auto v : {DegreeLemmaVariant::kBalanced, DegreeLemmaVariant::kEdgeInLargerSide,
                 DegreeLemmaVariant::kSmallerSide, DegreeLemmaVariant::kEdgeInNearBalanced}) {
    if (variant_name(v) == s) return v;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown lemma variant " + s);
}

EdgeRef parse_edge(const json& j) { return EdgeRef(j.at(0).get<int>(), j.at(1).get<int>()); }

CriticalityMode parse_mode(const std::string& s) {
  if (s == mode_name(CriticalityMode::kSachs)) return CriticalityMode::kSachs;
  if (s == mode_name(CriticalityMode::kPerfectMatching)) return CriticalityMode::kPerfectMatching;
  throw Error(ErrorCode::kInvalidArgument, "unknown mode " + s);
}

DeficiencyCertificate parse_deficiency(int n, const json& j) {
  return {parse_set(n, j.at("set")), j.at("isolated").get<int>(), j.at("k").get<int>()};
}

TutteViolator parse_tutte(int n, const json& j) { return {parse_set(n, j.at("set")), j.at("odd_count").get<int>()}; }

bool verify_criticality(const Graph& g, const json& j) {
  const int n = g.order();
  CriticalityReport r;
  r.k = j.at("k").get<int>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.is_critical = j.at("critical").get<bool>();
  if (j.contains("failing_set")) r.failing_set = parse_set(n, j["failing_set"]);
  if (j.contains("certificate")) r.certificate = parse_deficiency(n, j["certificate"]);
  if (j.contains("inner_violator")) r.inner_violator = parse_tutte(n, j["inner_violator"]);
  r.parity_failure = j.value("parity_failure", false);
  if (j.contains("minimal")) r.is_minimal = j["minimal"].get<bool>();
  if (j.contains("non_minimal_edge")) r.non_minimal_edge = parse_edge(j["non_minimal_edge"]);
  for (const auto& a : j.value("audits", json::array())) {
    EdgeAudit audit{parse_edge(a.at("edge")), parse_set(n, a.at("failing_set")), std::nullopt, std::nullopt,
                    a.value("parity_failure", false)};
    if (a.contains("certificate")) audit.certificate = parse_deficiency(n, a["certificate"]);
    if (a.contains("inner_violator")) audit.inner_violator = parse_tutte(n, a["inner_violator"]);
    r.audits.push_back(std::move(audit));
  }
  r.min_degree = {j.at("min_degree").get<int>(), j.at("min_degree_vertex").get<int>()};
  r.bound_status = j.at("bound_status").get<std::string>();
  return r.bound_status == bound_relation(r.min_degree.degree, r.k) && verify_report(g, r);
}

bool verify_degree_bound(const Graph& g, const json& j) {
  const int k = j.at("k").get<int>();
  const DegreeContext ctx = parse_context(j.at("context").get<std::string>());
  const MinDegree md = min_degree(g);
  if (md.degree != j.at("min_degree").get<int>()) return false;
  const int lower = j.at("lower").get<int>();
  std::optional<int> upper;
  if (j.contains("upper")) upper = j["upper"].get<int>();
  const std::string outcome = j.at("outcome").get<std::string>();
  const bool inside = md.degree >= lower && (!upper || md.degree <= *upper);
  if (outcome == outcome_name(BoundOutcome::kPass) && !inside) return false;
  if (outcome == outcome_name(BoundOutcome::kBoundViolation) && inside) return false;
  if (j.contains("breaking_edge")) {
    const Graph h = delete_edge(g, parse_edge(j["breaking_edge"]));
    const bool sachs = ctx != DegreeContext::kMinimalFactorCritical;
    const bool still = sachs && g.order() <= 16
                           ? !deficiency_violator_bruteforce(h, k).has_value()
                           : is_k_critical(h, k, sachs ? CriticalityMode::kSachs : CriticalityMode::kPerfectMatching);
    if (still) return false;
  }
  return true;
}

// For the extra-edge variants the record may carry either H or H - e; the
// missing edge is added back before degrees are read.
bool verify_degree_lemma_json(const Graph& g, const json& j) {
  const int n = g.order();
  const VertexSet a = parse_set(n, j.at("a"));
  const VertexSet b = parse_set(n, j.at("b"));
  (void)parse_variant(j.at("variant").get<std::string>());
  if (a.intersects(b) || a.size() + b.size() != n) return false;
  Graph h = g;
  Graph scope = g;
  if (j.contains("extra_edge")) {
    const EdgeRef e = parse_edge(j["extra_edge"]);
    if (!a.contains(e.u) || !a.contains(e.v)) return false;
    if (g.adjacent(e.u, e.v)) {
      scope.remove_edge(e.u, e.v);
    } else {
      h.add_edge(e.u, e.v);
    }
  }
  for (const EdgeRef& e : scope.edges()) {
    if (a.contains(e.u) == a.contains(e.v)) return false;
  }
  if (!test_planarity(scope)) return false;
  if (j.at("edges").get<int>() != scope.size() || j.at("bound").get<int>() != 2 * n - 4) return false;
  if (j.at("edge_bound_holds").get<bool>() != (scope.size() <= 2 * n - 4)) return false;
  if (j.contains("low_vertex")) {
    const int v = j["low_vertex"].get<int>();
    if (!a.contains(v) || h.degree(v) > 3 || h.degree(v) != j.at("low_degree").get<int>()) return false;
  }
  return true;
}

bool verify_parsed(const Graph& g, const json& j, std::string& why) {
  const int n = g.order();
  const std::string type = j.at("type").get<std::string>();
  if (type == "one_two_factor") {
    OneTwoFactor f;
    for (const auto& c : j.at("components")) f.components.push_back({c.get<std::vector<int>>()});
    return validate_factor(g, f, &why);
  }
  if (type == "deficiency") return verify_deficiency(g, parse_deficiency(n, j));
  if (type == "hall_violator") {
    const VertexSet s = parse_set(n, j.at("set"));
    const int nb = neighborhood(g, s).size();
    return nb == j.at("neighborhood_size").get<int>() && s.size() > nb;
  }
  if (type == "tutte_violator") {
    const VertexSet deleted = parse_set(n, j.at("deleted"));
    const TutteViolator t = parse_tutte(n, j);
    if (t.set.intersects(deleted)) return false;
    const int odd = odd_components(delete_vertices(g, deleted | t.set).graph);
    return odd == t.odd_count && odd > t.set.size();
  }
  if (type == "matching") {
    Matching m;
    for (const auto& e : j.at("pairs")) m.pairs.push_back(parse_edge(e));
    if (!is_matching_of(g, m)) return false;
    return !j.value("perfect", false) || 2 * m.size() == n;
  }
  if (type == "rotation_system") {
    RotationSystem r{j.at("order").get<std::vector<std::vector<int>>>()};
    return verify_embedding(g, r);
  }
  if (type == "kuratowski") {
    KuratowskiWitness w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "K5" && kind != "K33") return false;
    w.kind = kind == "K5" ? KuratowskiKind::kK5 : KuratowskiKind::kK33;
    w.branch_vertices = j.at("branch_vertices").get<std::vector<int>>();
    w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
    const KuratowskiCheck c = check_kuratowski(g, w);
    why = c.reason;
    return c.ok;
  }
  if (type == "critical_difference") {
    const int d = j.at("d").get<int>();
    const int id = j.at("id").get<int>();
    const VertexSet x = parse_set(n, j.at("critical_set"));
    const VertexSet i = parse_set(n, j.at("critical_independent_set"));
    return d == id && difference(g, x) == d && difference(g, i) == id && is_independent(g, i) &&
           fast_critical_difference(g) == d;
  }
  if (type == "criticality") return verify_criticality(g, j);
  if (type == "degree_bound") return verify_degree_bound(g, j);
  if (type == "degree_lemma") return verify_degree_lemma_json(g, j);
  if (type == "two_bicritical") return is_two_bicritical(g).two_bicritical == j.at("value").get<bool>();
  if (type == "double_minimal") {
    const DoubleCriticalReport r = conjecture_double_critical_scan(g);
    return r.levels == j.at("levels").get<std::vector<int>>() && r.complete == j.at("complete").get<bool>();
  }
  why = "unknown certificate type " + type;
  return false;
}

}  // namespace

std::string certificate_json(const OneTwoFactor& f) {
  json comps = json::array();
  for (const auto& c : f.components) comps.push_back(c.vertices);
  return json{{"type", "one_two_factor"}, {"components", comps}}.dump();
}

std::string certificate_json(const DeficiencyCertificate& c) {
  return json{{"type", "deficiency"}, {"set", set_json(c.set)}, {"isolated", c.isolated}, {"k", c.k}}.dump();
}

std::string certificate_json(const HallViolator& h) {
  return json{{"type", "hall_violator"}, {"set", set_json(h.set)}, {"neighborhood_size", h.neighborhood_size}}
      .dump();
}

std::string certificate_json(const TutteViolator& t, const VertexSet& deleted) {
  return json{{"type", "tutte_violator"},
              {"deleted", set_json(deleted)},
              {"set", set_json(t.set)},
              {"odd_count", t.odd_count}}
      .dump();
}

std::string certificate_json(const Matching& m) {
  json pairs = json::array();
  for (const auto& e : m.pairs) pairs.push_back(edge_json(e));
  return json{{"type", "matching"}, {"pairs", pairs}}.dump();
}

std::string certificate_json(const RotationSystem& r) {
  return json{{"type", "rotation_system"}, {"order", r.order}}.dump();
}

std::string certificate_json(const KuratowskiWitness& w) {
  return json{{"type", "kuratowski"},
              {"kind", w.kind == KuratowskiKind::kK5 ? "K5" : "K33"},
              {"branch_vertices", w.branch_vertices},
              {"paths", w.paths}}
      .dump();
}

std::string certificate_json(const CriticalPair& p) {
  return json{{"type", "critical_difference"},
              {"d", p.d},
              {"id", p.id},
              {"critical_set", set_json(p.critical_set)},
              {"critical_independent_set", set_json(p.critical_independent_set)}}
      .dump();
}

std::string certificate_json(const CriticalityReport& r) {
  json j{{"type", "criticality"},
         {"k", r.k},
         {"mode", mode_name(r.mode)},
         {"critical", r.is_critical},
         {"min_degree", r.min_degree.degree},
         {"min_degree_vertex", r.min_degree.vertex},
         {"bound_status", r.bound_status}};
  if (r.failing_set) j["failing_set"] = set_json(*r.failing_set);
  if (r.certificate) j["certificate"] = json::parse(certificate_json(*r.certificate));
  if (r.inner_violator) {
    j["inner_violator"] = json::parse(certificate_json(*r.inner_violator, *r.failing_set));
  }
  if (r.parity_failure) j["parity_failure"] = true;
  if (r.is_minimal) j["minimal"] = *r.is_minimal;
  if (r.non_minimal_edge) j["non_minimal_edge"] = edge_json(*r.non_minimal_edge);
  if (!r.audits.empty()) {
    json audits = json::array();
    for (const auto& a : r.audits) audits.push_back(audit_json(a));
    j["audits"] = audits;
  }
  return j.dump();
}

std::string certificate_json(const DegreeBoundCheck& c) {
  json j{{"type", "degree_bound"},
         {"context", context_name(c.context)},
         {"k", c.k},
         {"outcome", outcome_name(c.outcome)},
         {"min_degree", c.min_degree.degree},
         {"min_degree_vertex", c.min_degree.vertex},
         {"lower", c.lower}};
  if (c.upper) j["upper"] = *c.upper;
  if (!c.failed_hypothesis.empty()) j["failed_hypothesis"] = c.failed_hypothesis;
  if (c.breaking_edge) j["breaking_edge"] = edge_json(*c.breaking_edge);
  return j.dump();
}

std::string certificate_json(const DegreeLemmaResult& r, const VertexSet& a, const VertexSet& b,
                             DegreeLemmaVariant variant, const std::optional<EdgeRef>& extra_edge) {
  json j{{"type", "degree_lemma"},
         {"variant", variant_name(variant)},
         {"a", set_json(a)},
         {"b", set_json(b)},
         {"low_degree", r.low_degree},
         {"edges", r.edges},
         {"bound", r.bound},
         {"edge_bound_holds", r.edge_bound_holds}};
  if (r.low_vertex) j["low_vertex"] = *r.low_vertex;
  if (extra_edge) j["extra_edge"] = edge_json(*extra_edge);
  return j.dump();
}

bool verify_certificate_json(const Graph& g, std::string_view text, std::string* reason) {
  std::string why;
  bool ok = false;
  try {
    ok = verify_parsed(g, json::parse(text), why);
  } catch (const std::exception& e) {
    why = e.what();
    ok = false;
  }
  if (!ok && reason) *reason = why.empty() ? "certificate does not verify" : why;
  return ok;
}

}  // namespace sachs
