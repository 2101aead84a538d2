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

#include "sachs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <thread>
#include <variant>

#include "json.hpp"
#include "json_support.hpp"
#include "sachs/certificates.hpp"
#include "sachs/critical_structure.hpp"
#include "sachs/criticality.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/error.hpp"
#include "sachs/graph_io.hpp"
#include "sachs/planarity.hpp"
#include "sachs/sachs_factor.hpp"

namespace sachs {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct BudgetExceeded {};

class Deadline {
 public:
  explicit Deadline(int budget_ms) : start_(Clock::now()), budget_ms_(budget_ms) {}

  void check() const {
    if (budget_ms_ > 0 && elapsed_ms() > budget_ms_) throw BudgetExceeded{};
  }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  int budget_ms_;
};

struct GraphOutcome {
  json certificates = json::array();
  long hypothesis = 0;
  long passes = 0;
  long failures = 0;
  bool skipped = false;
  bool error = false;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;

  std::string verdict() const {
    if (skipped) return "skipped";
    if (!counterexamples.empty()) return "counterexample";
    if (failures > 0 || error) return "fail";
    return hypothesis > 0 ? "pass" : "hypothesis_fail";
  }
};

using Evaluator = std::function<void(const Graph&, const ScanLimits&, const Deadline&, GraphOutcome&)>;

int k_cap(const Graph& g, const ScanLimits& limits) {
  const int top = g.order() - 1;
  return limits.k_max < 0 ? top : std::min(top, limits.k_max);
}

void add_counterexample(GraphOutcome& out, const Graph& g, int k, std::string detail, json certs) {
  out.counterexamples.push_back({emit_graph6(g), k, std::move(detail), certs.dump()});
}

// Degree-bound theorem or conjecture over a range of k.
Evaluator degree_evaluator(DegreeContext context, int k_lo, bool even_only) {
  return [=](const Graph& g, const ScanLimits& limits, const Deadline& deadline, GraphOutcome& out) {
    const int n = g.order();
    for (int k = k_lo; k <= k_cap(g, limits); ++k) {
      if (even_only && (n - k) % 2 != 0) continue;
      deadline.check();
      const DegreeBoundCheck c = check_degree_bounds(g, k, context);
      if (c.outcome == BoundOutcome::kHypothesisFail) continue;
      ++out.hypothesis;
      out.certificates.push_back(json::parse(certificate_json(c)));
      if (c.outcome == BoundOutcome::kPass) {
        ++out.passes;
        continue;
      }
      ++out.failures;
      const CriticalityMode mode = context == DegreeContext::kMinimalFactorCritical
                                       ? CriticalityMode::kPerfectMatching
                                       : CriticalityMode::kSachs;
      json certs = json::array({json::parse(certificate_json(c)),
                                json::parse(certificate_json(analyze_criticality(g, k, mode, true)))});
      add_counterexample(out, g, k,
                         "delta=" + std::to_string(c.min_degree.degree) + " outside [" + std::to_string(c.lower) +
                             ", " + (c.upper ? std::to_string(*c.upper) : std::string("inf")) + "]",
                         certs);
    }
  };
}

void double_minimal_evaluator(const Graph& g, const ScanLimits&, const Deadline& deadline, GraphOutcome& out) {
  deadline.check();
  const DoubleCriticalReport r = conjecture_double_critical_scan(g);
  if (r.status == DoubleCriticalStatus::kNone) return;
  ++out.hypothesis;
  json cert{{"type", "double_minimal"}, {"levels", r.levels}, {"complete", r.complete}};
  out.certificates.push_back(cert);
  if (r.status == DoubleCriticalStatus::kConsistent) {
    ++out.passes;
    return;
  }
  ++out.failures;
  json certs = json::array({cert});
  for (int t : r.levels) {
    certs.push_back(json::parse(certificate_json(analyze_criticality(g, t, CriticalityMode::kSachs, true))));
    certs.push_back(json::parse(certificate_json(analyze_criticality(g, t + 1, CriticalityMode::kSachs, true))));
  }
  add_counterexample(out, g, r.levels.front(), "minimal at two consecutive levels but not complete", certs);
}

bool hall_condition_bruteforce(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(detail::neighborhood_mask(g, s)) < std::popcount(s)) return false;
  }
  return true;
}

void oracle_evaluator(const Graph& g, const ScanLimits&, const Deadline& deadline, GraphOutcome& out) {
  deadline.check();
  ++out.hypothesis;
  std::vector<std::string> problems;
  const auto factor = has_one_two_factor(g);
  const bool matching_says = std::holds_alternative<OneTwoFactor>(factor);
  if (matching_says) {
    const auto& f = std::get<OneTwoFactor>(factor);
    if (!validate_factor(g, f)) problems.push_back("factor does not validate");
    out.certificates.push_back(json::parse(certificate_json(f)));
  } else {
    const DeficiencyCertificate c = deficiency_from_hall(g, std::get<HallViolator>(factor));
    out.certificates.push_back(json::parse(certificate_json(c)));
  }
  const bool subset_says = !deficiency_violator_bruteforce(g, 0).has_value();
  const bool hall_says = hall_condition_bruteforce(g);
  if (matching_says != subset_says || matching_says != hall_says) {
    problems.push_back("factor test, isolated-vertex condition and Hall condition disagree");
  }
  deadline.check();
  const CriticalPair cp = critical_difference(g);
  out.certificates.push_back(json::parse(certificate_json(cp)));
  if (fast_critical_difference(g) != cp.d) problems.push_back("fast critical difference differs");
  if ((cp.d == 0) != matching_says) problems.push_back("d(G) = 0 does not match factor existence");
  if (g.order() >= 2) {
    const TwoBicriticalResult tb = is_two_bicritical(g);
    out.certificates.push_back(json{{"type", "two_bicritical"}, {"value", tb.two_bicritical}});
  }
  if (problems.empty()) {
    ++out.passes;
    return;
  }
  ++out.failures;
  std::string detail;
  for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  add_counterexample(out, g, -1, detail, out.certificates);
}

void planarity_evaluator(const Graph& g, const ScanLimits&, const Deadline& deadline, GraphOutcome& out) {
  deadline.check();
  ++out.hypothesis;
  const PlanarityVerdict v = is_planar(g);
  std::string problem;
  const int n = g.order();
  if (v.planar()) {
    out.certificates.push_back(json::parse(certificate_json(v.embedding())));
    if (!verify_embedding(g, v.embedding())) problem = "rotation system fails Euler check";
    if (n >= 3 && g.size() > 3 * n - 6) problem = "planar verdict above 3n-6 edges";
    if (n >= 3 && !bipartition(g).empty() && g.size() > 2 * n - 4) problem = "planar bipartite above 2n-4 edges";
  } else {
    out.certificates.push_back(json::parse(certificate_json(v.witness())));
    const KuratowskiCheck c = check_kuratowski(g, v.witness());
    if (!c.ok) problem = "Kuratowski witness rejected: " + c.reason;
  }
  if (problem.empty()) {
    ++out.passes;
  } else {
    ++out.failures;
    add_counterexample(out, g, -1, problem, out.certificates);
  }
}

void degree_lemma_evaluator(const Graph& g, const ScanLimits&, const Deadline& deadline, GraphOutcome& out) {
  const int n = g.order();
  if (n < 3 || n > 16) return;
  const std::uint64_t all = detail::all_vertices(n);
  std::vector<char> sampled(4, 0);
  for (std::uint64_t amask = 0; amask <= all; ++amask) {
    const std::uint64_t bmask = all & ~amask;
    // the base graph must already be bipartite with sides A and B
    if ((detail::neighborhood_mask(g, amask) & amask) != 0 || (detail::neighborhood_mask(g, bmask) & bmask) != 0) {
      continue;
    }
    deadline.check();
    const int sa = std::popcount(amask);
    const int sb = n - sa;
    const VertexSet a = VertexSet::from_mask(n, amask);
    const VertexSet b = VertexSet::from_mask(n, bmask);
    auto run = [&](const Graph& h, DegreeLemmaVariant variant, std::optional<EdgeRef> e) {
      DegreeLemmaResult r;
      try {
        r = verify_degree_lemma(h, a, b, variant, e);
      } catch (const HypothesisViolated&) {
        return;
      }
      ++out.hypothesis;
      const bool ok = r.low_vertex.has_value() && r.edge_bound_holds;
      const auto slot = static_cast<std::size_t>(variant);
      if (!ok || !sampled[slot]) {
        out.certificates.push_back(json::parse(certificate_json(r, a, b, variant, e)));
        sampled[slot] = 1;
      }
      if (ok) {
        ++out.passes;
      } else {
        ++out.failures;
        add_counterexample(out, h, -1, "no vertex of degree <= 3 in A or edge bound fails",
                           json::array({json::parse(certificate_json(r, a, b, variant, e))}));
      }
    };
    if (sa == sb) run(g, DegreeLemmaVariant::kBalanced, std::nullopt);
    if (sa == sb - 1) run(g, DegreeLemmaVariant::kSmallerSide, std::nullopt);
    const bool larger = sb + 1 <= sa && sa <= sb + 2;
    const bool near = sb <= sa && sa <= sb + 1;
    if (!larger && !near) continue;
    const std::vector<int> members = a.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Graph h = g;
        h.add_edge(members[i], members[j]);
        const EdgeRef e(members[i], members[j]);
        if (larger) run(h, DegreeLemmaVariant::kEdgeInLargerSide, e);
        if (near) run(h, DegreeLemmaVariant::kEdgeInNearBalanced, e);
      }
    }
  }
}

struct Task {
  std::string name;
  Evaluator evaluate;
};

std::vector<Task> campaign_table() {
  return {
      {"main-k0-planar", degree_evaluator(DegreeContext::kBreakingEdgePlanar, 0, false)},
      {"main-kpos-kplanar", degree_evaluator(DegreeContext::kBreakingEdgeKPlanar, 1, false)},
      {"main2-deletion-planar", degree_evaluator(DegreeContext::kMinimalDeletionPlanar, 0, false)},
      {"main3-planar-minimal", degree_evaluator(DegreeContext::kMinimalPlanar, 0, false)},
      {"asd12300-small-k", degree_evaluator(DegreeContext::kMinimalSmallK, 0, false)},
      {"obs5-lower-bound", degree_evaluator(DegreeContext::kObservation, 0, false)},
      {"degree-lemma-sweep", degree_lemma_evaluator},
      {"oracle-equivalence", oracle_evaluator},
      {"planarity-certificates", planarity_evaluator},
  };
}

std::vector<Task> hunt_table() {
  return {
      {"pokk123kjk-general", degree_evaluator(DegreeContext::kMinimalGeneral, 0, false)},
      {"asdiouhn12-double-minimal", double_minimal_evaluator},
      {"conjetura-factor-critical", degree_evaluator(DegreeContext::kMinimalFactorCritical, 0, true)},
  };
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<const Graph*> collect_inputs(const ScanConfig& config) {
  std::vector<const Graph*> inputs;
  if (config.graphs) {
    for (const Graph& g : *config.graphs) inputs.push_back(&g);
    return inputs;
  }
  if (config.limits.n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kSizeLimitExceeded, "builtin enumeration stops at n = " +
                                                   std::to_string(kMaxEnumerationOrder) +
                                                   "; stream larger graphs instead");
  }
  for (int n = std::max(config.limits.n_min, 0); n <= config.limits.n_max; ++n) {
    for (const Graph& g : enumerate_graphs(n)) inputs.push_back(&g);
  }
  return inputs;
}

json record_json(const ScanRecord& r, bool with_timing) {
  json j{{"graph6", r.graph6}, {"task", r.task}, {"verdict", r.verdict}, {"certificates", json::parse(r.certificates)}};
  if (with_timing) j["timings"] = {{"ms", r.elapsed_ms}};
  return j;
}

CampaignResult run_task(const Task& task, const ScanConfig& config) {
  const auto wall_start = Clock::now();
  const std::vector<const Graph*> inputs = collect_inputs(config);
  std::vector<GraphOutcome> outcomes(inputs.size());
  parallel_for(inputs.size(), resolve_workers(config.workers), [&](std::size_t i) {
    const Graph& g = *inputs[i];
    GraphOutcome& out = outcomes[i];
    const Deadline deadline(config.limits.time_budget_ms);
    try {
      task.evaluate(g, config.limits, deadline, out);
    } catch (const BudgetExceeded&) {
      out = GraphOutcome{};
      out.skipped = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSizeLimitExceeded) {
        out = GraphOutcome{};
        out.skipped = true;
      } else {
        // a contradiction raised by a cross-check, or a broken certificate
        out.error = true;
        ++out.failures;
        add_counterexample(out, g, -1, e.what(), out.certificates);
      }
    }
    out.elapsed_ms = deadline.elapsed_ms();
  });

  CampaignResult result;
  result.id = task.name;
  std::uint64_t digest = fnv1a(task.name + "\n");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    GraphOutcome& out = outcomes[i];
    ++result.scanned;
    result.hypothesis_count += out.hypothesis;
    result.passes += out.passes;
    result.failures += out.failures;
    if (out.skipped) ++result.skipped;
    for (auto& c : out.counterexamples) result.counterexamples.push_back(std::move(c));
    ScanRecord rec{emit_graph6(*inputs[i]), task.name, out.verdict(), out.certificates.dump(), out.elapsed_ms};
    digest = fnv1a(record_json(rec, false).dump() + "\n", digest);
    if (config.keep_records) result.records.push_back(std::move(rec));
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  result.digest = hex;
  result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - wall_start).count();
  return result;
}

const Task& find_task(const std::vector<Task>& table, std::string_view name, std::string_view what) {
  for (const Task& t : table) {
    if (t.name == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown " + std::string(what) + " '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> campaign_names() {
  std::vector<std::string> out;
  for (const Task& t : campaign_table()) out.push_back(t.name);
  return out;
}

std::vector<std::string> hunt_names() {
  std::vector<std::string> out;
  for (const Task& t : hunt_table()) out.push_back(t.name);
  return out;
}

CampaignResult run_campaign(std::string_view name, const ScanConfig& config) {
  const auto table = campaign_table();
  return run_task(find_task(table, name, "campaign"), config);
}

CampaignResult run_hunt(std::string_view name, const ScanConfig& config) {
  const auto table = hunt_table();
  return run_task(find_task(table, name, "hunt"), config);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SACHS_LAB_WORKERS")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string campaign_json(const CampaignResult& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"graph6", c.graph6}, {"k", c.k}, {"detail", c.detail}, {"certificates", json::parse(c.certificates)}});
  }
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(record_json(rec, true));
  json j{{"schema", kSchemaVersion},
         {"summary",
          {{"campaign", r.id},
           {"scanned", r.scanned},
           {"hypothesis_count", r.hypothesis_count},
           {"passes", r.passes},
           {"failures", r.failures},
           {"skipped", r.skipped},
           {"counterexamples", cex},
           {"wall_ms", r.wall_ms},
           {"digest", r.digest}}},
         {"records", records}};
  return j.dump();
}

void write_campaign_json(const CampaignResult& r, std::ostream& out) { out << campaign_json(r) << '\n'; }

std::vector<Graph> load_graph6_stream(std::istream& in) { return read_graph6_stream(in); }

std::vector<std::string> find_extremal_examples(const ExtremalProfile& profile, const ScanLimits& limits) {
  ScanConfig config;
  config.limits = limits;
  std::vector<std::string> found;
  for (const Graph* gp : collect_inputs(config)) {
    const Graph& g = *gp;
    const int k = profile.k;
    if (k < 0 || k >= g.order()) continue;
    if (min_degree(g).degree != k + profile.gap) continue;
    if (!is_k_critical(g, k, CriticalityMode::kSachs)) continue;
    if (profile.planarity == PlanarityClass::kPlanar && !test_planarity(g)) continue;
    if (profile.planarity == PlanarityClass::kKPlanar && !is_k_planar(g, k).k_planar) continue;
    const bool keep = profile.kind == ExtremalKind::kMinimal
                          ? !removable_edge(g, k, CriticalityMode::kSachs).has_value()
                          : breaking_edge(g, k, CriticalityMode::kSachs).has_value();
    if (keep) found.push_back(emit_graph6(g));
  }
  return found;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

Graph figure3_graph() {
  // a b c d f g h -> 0..6
  const std::vector<EdgeRef> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5},
                                   {3, 5}, {3, 6}, {1, 6}, {5, 6}, {0, 3}, {0, 2}};
  return Graph::from_edges(7, edges);
}

}  // namespace

FixtureRegistry::FixtureRegistry() {
  fixtures_.push_back({"figure3", figure3_graph(), {"a", "b", "c", "d", "f", "g", "h"}, EdgeRef(0, 2),
                       VertexSet::of(7, {1, 3, 5}),
                       "planar 0-critical graph with delta = 3 whose edge ac breaks every {1,2}-factor"});
  fixtures_.push_back({"K2", complete_graph(2), {}, std::nullopt, std::nullopt, "single edge, delta = k+1 at k = 0"});
  fixtures_.push_back({"K3", complete_graph(3), {}, std::nullopt, std::nullopt, "triangle, delta = k+2 at k = 0"});
  fixtures_.push_back({"K4", complete_graph(4), {}, std::nullopt, std::nullopt, "minimal 1- and 2-critical"});
  fixtures_.push_back({"K5", complete_graph(5), {}, std::nullopt, std::nullopt,
                       "minimal 2- and 3-critical, non-planar, every K5 - v planar"});
  fixtures_.push_back({"K33", complete_bipartite(3, 3), {}, std::nullopt, std::nullopt, "non-planar"});
  fixtures_.push_back({"petersen", petersen_graph(), {}, std::nullopt, std::nullopt, "non-planar, perfect matching"});
  fixtures_.push_back({"C5", cycle_graph(5), {}, std::nullopt, std::nullopt, "minimal 1-critical, delta = k+1"});
  fixtures_.push_back({"C4", cycle_graph(4), {}, std::nullopt, std::nullopt, "has a factor, not 1-critical"});
  fixtures_.push_back({"K13", star_graph(3), {}, std::nullopt, std::nullopt, "no {1,2}-factor"});
  fixtures_.push_back({"P3", path_graph(3), {}, std::nullopt, std::nullopt, "no {1,2}-factor"});
  checks_ = self_check(fixtures_);
  for (const FixtureCheck& c : checks_) {
    if (!c.ok) throw Error(ErrorCode::kContradictionDetected, "fixture " + c.fixture + " fails: " + c.property);
  }
}

const FixtureRegistry& FixtureRegistry::instance() {
  static const FixtureRegistry registry;
  return registry;
}

const Fixture& FixtureRegistry::get(std::string_view name) const {
  for (const Fixture& f : fixtures_) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "no fixture named '" + std::string(name) + "'");
}

std::vector<FixtureCheck> FixtureRegistry::self_check(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureCheck> out;
  auto minimal_at = [](const Graph& g, int k) {
    return is_k_critical(g, k, CriticalityMode::kSachs) && !removable_edge(g, k, CriticalityMode::kSachs);
  };
  auto has_factor = [](const Graph& g) { return std::holds_alternative<OneTwoFactor>(has_one_two_factor(g)); };
  for (const Fixture& f : fixtures) {
    const Graph& g = f.graph;
    auto add = [&](std::string property, bool ok) { out.push_back({f.name, std::move(property), ok}); };
    if (f.name == "figure3") {
      add("planar", test_planarity(g));
      add("has a {1,2}-factor", has_factor(g));
      add("delta = 3", min_degree(g).degree == 3);
      const Graph ge = delete_edge(g, *f.distinguished_edge);
      const int isolated = isolated_count(delete_vertices(ge, *f.highlighted_set).graph);
      add("i((G-e)-S) = 4 > |S| = 3", isolated == 4 && f.highlighted_set->size() == 3);
      // triangle a c d, edges b f and g h
      const OneTwoFactor drawn{{FactorComponent{{0, 2, 3}}, FactorComponent{{1, 4}}, FactorComponent{{5, 6}}}};
      add("drawn factor is valid", validate_factor(g, drawn));
      add("G-e has no {1,2}-factor", !has_factor(ge));
    } else if (f.name == "K2") {
      add("minimal 0-critical", minimal_at(g, 0));
    } else if (f.name == "K3") {
      add("0-critical with delta = 2", is_k_critical(g, 0, CriticalityMode::kSachs) && min_degree(g).degree == 2);
    } else if (f.name == "K4") {
      add("minimal 1-critical", minimal_at(g, 1));
      add("minimal 2-critical", minimal_at(g, 2));
      add("planar", test_planarity(g));
    } else if (f.name == "K5") {
      add("non-planar", !test_planarity(g));
      add("minimal 2-critical", minimal_at(g, 2));
      add("minimal 3-critical", minimal_at(g, 3));
      add("K5 - v planar for every v", every_deletion_planar(g, 1));
    } else if (f.name == "K33" || f.name == "petersen") {
      add("non-planar", !test_planarity(g));
      if (f.name == "petersen") add("perfect matching of size 5", max_matching_general(g).size() == 5);
    } else if (f.name == "C5") {
      add("minimal 1-critical", minimal_at(g, 1));
      add("two-bicritical", is_two_bicritical(g).two_bicritical);
    } else if (f.name == "C4") {
      add("has a {1,2}-factor", has_factor(g));
      add("not 1-critical", !is_k_critical(g, 1, CriticalityMode::kSachs));
    } else if (f.name == "K13" || f.name == "P3") {
      add("no {1,2}-factor", !has_factor(g));
    }
  }
  return out;
}

}  // namespace sachs
