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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are checked against wall-clock time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "sachs/certificates.hpp"
#include "sachs/cli.hpp"
#include "sachs/criticality.hpp"
#include "sachs/enumerate.hpp"
#include "sachs/graph_io.hpp"
#include "sachs/harness.hpp"
#include "sachs/planarity.hpp"
#include "sachs/sachs_factor.hpp"

using namespace sachs;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> run;
};

// Digests of the campaign runs at one worker, compared again at eight.
std::map<std::string, std::string> g_digests;

CampaignResult scan(const std::string& name, bool hunt, int n_max, int workers) {
  ScanConfig c;
  c.limits.n_max = n_max;
  c.workers = workers;
  c.keep_records = false;
  return hunt ? run_hunt(name, c) : run_campaign(name, c);
}

CampaignResult scan_recorded(const std::string& name, bool hunt, int n_max, Outcome& o) {
  const CampaignResult r = scan(name, hunt, n_max, 1);
  g_digests[name] = r.digest;
  std::ostringstream s;
  s << name << ": scanned " << r.scanned << ", hypothesis " << r.hypothesis_count << ", pass " << r.passes
    << ", fail " << r.failures << ", skipped " << r.skipped << ", digest " << r.digest;
  o.note(s.str());
  return r;
}

void require_clean(const CampaignResult& r, Outcome& o) {
  o.require(r.failures == 0, r.id + " has zero failures");
  o.require(r.counterexamples.empty(), r.id + " has zero counterexamples");
  o.require(r.skipped == 0, r.id + " skipped no graph");
  o.require(r.hypothesis_count > 0, r.id + " met its hypothesis at least once");
}

int cli_exit(std::vector<std::string> args) {
  args.insert(args.begin(), "sachs-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in;
  return cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

// Number of unlabeled graphs on n vertices by Burnside's lemma: the average
// over all permutations of 2^(cycles on vertex pairs).
long long burnside_count(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  long long perms = 0;
  do {
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (seen.count({i, j})) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen.count({std::min(a, b), std::max(a, b)})) {
          seen.insert({std::min(a, b), std::max(a, b)});
          a = p[a];
          b = p[b];
        }
      }
    total += 1LL << cycles;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

void criterion_complete_family(Outcome& o) {
  for (int n = 4; n <= 8; ++n) {
    const Graph kn = complete_graph(n);
    for (int k : {n - 3, n - 2}) {
      const auto r = analyze_criticality(kn, k, CriticalityMode::kSachs, true);
      const std::string tag = "K" + std::to_string(n) + " at k=" + std::to_string(k);
      o.require(r.is_critical, tag + " critical");
      o.require(r.is_minimal == true, tag + " minimal");
      o.require(verify_report(kn, r), tag + " report re-verifies");
      o.require(oracle::sachs_minimal(oracle::matrix_of(kn), k), tag + " minimal by brute force");
    }
  }
  o.note("K4..K8 minimal at k = n-3 and k = n-2");
}

void criterion_fixtures(Outcome& o) {
  const auto k4 = analyze_criticality(complete_graph(4), 1, CriticalityMode::kSachs, true);
  o.require(k4.is_minimal == true && k4.min_degree.degree == 3 && k4.bound_status == "k+2",
            "K4 minimal 1-critical with delta = 3 = k+2");

  const Graph k5 = complete_graph(5);
  const auto r5 = analyze_criticality(k5, 2, CriticalityMode::kSachs, true);
  o.require(r5.is_minimal == true && r5.min_degree.degree == 4 && r5.bound_status == "k+2",
            "K5 minimal 2-critical with delta = 4 = k+2");
  for (int v = 0; v < 5; ++v)
    o.require(is_planar(delete_vertices(k5, VertexSet::of(5, {v})).graph).planar(), "K5 - v planar");

  const auto& reg = FixtureRegistry::instance();
  const Fixture& fig = reg.get("figure3");
  const Graph& g = fig.graph;
  const auto verdict = is_planar(g);
  o.require(verdict.planar() && verify_embedding(g, verdict.embedding()), "figure-3 graph planar");
  const auto factor = has_one_two_factor(g);
  o.require(std::holds_alternative<OneTwoFactor>(factor) && validate_factor(g, std::get<OneTwoFactor>(factor)),
            "figure-3 graph has a {1,2}-factor");
  o.require(min_degree(g).degree == 3, "figure-3 delta = 3");
  o.require(is_k_sachs_critical(g, 0).critical, "figure-3 graph 0-critical");

  std::vector<int> s_members;
  for (const char* label : {"b", "d", "g"})
    for (std::size_t i = 0; i < fig.labels.size(); ++i)
      if (fig.labels[i] == label) s_members.push_back(static_cast<int>(i));
  int a = -1, c = -1;
  for (std::size_t i = 0; i < fig.labels.size(); ++i) {
    if (fig.labels[i] == "a") a = static_cast<int>(i);
    if (fig.labels[i] == "c") c = static_cast<int>(i);
  }
  o.require(s_members.size() == 3 && a >= 0 && c >= 0, "figure-3 labels present");
  if (s_members.size() == 3 && a >= 0 && c >= 0) {
    const Graph broken = delete_edge(g, EdgeRef(a, c));
    const VertexSet s = VertexSet::from_members(7, s_members);
    const int isolated = oracle::isolated(oracle::matrix_of(broken), oracle::all(7) & ~static_cast<std::uint32_t>(s.mask()));
    o.require(isolated == 4 && isolated > s.size(), "i((G-e)-S) = 4 > 3 for S = {b,d,g}");
    o.require(verify_deficiency(broken, DeficiencyCertificate{s, isolated, 0}), "certificate re-verifies");
    o.note("figure-3: i((G-ac)-{b,d,g}) = " + std::to_string(isolated));
  }
  for (const auto& check : reg.checks()) o.require(check.ok, check.fixture + ": " + check.property);
}

void criterion_main3(Outcome& o) { require_clean(scan_recorded("main3-planar-minimal", false, 8, o), o); }
void criterion_main_k0(Outcome& o) { require_clean(scan_recorded("main-k0-planar", false, 8, o), o); }
void criterion_obs5(Outcome& o) { require_clean(scan_recorded("obs5-lower-bound", false, 7, o), o); }

void criterion_oracles(Outcome& o) {
  const auto& seven = enumerate_graphs(7);
  const long long expected = burnside_count(7);
  o.require(static_cast<long long>(seven.size()) == 1044, "1044 graphs at n = 7");
  o.require(expected == 1044, "Burnside count at n = 7 is 1044");
  std::set<std::string> forms;
  for (const Graph& g : seven) forms.insert(oracle::brute_canonical(oracle::matrix_of(g)));
  o.require(forms.size() == seven.size(), "enumerated graphs pairwise non-isomorphic (brute-force canonical form)");
  for (int n = 1; n <= 5; ++n)
    o.require(enumerate_graphs(n).size() == oracle::isomorphism_classes(n),
              "labeled dedup count at n = " + std::to_string(n));
  o.note("n = 7: enumerated 1044, Burnside " + std::to_string(expected) + ", distinct brute-force forms " +
         std::to_string(forms.size()));
  require_clean(scan_recorded("oracle-equivalence", false, 7, o), o);
}

void criterion_planarity(Outcome& o) {
  require_clean(scan_recorded("planarity-certificates", false, 7, o), o);
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
           {"K5", complete_graph(5)}, {"K3,3", complete_bipartite(3, 3)}, {"Petersen", petersen_graph()}}) {
    const auto v = is_planar(g);
    o.require(!v.planar() && verify_kuratowski(g, v.witness()), name + " non-planar with verified witness");
  }
}

void criterion_degree_lemma(Outcome& o) { require_clean(scan_recorded("degree-lemma-sweep", false, 8, o), o); }

void criterion_hunts(Outcome& o) {
  const CampaignResult pokk = scan_recorded("pokk123kjk-general", true, 7, o);
  require_clean(pokk, o);

  const CampaignResult dm = scan_recorded("asdiouhn12-double-minimal", true, 7, o);
  o.require(dm.skipped == 0, "double-minimal hunt skipped no graph");

  // Independent census of doubly-minimal graphs.
  std::set<std::string> expected_noncomplete;
  int complete_found = 0;
  for (const Graph& g : enumerate_graphs_up_to(7, 1)) {
    const auto a = oracle::matrix_of(g);
    bool doubly = false;
    for (int t = 0; t + 1 < g.order() && !doubly; ++t)
      doubly = oracle::sachs_minimal(a, t) && oracle::sachs_minimal(a, t + 1);
    if (!doubly) continue;
    if (is_complete(g)) {
      ++complete_found;
    } else {
      expected_noncomplete.insert(emit_graph6(g));
    }
  }
  std::set<std::string> reported;
  for (const auto& c : dm.counterexamples) {
    const Graph g = parse_graph6(c.graph6);
    reported.insert(canonical_form(g));
    o.require(!is_complete(g), c.graph6 + " reported as non-complete");
    bool certs_ok = true;
    for (const auto& cert : json::parse(c.certificates)) certs_ok = certs_ok && verify_certificate_json(g, cert.dump());
    o.require(certs_ok, c.graph6 + " certificates re-verify");
    o.note("non-complete doubly-minimal graph " + c.graph6 + " at t = " + std::to_string(c.k) + ", " +
           std::to_string(c.k + 1) + " (certificates verified)");
  }
  o.require(reported == expected_noncomplete, "every non-complete doubly-minimal graph is surfaced");
  o.require(dm.passes == complete_found, "every complete doubly-minimal graph is confirmed");
  o.require(cli_exit({"hunt", "asdiouhn12-double-minimal", "--n-max", "7", "--quiet"}) ==
                (expected_noncomplete.empty() ? kExitHolds : kExitContradiction),
            "hunt exit status");
  o.note("complete doubly-minimal graphs: " + std::to_string(complete_found) +
         "; non-complete candidates: " + std::to_string(expected_noncomplete.size()));
}

void criterion_determinism(Outcome& o) {
  const std::vector<std::pair<std::string, bool>> runs{
      {"main3-planar-minimal", false}, {"main-k0-planar", false},   {"obs5-lower-bound", false},
      {"oracle-equivalence", false},   {"planarity-certificates", false}, {"degree-lemma-sweep", false},
      {"pokk123kjk-general", true},    {"asdiouhn12-double-minimal", true}};
  for (const auto& [name, hunt] : runs) {
    const int n_max = (name == "main3-planar-minimal" || name == "main-k0-planar" || name == "degree-lemma-sweep") ? 8 : 7;
    if (!g_digests.count(name)) g_digests[name] = scan(name, hunt, n_max, 1).digest;
    const std::string eight = scan(name, hunt, n_max, 8).digest;
    o.require(eight == g_digests[name], name + " digest identical at 1 and 8 workers");
    o.note(name + ": " + g_digests[name] + " / " + eight);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "-v" || std::string(argv[i]) == "--verbose") verbose = true;

  const std::vector<Criterion> criteria{
      {1, "complete graphs minimal (n-3)- and (n-2)-critical, n = 4..8", 60, criterion_complete_family},
      {2, "extremal fixtures K4, K5 and the figure-3 graph", 5, criterion_fixtures},
      {3, "planar minimal campaign, n <= 8: k+1 <= delta <= k+2", 30 * 60, criterion_main3},
      {4, "planar breaking-edge campaign at k = 0, n <= 8: delta <= 3", 15 * 60, criterion_main_k0},
      {5, "lower-bound campaign, n <= 7: delta >= k+1", 10 * 60, criterion_obs5},
      {6, "oracle equivalence, n <= 7", 10 * 60, criterion_oracles},
      {7, "planarity certificates, n <= 7", 10 * 60, criterion_planarity},
      {8, "planar bipartite degree lemmas, |A|+|B| <= 8", 10 * 60, criterion_degree_lemma},
      {9, "conjecture hunts, n <= 7", 30 * 60, criterion_hunts},
      {10, "digests identical at 1 and 8 workers", 0, criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "time limit " + std::to_string(c.limit_s) + " s");
    if (!o.ok) ++failed;
    std::printf("[%s] %2d  %s  (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (const auto& n : o.notes)
      if (verbose || !o.ok || n.rfind("failed", 0) == 0 || n.rfind("non-complete", 0) == 0)
        std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
