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

#include "sachs/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sachs/certificates.hpp"
#include "sachs/critical_structure.hpp"
#include "sachs/criticality.hpp"
#include "sachs/error.hpp"
#include "sachs/graph_io.hpp"
#include "sachs/harness.hpp"
#include "sachs/planarity.hpp"
#include "sachs/sachs_factor.hpp"

namespace sachs {

using nlohmann::json;

namespace {

struct GraphInput {
  std::string graph6;
  std::string edges_path;
};

struct Options {
  GraphInput input;
  int k = 0;
  std::string mode = "sachs";
  std::string json_path;
  std::string context;
  std::string name;
  int workers = 0;
  int n_min = 1;
  int n_max = 7;
  int k_max = -1;
  int time_budget_ms = 0;
  std::string input_path;
  bool stream = false;
  bool quiet = false;
  int gap = 1;
  std::string planarity = "any";
  std::string kind = "breaking-edge";
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph load_graph(const GraphInput& gi, std::istream& in) {
  if (!gi.graph6.empty()) return parse_graph6(gi.graph6);
  if (gi.edges_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
  }
  if (!gi.edges_path.empty()) return parse_edge_list(read_file(gi.edges_path));
  Graph6Reader reader(in);
  if (auto g = reader.next()) return *g;
  throw Error(ErrorCode::kParseError, "no graph given (use --graph6, --edges or standard input)");
}

CriticalityMode parse_mode_flag(const std::string& s) {
  if (s == "sachs") return CriticalityMode::kSachs;
  if (s == "pm" || s == "perfect_matching" || s == "perfect-matching") return CriticalityMode::kPerfectMatching;
  throw Error(ErrorCode::kInvalidArgument, "unknown mode '" + s + "'");
}

std::string edge_text(const EdgeRef& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string factor_text(const OneTwoFactor& f) {
  std::string s;
  for (const auto& c : f.components) {
    s += c.is_edge() ? "[" : "(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? " " : "") + std::to_string(c.vertices[i]);
    s += c.is_edge() ? "] " : ") ";
  }
  if (!s.empty()) s.pop_back();
  return s;
}

// One-record report in the campaign schema.
void write_single_json(const std::string& path, const std::string& task, const Graph& g, const std::string& verdict,
                       const std::vector<std::string>& certificates) {
  if (path.empty()) return;
  json certs = json::array();
  for (const auto& c : certificates) certs.push_back(json::parse(c));
  json doc{{"schema", kSchemaVersion},
           {"records",
            json::array({{{"graph6", emit_graph6(g)},
                          {"task", task},
                          {"verdict", verdict},
                          {"certificates", certs},
                          {"timings", json::object()}}})}};
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  f << doc.dump(2) << '\n';
}

int cmd_factor(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o.input, in);
  const auto r = has_one_two_factor(g);
  if (const auto* f = std::get_if<OneTwoFactor>(&r)) {
    out << "factor: " << factor_text(*f) << '\n';
    write_single_json(o.json_path, "factor", g, "holds", {certificate_json(*f)});
    return kExitHolds;
  }
  const HallViolator& h = std::get<HallViolator>(r);
  const DeficiencyCertificate c = deficiency_from_hall(g, h);
  out << "no {1,2}-factor\n";
  out << "hall violator: " << h.set.to_string() << " has " << h.neighborhood_size << " neighbors\n";
  out << "deficiency: S = " << c.set.to_string() << ", i(G-S) = " << c.isolated << " > |S| = " << c.set.size() << '\n';
  write_single_json(o.json_path, "factor", g, "fails", {certificate_json(h), certificate_json(c)});
  return kExitFails;
}

void print_report(const CriticalityReport& r, std::ostream& out) {
  out << "k = " << r.k << ", mode = " << mode_name(r.mode) << '\n';
  out << "critical: " << (r.is_critical ? "yes" : "no") << '\n';
  if (r.failing_set) out << "failing set: " << r.failing_set->to_string() << '\n';
  if (r.parity_failure) out << "n - k is odd, no perfect matching can exist\n";
  if (r.certificate) {
    out << "deficiency: T = " << r.certificate->set.to_string() << ", i(G-T) = " << r.certificate->isolated
        << " > |T| - k = " << r.certificate->set.size() - r.k << '\n';
  }
  if (r.inner_violator) {
    out << "tutte violator in G-S: " << r.inner_violator->set.to_string() << " leaves " << r.inner_violator->odd_count
        << " odd components\n";
  }
  if (r.is_minimal) out << "minimal: " << (*r.is_minimal ? "yes" : "no") << '\n';
  if (r.non_minimal_edge) out << "removable edge: " << edge_text(*r.non_minimal_edge) << '\n';
  out << "min degree: " << r.min_degree.degree << " (vertex " << r.min_degree.vertex << "), " << r.bound_status
      << '\n';
}

int cmd_critical(const Options& o, std::ostream& out, std::istream& in, bool minimal) {
  const Graph g = load_graph(o.input, in);
  const CriticalityReport r = analyze_criticality(g, o.k, parse_mode_flag(o.mode), minimal);
  print_report(r, out);
  const bool holds = minimal ? r.is_minimal.value_or(false) : r.is_critical;
  write_single_json(o.json_path, minimal ? "minimal" : "critical", g, holds ? "holds" : "fails",
                    {certificate_json(r)});
  return holds ? kExitHolds : kExitFails;
}

int cmd_planar(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o.input, in);
  const PlanarityVerdict v = is_planar(g);
  if (v.planar()) {
    const EmbeddingReport rep = trace_embedding(g, v.embedding());
    out << "planar: yes, " << rep.faces << " faces over " << rep.components << " components\n";
    for (std::size_t u = 0; u < v.embedding().order.size(); ++u) {
      out << "  " << u << ":";
      for (int w : v.embedding().order[u]) out << ' ' << w;
      out << '\n';
    }
    write_single_json(o.json_path, "planar", g, "holds", {certificate_json(v.embedding())});
    return kExitHolds;
  }
  const KuratowskiWitness& w = v.witness();
  out << "planar: no, " << (w.kind == KuratowskiKind::kK5 ? "K5" : "K3,3") << " subdivision\n";
  out << "branch vertices:";
  for (int b : w.branch_vertices) out << ' ' << b;
  out << '\n';
  for (const auto& p : w.paths) {
    out << "  path:";
    for (int x : p) out << ' ' << x;
    out << '\n';
  }
  write_single_json(o.json_path, "planar", g, "fails", {certificate_json(w)});
  return kExitFails;
}

int cmd_kplanar(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o.input, in);
  const KPlanarityResult r = is_k_planar(g, o.k);
  if (r.k_planar) {
    out << o.k << "-planar: yes\n";
    write_single_json(o.json_path, "kplanar", g, "holds", {});
    return kExitHolds;
  }
  out << o.k << "-planar: no, G - " << r.failing_set->to_string() << " contains a "
      << (r.witness->kind == KuratowskiKind::kK5 ? "K5" : "K3,3") << " subdivision\n";
  write_single_json(o.json_path, "kplanar", g, "fails", {certificate_json(*r.witness)});
  return kExitFails;
}

int cmd_critdiff(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o.input, in);
  const CriticalPair p = critical_difference(g);
  out << "d = " << p.d << ", id = " << p.id << '\n';
  out << "critical set: " << p.critical_set.to_string() << '\n';
  out << "critical independent set: " << p.critical_independent_set.to_string() << '\n';
  out << "fast d = " << fast_critical_difference(g) << '\n';
  write_single_json(o.json_path, "critdiff", g, "holds", {certificate_json(p)});
  return kExitHolds;
}

int cmd_bounds(const Options& o, std::ostream& out, std::istream& in) {
  const Graph g = load_graph(o.input, in);
  const DegreeBoundCheck c = check_degree_bounds(g, o.k, parse_context(o.context));
  out << context_name(c.context) << " at k = " << c.k << ": " << outcome_name(c.outcome) << '\n';
  if (!c.failed_hypothesis.empty()) out << "failed hypothesis: " << c.failed_hypothesis << '\n';
  out << "min degree " << c.min_degree.degree << ", interval [" << c.lower << ", "
      << (c.upper ? std::to_string(*c.upper) : std::string("inf")) << "]\n";
  if (c.breaking_edge) out << "breaking edge: " << edge_text(*c.breaking_edge) << '\n';
  write_single_json(o.json_path, "bounds", g, std::string(outcome_name(c.outcome)), {certificate_json(c)});
  switch (c.outcome) {
    case BoundOutcome::kPass:
      return kExitHolds;
    case BoundOutcome::kHypothesisFail:
      return kExitFails;
    case BoundOutcome::kBoundViolation:
      return kExitContradiction;
  }
  return kExitFails;
}

int cmd_scan(const Options& o, std::ostream& out, std::istream& in, bool hunt) {
  ScanConfig config;
  config.limits = {o.n_min, o.n_max, o.k_max, o.time_budget_ms};
  config.workers = o.workers;
  if (o.stream) {
    config.graphs = load_graph6_stream(in);
  } else if (!o.input_path.empty()) {
    std::ifstream f(o.input_path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + o.input_path);
    config.graphs = load_graph6_stream(f);
  }
  const CampaignResult r = hunt ? run_hunt(o.name, config) : run_campaign(o.name, config);
  out << r.id << ": scanned " << r.scanned << ", hypothesis " << r.hypothesis_count << ", pass " << r.passes
      << ", fail " << r.failures << ", skipped " << r.skipped << '\n';
  out << "digest " << r.digest << '\n';
  if (r.counterexamples.empty()) {
    out << (hunt ? "no counterexample up to limits\n" : "no violations\n");
  } else {
    for (const auto& c : r.counterexamples) {
      out << "COUNTEREXAMPLE " << c.graph6 << " k=" << c.k << ": " << c.detail << '\n';
      if (!o.quiet) out << "  " << c.certificates << '\n';
    }
  }
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + o.json_path);
    write_campaign_json(r, f);
  }
  return r.clean() ? kExitHolds : kExitContradiction;
}

int cmd_fixtures(std::ostream& out) {
  const FixtureRegistry& reg = FixtureRegistry::instance();
  for (const Fixture& f : reg.fixtures()) {
    out << f.name << "  " << emit_graph6(f.graph) << "  " << f.description << '\n';
    if (!f.labels.empty()) {
      out << "  labels:";
      for (std::size_t i = 0; i < f.labels.size(); ++i) out << ' ' << i << '=' << f.labels[i];
      out << '\n';
    }
    if (f.distinguished_edge) out << "  distinguished edge: " << edge_text(*f.distinguished_edge) << '\n';
    if (f.highlighted_set) out << "  highlighted set: " << f.highlighted_set->to_string() << '\n';
  }
  bool all = true;
  for (const FixtureCheck& c : reg.checks()) {
    out << (c.ok ? "ok   " : "FAIL ") << c.fixture << ": " << c.property << '\n';
    all = all && c.ok;
  }
  return all ? kExitHolds : kExitContradiction;
}

int cmd_encode(const Options& o, std::ostream& out, std::istream& in) {
  std::string text;
  if (!o.input.edges_path.empty() && o.input.edges_path != "-") {
    text = read_file(o.input.edges_path);
  } else {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  out << emit_graph6(parse_edge_list(text)) << '\n';
  return kExitHolds;
}

int cmd_decode(const Options& o, std::ostream& out, std::istream& in) {
  out << emit_edge_list(load_graph(o.input, in));
  return kExitHolds;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  ExtremalProfile p;
  p.k = o.k;
  p.gap = o.gap;
  if (o.planarity == "any") {
    p.planarity = PlanarityClass::kAny;
  } else if (o.planarity == "planar") {
    p.planarity = PlanarityClass::kPlanar;
  } else if (o.planarity == "k-planar") {
    p.planarity = PlanarityClass::kKPlanar;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown planarity class '" + o.planarity + "'");
  }
  if (o.kind == "breaking-edge") {
    p.kind = ExtremalKind::kBreakingEdge;
  } else if (o.kind == "minimal") {
    p.kind = ExtremalKind::kMinimal;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown kind '" + o.kind + "'");
  }
  const auto found = find_extremal_examples(p, {o.n_min, o.n_max, -1, 0});
  for (const auto& s : found) out << s << '\n';
  out << found.size() << " graphs\n";
  return kExitHolds;
}

void add_graph_flags(CLI::App* sub, Options& o) {
  sub->add_option("--graph6", o.input.graph6, "graph in graph6 format");
  sub->add_option("--edges", o.input.edges_path, "edge-list file (\"n m\" then m lines \"u v\"), - for standard input");
  sub->add_option("--json", o.json_path, "write a JSON report to this path");
}

void add_scan_flags(CLI::App* sub, Options& o) {
  sub->add_option("name", o.name, "campaign or conjecture name")->required();
  sub->add_option("--n-min", o.n_min, "smallest order for builtin enumeration");
  sub->add_option("--n-max", o.n_max, "largest order for builtin enumeration (<= 8)");
  sub->add_option("--k-max", o.k_max, "largest k to check");
  sub->add_option("--workers", o.workers, "worker threads (default: SACHS_LAB_WORKERS or all cores)");
  sub->add_option("--time-budget-ms", o.time_budget_ms, "per-graph time budget; slower graphs are skipped");
  sub->add_option("--input", o.input_path, "graph6 file to scan instead of builtin enumeration");
  sub->add_flag("--stream", o.stream, "read graph6 lines from standard input");
  sub->add_option("--json", o.json_path, "write the campaign JSON report to this path");
  sub->add_flag("--quiet", o.quiet, "omit counterexample certificates from text output");
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Decide and certify {1,2}-factor properties of small graphs"};
  app.name("sachs-lab");
  app.require_subcommand(1, 1);
  Options o;

  auto* factor = app.add_subcommand("factor", "find a {1,2}-factor or a deficiency certificate");
  add_graph_flags(factor, o);
  auto* critical = app.add_subcommand("critical", "decide k-criticality");
  auto* minimal = app.add_subcommand("minimal", "decide minimal k-criticality");
  for (auto* sub : {critical, minimal}) {
    add_graph_flags(sub, o);
    sub->add_option("-k", o.k, "number of deleted vertices")->required();
    sub->add_option("--mode", o.mode, "sachs or pm (perfect matching)");
  }
  auto* planar = app.add_subcommand("planar", "planarity with certificate");
  add_graph_flags(planar, o);
  auto* kplanar = app.add_subcommand("kplanar", "planarity of every k-vertex deletion");
  add_graph_flags(kplanar, o);
  kplanar->add_option("-k", o.k, "number of deleted vertices")->required();
  auto* critdiff = app.add_subcommand("critdiff", "critical difference and critical independence difference");
  add_graph_flags(critdiff, o);
  auto* bounds = app.add_subcommand("bounds", "check a minimum-degree bound under a named hypothesis set");
  add_graph_flags(bounds, o);
  bounds->add_option("-k", o.k, "criticality level")->required();
  bounds->add_option("--context", o.context, "hypothesis set")->required();
  auto* campaign = app.add_subcommand("campaign", "verify a theorem over many graphs");
  add_scan_flags(campaign, o);
  auto* hunt = app.add_subcommand("hunt", "search for counterexamples to a conjecture");
  add_scan_flags(hunt, o);
  auto* fixtures = app.add_subcommand("fixtures", "list the built-in graphs and their self-checks");
  auto* encode = app.add_subcommand("encode", "edge list to graph6");
  encode->add_option("--edges", o.input.edges_path, "edge-list file (default: standard input)");
  auto* decode = app.add_subcommand("decode", "graph6 to edge list");
  decode->add_option("--graph6", o.input.graph6, "graph in graph6 format (default: standard input)");
  auto* extremal = app.add_subcommand("extremal", "list graphs attaining a degree profile");
  extremal->add_option("-k", o.k, "criticality level");
  extremal->add_option("--gap", o.gap, "required delta - k");
  extremal->add_option("--planarity", o.planarity, "any, planar or k-planar");
  extremal->add_option("--kind", o.kind, "breaking-edge or minimal");
  extremal->add_option("--n-min", o.n_min, "smallest order");
  extremal->add_option("--n-max", o.n_max, "largest order (<= 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "sachs-lab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (factor->parsed()) return cmd_factor(o, out, in);
    if (critical->parsed()) return cmd_critical(o, out, in, false);
    if (minimal->parsed()) return cmd_critical(o, out, in, true);
    if (planar->parsed()) return cmd_planar(o, out, in);
    if (kplanar->parsed()) return cmd_kplanar(o, out, in);
    if (critdiff->parsed()) return cmd_critdiff(o, out, in);
    if (bounds->parsed()) return cmd_bounds(o, out, in);
    if (campaign->parsed()) return cmd_scan(o, out, in, false);
    if (hunt->parsed()) return cmd_scan(o, out, in, true);
    if (fixtures->parsed()) return cmd_fixtures(out);
    if (encode->parsed()) return cmd_encode(o, out, in);
    if (decode->parsed()) return cmd_decode(o, out, in);
    if (extremal->parsed()) return cmd_extremal(o, out);
  } catch (const Error& e) {
    err << "sachs-lab: " << e.what() << '\n';
    return e.code() == ErrorCode::kContradictionDetected ? kExitContradiction : kExitUsage;
  } catch (const std::exception& e) {
    err << "sachs-lab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sachs
