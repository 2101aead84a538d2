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

#ifndef SACHS_HARNESS_HPP_
#define SACHS_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

inline constexpr std::string_view kSchemaVersion = "sachs-lab/1";

struct ScanLimits {
  int n_min = 1;
  int n_max = 7;            // builtin enumeration stops at 8
  int k_max = -1;           // -1: every k the campaign allows
  int time_budget_ms = 0;   // per graph; 0 disables the budget
};

struct ScanConfig {
  // Graphs to scan. Empty means builtin enumeration of n_min..n_max.
  std::optional<std::vector<Graph>> graphs;
  ScanLimits limits;
  int workers = 0;  // 0: SACHS_LAB_WORKERS, else hardware concurrency
  bool keep_records = true;
};

// One line of the audit trail. `certificates` holds a JSON array.
struct ScanRecord {
  std::string graph6;
  std::string task;
  std::string verdict;  // pass | fail | hypothesis_fail | skipped | counterexample
  std::string certificates;
  double elapsed_ms = 0;
};

struct Counterexample {
  std::string graph6;
  int k = -1;
  std::string detail;
  std::string certificates;  // JSON array
};

struct CampaignResult {
  std::string id;
  long scanned = 0;
  long hypothesis_count = 0;
  long passes = 0;
  long failures = 0;
  long skipped = 0;
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0;
  std::string digest;  // FNV-1a over records, timings excluded
  std::vector<ScanRecord> records;

  bool clean() const noexcept { return failures == 0 && counterexamples.empty(); }
};

std::vector<std::string> campaign_names();
std::vector<std::string> hunt_names();

// Throws InvalidArgument for an unknown name, SizeLimitExceeded for a builtin
// range past the enumeration limit.
CampaignResult run_campaign(std::string_view name, const ScanConfig& config);
CampaignResult run_hunt(std::string_view name, const ScanConfig& config);

// Worker count after the environment override; always >= 1.
int resolve_workers(int requested);

// {"schema": ..., "summary": {...}, "records": [...]}
std::string campaign_json(const CampaignResult& r);
void write_campaign_json(const CampaignResult& r, std::ostream& out);

// Reads graph6 lines; errors carry the line number.
std::vector<Graph> load_graph6_stream(std::istream& in);

enum class PlanarityClass { kAny, kPlanar, kKPlanar };
enum class ExtremalKind { kBreakingEdge, kMinimal };

struct ExtremalProfile {
  int k = 0;
  int gap = 1;  // required delta - k
  PlanarityClass planarity = PlanarityClass::kAny;
  ExtremalKind kind = ExtremalKind::kBreakingEdge;
};

// graph6 strings (enumeration order) of every graph in range that is
// k-critical, meets the planarity class and kind, and has delta = k + gap.
std::vector<std::string> find_extremal_examples(const ExtremalProfile& profile, const ScanLimits& limits);

struct Fixture {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;  // empty: vertices are printed as numbers
  std::optional<EdgeRef> distinguished_edge;
  std::optional<VertexSet> highlighted_set;
  std::string description;
};

struct FixtureCheck {
  std::string fixture;
  std::string property;
  bool ok = false;
};

class FixtureRegistry {
 public:
  // Builds the named graphs and runs their self-checks; throws
  // ContradictionDetected if any check fails.
  static const FixtureRegistry& instance();

  const std::vector<Fixture>& fixtures() const noexcept { return fixtures_; }
  const Fixture& get(std::string_view name) const;  // throws InvalidArgument
  const std::vector<FixtureCheck>& checks() const noexcept { return checks_; }

  // The documented properties, recomputed.
  static std::vector<FixtureCheck> self_check(const std::vector<Fixture>& fixtures);

 private:
  FixtureRegistry();
  std::vector<Fixture> fixtures_;
  std::vector<FixtureCheck> checks_;
};

}  // namespace sachs

#endif  // SACHS_HARNESS_HPP_
