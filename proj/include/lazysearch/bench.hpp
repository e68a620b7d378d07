// Copyright 2026 The lazysearch Authors
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

#ifndef LAZYSEARCH_BENCH_HPP
#define LAZYSEARCH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lazysearch/scenario.hpp"
#include "lazysearch/search_tree.hpp"

namespace lazysearch {

/// One CSV row: a planner's work and result in one epoch.
struct RunRow {
  std::string scenario_id;
  std::size_t epoch = 0;
  std::string planner;
  std::uint64_t edge_evaluations = 0;
  std::uint64_t vertex_expansions = 0;
  std::uint64_t wall_time_us = 0;
  Cost path_cost = kInfinity;
  Cost oracle_cost = kInfinity;
  bool bound_ok = false;
};

struct RunOptions {
  /// Record wall time around each query. Off by default so output is
  /// reproducible byte for byte.
  bool timing = false;
  unsigned threads = 1;
  /// Re-check the lazy-weight invariants after every mutation.
  bool audit = false;
};

/// Per-planner instrumentation gathered over a whole run.
struct PlannerDiagnostics {
  std::string label;
  KernelCounters kernel;
  std::uint64_t audit_violations = 0;
  /// Edges failing the invariant scan at the end of some epoch.
  std::uint64_t scan_violations = 0;
  /// Epochs whose queue failed the full-scan invariant (small graphs only).
  std::uint64_t queue_violations = 0;
  /// Moving protocol: whether the agent arrived.
  bool reached_goal = true;
};

struct RunReport {
  std::vector<RunRow> rows;
  std::vector<PlannerDiagnostics> planners;
};

/// A planner broke one of its internal invariants.
class ScenarioFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replays the scenario for every roster entry and certifies each epoch
/// against the oracle. Rows come back sorted by (planner label, epoch).
RunReport run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Thread count from LAZYBENCH_THREADS, defaulting to 1.
unsigned thread_count_from_env();

const std::string& csv_header();
void write_csv(std::ostream& out, const std::vector<RunRow>& rows);
std::string to_csv(const std::vector<RunRow>& rows);

struct VerifyResult {
  std::size_t rows = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Re-reads a CSV and re-certifies every bound_ok flag. Epsilons come from
/// the scenario roster when given, otherwise from the default labels.
/// Throws ScenarioError for malformed input.
VerifyResult verify_csv(std::istream& in, const std::optional<Scenario>& scenario = {});

enum class GeneratedWorld { kGrid, kRoadmap };

struct GenerateParams {
  GeneratedWorld world = GeneratedWorld::kGrid;
  ProtocolKind protocol = ProtocolKind::kFixed;
  std::uint64_t seed = 1;
  std::size_t rows = 16;
  std::size_t cols = 16;
  int connectivity = 8;
  std::size_t n = 500;
  std::size_t k = 10;
  Sampler sampler = Sampler::kHalton;
  std::size_t epochs = 6;
  std::size_t batch_size = 100;
  /// Roadmaps only; negative picks the protocol default.
  double reweight_fraction = -1.0;
  /// Empty picks the protocol default roster.
  std::vector<PlannerSpec> planners;
};

/// Self-contained scenario for one of the three protocol families.
Scenario generate_scenario(const GenerateParams& params);

}  // namespace lazysearch

#endif  // LAZYSEARCH_BENCH_HPP
