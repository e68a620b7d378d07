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

#ifndef LAZYSEARCH_STATIONARY_PLANNER_HPP
#define LAZYSEARCH_STATIONARY_PLANNER_HPP

#include <optional>

#include "lazysearch/planner_config.hpp"
#include "lazysearch/search_tree.hpp"

namespace lazysearch {

struct QueryResult {
  /// Start-to-goal path; empty when no path exists (or start == goal).
  Path path;
  Cost cost = kInfinity;
  RunCounters stats;

  bool found() const noexcept { return is_finite(cost); }
};

/// Lifelong lazy planner for a fixed start and goal.
///
/// With the default configuration this is L-GLS; `truncation` turns it into
/// B-LGLS, the eager policy reproduces LPA* / TLPA*, and
/// `reset_between_queries` gives from-scratch GLS.
class StationaryPlanner {
 public:
  StationaryPlanner(LazyGraph graph, VertexHeuristic heuristic, VertexId start,
                    VertexId goal, PlannerConfig config = {});

  /// Alternates repair and evaluation until the candidate reaches the goal
  /// with every edge evaluated and unchanged.
  QueryResult solve_query();

  /// One repair call with the configured event.
  std::optional<Path> repair();
  /// Evaluates the unevaluated edges of `candidate` in path order and returns
  /// the first one whose true weight differed from its lazy value.
  std::optional<EdgeId> evaluate_edges(const Path& candidate);

  void apply_changes(const ChangeBatch& batch);
  void grow(const GraphGrowth& growth);
  /// Replaces the inflation and truncation factors between queries.
  void set_epsilons(double epsilon1, double epsilon2);

  const PlannerConfig& config() const noexcept { return config_; }
  VertexId start() const noexcept { return start_; }
  VertexId goal() const noexcept { return goal_; }
  SearchTree& tree() noexcept { return tree_; }
  const SearchTree& tree() const noexcept { return tree_; }

  std::uint64_t total_evaluations() const noexcept {
    return tree_.graph().weights().evaluations();
  }
  std::uint64_t total_expansions() const noexcept { return tree_.counters().expansions; }

 private:
  std::optional<Truncation> truncation() const;

  PlannerConfig config_;
  VertexId start_;
  VertexId goal_;
  SearchTree tree_;
  std::uint64_t queries_ = 0;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_STATIONARY_PLANNER_HPP
