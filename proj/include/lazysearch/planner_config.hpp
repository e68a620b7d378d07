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

#ifndef LAZYSEARCH_PLANNER_CONFIG_HPP
#define LAZYSEARCH_PLANNER_CONFIG_HPP

#include <cstdint>
#include <string>

#include "lazysearch/search_tree.hpp"

namespace lazysearch {

enum class EvaluationPolicy {
  /// Edges are evaluated only when they lie on a candidate path.
  kLazy,
  /// Every edge is evaluated the moment the search looks at it, and changed
  /// edges are evaluated as soon as the change is observed.
  kEager,
};

/// Configuration shared by stationary and moving planners.
struct PlannerConfig {
  Event event = Event::shortest_path();
  double epsilon1 = 1.0;
  double epsilon2 = 1.0;
  /// Repair with truncation rules (bounded variants).
  bool truncation = false;
  EvaluationPolicy policy = EvaluationPolicy::kLazy;
  /// Throw the search tree and all evaluations away before every query.
  bool reset_between_queries = false;
  UnderconsistentBound underconsistent_bound = UnderconsistentBound::kStoredG;

  /// Validates ranges and applies policy constraints (eager forces epsilon1 = 1).
  PlannerConfig normalized() const;

  static PlannerConfig lazy_lifelong(Event event = Event::shortest_path());
  static PlannerConfig bounded_lazy_lifelong(double epsilon1, double epsilon2,
                                             Event event = Event::shortest_path());
  static PlannerConfig from_scratch(Event event = Event::shortest_path());
  static PlannerConfig eager_incremental();
  static PlannerConfig eager_truncated(double epsilon2);
};

/// Counters for one query or one planning epoch.
struct RunCounters {
  std::uint64_t edge_evaluations = 0;
  std::uint64_t vertex_expansions = 0;
  std::uint64_t rounds = 0;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_PLANNER_CONFIG_HPP
