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

#ifndef LAZYSEARCH_MOVING_PLANNER_HPP
#define LAZYSEARCH_MOVING_PLANNER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lazysearch/planner_config.hpp"
#include "lazysearch/search_tree.hpp"

namespace lazysearch {

struct AgentState {
  VertexId current = 0;
  /// Position at the last heuristic re-anchor.
  VertexId last = 0;
  /// Accumulated key modifier.
  Cost km = 0.0;
  std::vector<VertexId> trajectory;
};

/// What happened in one agent stance: the observed changes and the plan.
struct EpochReport {
  std::size_t epoch = 0;
  VertexId position = 0;
  /// Goal-rooted plan ending at `position`; empty when unreachable.
  Path plan;
  Cost planned_cost = kInfinity;
  RunCounters stats;
  std::uint64_t wall_time_us = 0;
};

struct EpisodeResult {
  Path trajectory;
  Cost traversed_cost = 0.0;
  std::vector<EpochReport> epochs;
  bool reached_goal = false;
};

/// Lazy replanner for a moving agent (GD*; B-GD* with truncation; D*-Lite /
/// TD* with the eager policy). The tree is rooted at the goal and repaired
/// toward the agent's current vertex.
class MovingPlanner {
 public:
  MovingPlanner(LazyGraph graph, VertexHeuristic heuristic, VertexId start,
                VertexId goal, PlannerConfig config = {});

  /// Plans from the current vertex. The returned path runs goal -> agent and
  /// is fully evaluated; nullopt when the goal is unreachable.
  std::optional<Path> plan();
  /// Moves one segment along the last plan and re-anchors the heuristic.
  /// Throws std::logic_error without a successful plan. At the goal this is a
  /// no-op that returns the goal.
  VertexId step();
  void observe_changes(const ChangeBatch& batch);

  using ChangeScript = std::function<ChangeBatch(std::size_t epoch)>;
  using EpochObserver = std::function<void(const EpochReport&)>;

  /// Plans, steps and observes scripted changes until the goal is reached or
  /// becomes unreachable. `max_steps` of 0 means no limit.
  EpisodeResult run_to_goal(const ChangeScript& script,
                            const EpochObserver& on_epoch = {},
                            std::size_t max_steps = 0);

  const AgentState& agent() const noexcept { return agent_; }
  VertexId goal() const noexcept { return goal_; }
  const std::optional<Path>& planned_path() const noexcept { return planned_; }
  Cost planned_cost() const noexcept { return planned_cost_; }
  const PlannerConfig& config() const noexcept { return config_; }
  SearchTree& tree() noexcept { return tree_; }
  const SearchTree& tree() const noexcept { return tree_; }

  std::uint64_t total_evaluations() const noexcept {
    return tree_.graph().weights().evaluations();
  }
  std::uint64_t total_expansions() const noexcept { return tree_.counters().expansions; }

 private:
  std::optional<Truncation> truncation() const;
  std::optional<EdgeId> evaluate_edges(const Path& candidate);

  PlannerConfig config_;
  VertexId goal_;
  SearchTree tree_;
  AgentState agent_;
  std::optional<Path> planned_;
  Cost planned_cost_ = kInfinity;
  Cost traversed_cost_ = 0.0;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_MOVING_PLANNER_HPP
