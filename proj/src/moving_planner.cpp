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

#include "lazysearch/moving_planner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace lazysearch {
namespace {

LazyGraph with_inflation(LazyGraph graph, double epsilon1) {
  graph.weights().set_inflation(epsilon1);
  return graph;
}

}  // namespace

MovingPlanner::MovingPlanner(LazyGraph graph, VertexHeuristic heuristic,
                             VertexId start, VertexId goal, PlannerConfig config)
    : config_(config.normalized()),
      goal_(goal),
      tree_(with_inflation(std::move(graph), config_.epsilon1), std::move(heuristic),
            TreeDirection::kReverse, goal, start,
            config_.policy == EvaluationPolicy::kEager) {
  agent_.current = start;
  agent_.last = start;
  agent_.trajectory.push_back(start);
  tree_.initialize_root();
}

std::optional<Truncation> MovingPlanner::truncation() const {
  if (!config_.truncation) return std::nullopt;
  return Truncation{config_.epsilon2, config_.underconsistent_bound};
}

std::optional<EdgeId> MovingPlanner::evaluate_edges(const Path& candidate) {
  // The agent traverses the leaf end first, so evaluate from there.
  auto& weights = tree_.graph().weights();
  const std::vector<EdgeId> edges = tree_.path_edges(candidate);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    if (weights.is_evaluated(*it)) continue;
    if (weights.evaluate(*it).changed) return *it;
  }
  return std::nullopt;
}

std::optional<Path> MovingPlanner::plan() {
  const VertexId current = agent_.current;
  if (current == goal_) {
    planned_ = Path{{goal_}};
    planned_cost_ = 0.0;
    return planned_;
  }
  planned_.reset();
  planned_cost_ = kInfinity;

  const std::uint64_t round_limit = tree_.graph().graph().edge_count() + 1;
  for (std::uint64_t round = 1;; ++round) {
    if (round > round_limit) {
      throw InvariantViolation("plan exceeded " + std::to_string(round_limit) +
                               " evaluation rounds");
    }
    std::optional<Path> candidate = tree_.repair(config_.event, truncation());
    if (!candidate) {
      tree_.clear_truncated();
      return std::nullopt;
    }
    const std::optional<EdgeId> changed = evaluate_edges(*candidate);
    // Reverse tree: the edge (v, u) feeds rhs(v).
    if (changed) tree_.update_vertex(tree_.graph().graph().edge(*changed).source);
    tree_.clear_truncated();
    if (!changed && candidate->back() == current) {
      planned_cost_ = tree_.lazy_path_cost(*candidate);
      planned_ = std::move(candidate);
      return planned_;
    }
  }
}

VertexId MovingPlanner::step() {
  if (!planned_ || planned_->empty() || planned_->back() != agent_.current) {
    throw std::logic_error("step requires a successful plan from the current vertex");
  }
  if (agent_.current == goal_) return goal_;

  const VertexId next = planned_->vertices[planned_->size() - 2];
  const EdgeId edge = tree_.graph().graph().edge_id({agent_.current, next});
  const auto& weights = tree_.graph().weights();
  if (!weights.is_evaluated(edge)) {
    throw InvariantViolation("agent asked to traverse an unevaluated edge");
  }
  traversed_cost_ = add_costs(traversed_cost_, weights.lazy_weight(edge));
  planned_->vertices.pop_back();

  agent_.current = next;
  agent_.trajectory.push_back(next);
  agent_.km = add_costs(agent_.km, tree_.heuristic_between(next, agent_.last));
  agent_.last = next;
  tree_.set_km(agent_.km);
  tree_.set_target(next);
  return next;
}

void MovingPlanner::observe_changes(const ChangeBatch& batch) {
  LazyGraph& graph = tree_.graph();
  graph.apply_change_batch(batch);
  if (config_.policy == EvaluationPolicy::kEager) {
    for (const auto& change : batch.changes) graph.evaluate(change.edge);
  }
  std::vector<VertexId> sources;
  for (const auto& change : batch.changes) sources.push_back(change.edge.source);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (VertexId v : sources) tree_.update_vertex(v);
}

EpisodeResult MovingPlanner::run_to_goal(const ChangeScript& script,
                                         const EpochObserver& on_epoch,
                                         std::size_t max_steps) {
  EpisodeResult result;
  for (std::size_t epoch = 0; agent_.current != goal_; ++epoch) {
    if (max_steps != 0 && epoch >= max_steps) break;
    const std::uint64_t evals_before = total_evaluations();
    const std::uint64_t expansions_before = total_expansions();
    if (epoch > 0 && script) observe_changes(script(epoch));

    const auto t0 = std::chrono::steady_clock::now();
    const std::optional<Path> path = plan();
    const auto t1 = std::chrono::steady_clock::now();

    EpochReport report;
    report.epoch = epoch;
    report.position = agent_.current;
    if (path) report.plan = *path;
    report.planned_cost = planned_cost_;
    report.stats.edge_evaluations = total_evaluations() - evals_before;
    report.stats.vertex_expansions = total_expansions() - expansions_before;
    report.wall_time_us = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    if (on_epoch) on_epoch(report);
    result.epochs.push_back(std::move(report));
    if (!path) break;
    step();
  }
  result.reached_goal = agent_.current == goal_;
  result.trajectory.vertices = agent_.trajectory;
  result.traversed_cost = traversed_cost_;
  return result;
}

}  // namespace lazysearch
