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

#include "lazysearch/stationary_planner.hpp"

#include <string>

namespace lazysearch {
namespace {

LazyGraph with_inflation(LazyGraph graph, double epsilon1) {
  graph.weights().set_inflation(epsilon1);
  return graph;
}

}  // namespace

StationaryPlanner::StationaryPlanner(LazyGraph graph, VertexHeuristic heuristic,
                                     VertexId start, VertexId goal, PlannerConfig config)
    : config_(config.normalized()),
      start_(start),
      goal_(goal),
      tree_(with_inflation(std::move(graph), config_.epsilon1), std::move(heuristic),
            TreeDirection::kForward, start, goal,
            config_.policy == EvaluationPolicy::kEager) {
  tree_.initialize_root();
}

std::optional<Truncation> StationaryPlanner::truncation() const {
  if (!config_.truncation) return std::nullopt;
  return Truncation{config_.epsilon2, config_.underconsistent_bound};
}

std::optional<Path> StationaryPlanner::repair() {
  return tree_.repair(config_.event, truncation());
}

std::optional<EdgeId> StationaryPlanner::evaluate_edges(const Path& candidate) {
  auto& weights = tree_.graph().weights();
  for (EdgeId e : tree_.path_edges(candidate)) {
    if (weights.is_evaluated(e)) continue;
    if (weights.evaluate(e).changed) return e;
  }
  return std::nullopt;
}

QueryResult StationaryPlanner::solve_query() {
  if (config_.reset_between_queries && queries_ > 0) {
    tree_.reset();
    tree_.graph().weights().reset_evaluations();
    tree_.initialize_root();
  }
  ++queries_;

  QueryResult result;
  if (start_ == goal_) {
    result.cost = 0.0;
    return result;
  }

  const std::uint64_t evals_before = total_evaluations();
  const std::uint64_t expansions_before = total_expansions();
  const std::uint64_t round_limit = tree_.graph().graph().edge_count() + 1;

  while (true) {
    if (++result.stats.rounds > round_limit) {
      throw InvariantViolation("query exceeded " + std::to_string(round_limit) +
                               " evaluation rounds");
    }
    std::optional<Path> candidate = repair();
    if (!candidate) {
      tree_.clear_truncated();
      break;
    }
    const std::optional<EdgeId> changed = evaluate_edges(*candidate);
    if (changed) tree_.update_vertex(tree_.graph().graph().edge(*changed).target);
    tree_.clear_truncated();
    if (!changed && candidate->back() == goal_) {
      result.cost = tree_.lazy_path_cost(*candidate);
      result.path = std::move(*candidate);
      break;
    }
  }

  result.stats.edge_evaluations = total_evaluations() - evals_before;
  result.stats.vertex_expansions = total_expansions() - expansions_before;
  return result;
}

void StationaryPlanner::apply_changes(const ChangeBatch& batch) {
  LazyGraph& graph = tree_.graph();
  const std::vector<VertexId> targets = graph.apply_change_batch(batch);
  if (config_.policy == EvaluationPolicy::kEager) {
    for (const auto& change : batch.changes) graph.evaluate(change.edge);
  }
  for (VertexId v : targets) tree_.update_vertex(v);
}

void StationaryPlanner::grow(const GraphGrowth& growth) {
  tree_.graph().grow(growth);
  tree_.grow_records();
  for (const auto& e : growth.edges) tree_.update_vertex(e.edge.target);
}

void StationaryPlanner::set_epsilons(double epsilon1, double epsilon2) {
  PlannerConfig next = config_;
  next.epsilon1 = epsilon1;
  next.epsilon2 = epsilon2;
  next = next.normalized();
  const bool inflation_changed = next.epsilon1 != config_.epsilon1;
  config_ = next;
  if (inflation_changed) {
    tree_.graph().weights().set_inflation(config_.epsilon1);
    tree_.update_all_vertices();
  }
}

}  // namespace lazysearch
