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

#ifndef LAZYSEARCH_ORACLE_HPP
#define LAZYSEARCH_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "lazysearch/cost.hpp"
#include "lazysearch/graph.hpp"
#include "lazysearch/search_tree.hpp"

namespace lazysearch {

/// Ground-truth shortest path. `path` runs start -> goal and is present iff
/// the cost is finite.
struct OracleResult {
  Cost cost = kInfinity;
  std::optional<Path> path;
};

/// Where path costs are accumulated from. Float addition is not associative,
/// so a planner and its oracle must sum in the same order for exact equality:
/// forward trees sum from the start, goal-rooted trees from the goal.
enum class SumOrder { kFromStart, kFromGoal };

/// Dijkstra over the true weights, summing from the start. Ties are broken
/// by vertex id.
OracleResult dijkstra_opt(const Graph& graph, std::span<const Cost> truth,
                          VertexId start, VertexId goal);

/// Dijkstra over reversed edges from the goal, so costs are summed from the
/// goal end exactly as a goal-rooted search tree does.
OracleResult dijkstra_opt_to_goal(const Graph& graph, std::span<const Cost> truth,
                                  VertexId start, VertexId goal);

/// Cost from every vertex to `goal`, summed from the goal end. Unreachable
/// vertices get +inf.
std::vector<Cost> distances_to_goal(const Graph& graph, std::span<const Cost> truth,
                                    VertexId goal);

inline constexpr std::size_t kBruteForceVertexLimit = 12;

/// Exhaustive simple-path enumeration. Throws std::length_error above
/// kBruteForceVertexLimit vertices.
OracleResult brute_force_opt(const Graph& graph, std::span<const Cost> truth,
                             VertexId start, VertexId goal);

/// Sum of true weights along a start -> goal path in the given order.
Cost path_cost(const Graph& graph, std::span<const Cost> truth, const Path& path,
               SumOrder order = SumOrder::kFromStart);

/// achieved <= epsilon1 * epsilon2 * optimal, with both-infinite counting as
/// within bound.
bool check_bound(Cost achieved, Cost optimal, double epsilon1, double epsilon2);

/// Diagnostic: a planner claims a cost below the true optimum.
bool below_optimum(Cost achieved, Cost optimal);

}  // namespace lazysearch

#endif  // LAZYSEARCH_ORACLE_HPP
