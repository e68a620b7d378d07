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

#include "lazysearch/oracle.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lazysearch {
namespace {

using HeapItem = std::pair<Cost, VertexId>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

void check_inputs(const Graph& graph, std::span<const Cost> truth, VertexId start,
                  VertexId goal) {
  if (truth.size() != graph.edge_count()) {
    throw std::invalid_argument("truth table does not match the graph");
  }
  if (!graph.contains(start) || !graph.contains(goal)) {
    throw std::invalid_argument("oracle endpoints must be graph vertices");
  }
}

}  // namespace

OracleResult dijkstra_opt(const Graph& graph, std::span<const Cost> truth,
                          VertexId start, VertexId goal) {
  check_inputs(graph, truth, start, goal);
  const std::size_t n = graph.vertex_count();
  std::vector<Cost> dist(n, kInfinity);
  std::vector<VertexId> parent(n, 0);
  std::vector<char> done(n, 0);
  MinHeap heap;
  dist[start] = 0.0;
  heap.push({0.0, start});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == goal) break;
    for (const Adjacent& next : graph.successors(u)) {
      const Cost candidate = add_costs(d, truth[next.edge]);
      if (candidate < dist[next.vertex]) {
        dist[next.vertex] = candidate;
        parent[next.vertex] = u;
        heap.push({candidate, next.vertex});
      }
    }
  }
  OracleResult result;
  result.cost = dist[goal];
  if (!is_finite(result.cost)) return result;
  std::vector<VertexId> reversed{goal};
  for (VertexId v = goal; v != start; v = parent[v]) reversed.push_back(parent[v]);
  result.path = Path{{reversed.rbegin(), reversed.rend()}};
  return result;
}

OracleResult dijkstra_opt_to_goal(const Graph& graph, std::span<const Cost> truth,
                                  VertexId start, VertexId goal) {
  check_inputs(graph, truth, start, goal);
  const std::size_t n = graph.vertex_count();
  std::vector<Cost> dist(n, kInfinity);
  std::vector<VertexId> next_hop(n, 0);
  std::vector<char> done(n, 0);
  MinHeap heap;
  dist[goal] = 0.0;
  heap.push({0.0, goal});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == start) break;
    for (const Adjacent& prev : graph.predecessors(u)) {
      const Cost candidate = add_costs(d, truth[prev.edge]);
      if (candidate < dist[prev.vertex]) {
        dist[prev.vertex] = candidate;
        next_hop[prev.vertex] = u;
        heap.push({candidate, prev.vertex});
      }
    }
  }
  OracleResult result;
  result.cost = dist[start];
  if (!is_finite(result.cost)) return result;
  Path path{{start}};
  for (VertexId v = start; v != goal; v = next_hop[v]) path.vertices.push_back(next_hop[v]);
  result.path = std::move(path);
  return result;
}

std::vector<Cost> distances_to_goal(const Graph& graph, std::span<const Cost> truth,
                                    VertexId goal) {
  check_inputs(graph, truth, goal, goal);
  std::vector<Cost> dist(graph.vertex_count(), kInfinity);
  std::vector<char> done(graph.vertex_count(), 0);
  MinHeap heap;
  dist[goal] = 0.0;
  heap.push({0.0, goal});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Adjacent& prev : graph.predecessors(u)) {
      const Cost candidate = add_costs(d, truth[prev.edge]);
      if (candidate < dist[prev.vertex]) {
        dist[prev.vertex] = candidate;
        heap.push({candidate, prev.vertex});
      }
    }
  }
  return dist;
}

OracleResult brute_force_opt(const Graph& graph, std::span<const Cost> truth,
                             VertexId start, VertexId goal) {
  check_inputs(graph, truth, start, goal);
  if (graph.vertex_count() > kBruteForceVertexLimit) {
    throw std::length_error("brute force oracle limited to " +
                            std::to_string(kBruteForceVertexLimit) + " vertices");
  }
  OracleResult best;
  std::vector<VertexId> stack{start};
  std::vector<char> on_path(graph.vertex_count(), 0);
  on_path[start] = 1;

  std::function<void(VertexId, Cost)> extend = [&](VertexId u, Cost so_far) {
    if (u == goal) {
      if (so_far < best.cost) {
        best.cost = so_far;
        best.path = Path{stack};
      }
      return;
    }
    for (const Adjacent& next : graph.successors(u)) {
      if (on_path[next.vertex]) continue;
      const Cost w = truth[next.edge];
      if (!is_finite(w)) continue;
      on_path[next.vertex] = 1;
      stack.push_back(next.vertex);
      extend(next.vertex, so_far + w);
      stack.pop_back();
      on_path[next.vertex] = 0;
    }
  };
  extend(start, 0.0);
  return best;
}

Cost path_cost(const Graph& graph, std::span<const Cost> truth, const Path& path,
               SumOrder order) {
  if (path.size() < 2) return path.empty() ? kInfinity : 0.0;
  std::vector<Cost> weights;
  for (std::size_t i = 1; i < path.size(); ++i) {
    weights.push_back(truth[graph.edge_id({path.vertices[i - 1], path.vertices[i]})]);
  }
  Cost total = 0.0;
  if (order == SumOrder::kFromStart) {
    for (Cost w : weights) total = add_costs(total, w);
  } else {
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) total = add_costs(total, *it);
  }
  return total;
}

bool check_bound(Cost achieved, Cost optimal, double epsilon1, double epsilon2) {
  if (!is_finite(achieved) && !is_finite(optimal)) return true;
  if (!is_finite(achieved)) return false;
  return achieved <= epsilon1 * epsilon2 * optimal;
}

bool below_optimum(Cost achieved, Cost optimal) { return achieved < optimal; }

}  // namespace lazysearch
