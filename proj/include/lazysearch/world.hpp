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

#ifndef LAZYSEARCH_WORLD_HPP
#define LAZYSEARCH_WORLD_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lazysearch/cost.hpp"
#include "lazysearch/geometry.hpp"
#include "lazysearch/graph.hpp"
#include "lazysearch/lazy_graph.hpp"
#include "lazysearch/search_tree.hpp"

namespace lazysearch {

/// Vertex heuristics are Euclidean distances scaled by this factor. The small
/// margin keeps every key comparison consistent under float rounding.
inline constexpr double kHeuristicScale = 1.0 - 1e-6;

enum class WorldKind { kGrid, kRoadmap, kExplicit };
enum class Sampler { kHalton, kUniform };

struct Scene {
  std::vector<Obstacle> obstacles;
};

/// How true weights evolve between epochs.
struct ChangeModel {
  /// Epoch e sees scenes[e % size]; no scenes means free space.
  std::vector<Scene> scenes;
  /// Share of edge units (undirected pairs or lone directed edges) reweighted
  /// per epoch, rounded down.
  double reweight_fraction = 0.0;
  /// A reweighted unit becomes blocked with this probability, free otherwise.
  double block_probability = 0.5;
  /// Batches applied verbatim at the given epoch, after the generated ones.
  std::map<std::size_t, ChangeBatch> scripted;
};

struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int connectivity = 8;
  std::uint64_t seed = 0;
  ChangeModel changes;
};

struct RoadmapSpec {
  /// Total vertex count, anchors included.
  std::size_t n = 0;
  std::size_t k = 0;
  Sampler sampler = Sampler::kHalton;
  std::uint64_t seed = 0;
  /// Halton indices start at 1 + halton_skip.
  std::uint64_t halton_skip = 0;
  Rect bounds{{0.0, 0.0}, {1.0, 1.0}};
  /// Fixed points that become vertices 0, 1, ... (typically start and goal).
  std::vector<Point> anchors;
  bool symmetric = true;
  ChangeModel changes;
};

struct ExplicitEdge {
  Edge edge;
  /// Defaults to the Euclidean length when points are given.
  std::optional<Cost> heuristic;
  std::optional<Cost> weight;
};

struct ExplicitSpec {
  std::size_t vertex_count = 0;
  std::vector<Point> points;
  std::vector<ExplicitEdge> edges;
  /// h(v, heuristic_target) per vertex; used when no points are given.
  std::vector<Cost> vertex_heuristic;
  std::optional<VertexId> heuristic_target;
  std::uint64_t seed = 0;
  ChangeModel changes;
};

/// Result of one densification step.
struct Densification {
  GraphGrowth growth;
  /// Vertex count after the step.
  std::size_t q = 0;
};

/// Synthetic environment: topology, coordinates, edge weights and the script
/// that changes them. Epochs advance strictly in order.
class World {
 public:
  static World grid(const GridSpec& spec);
  static World roadmap(const RoadmapSpec& spec);
  /// k-NN roadmap over given points (no sampling, no anchors).
  static World roadmap_from_points(std::vector<Point> points, std::size_t k,
                                   bool symmetric, ChangeModel changes = {});
  static World explicit_graph(const ExplicitSpec& spec);

  WorldKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return graph_; }
  std::span<const Cost> truth() const noexcept { return truth_; }
  std::span<const Cost> edge_heuristics() const noexcept { return edge_heuristic_; }
  bool has_points() const noexcept { return points_ && !points_->empty(); }
  const std::vector<Point>& points() const { return *points_; }
  std::size_t epoch() const noexcept { return epoch_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const ChangeModel& change_model() const noexcept { return changes_; }
  /// Obstacles active in the current epoch.
  const std::vector<Obstacle>& active_obstacles() const;

  /// Consistent vertex heuristic. It shares the coordinate table, which only
  /// ever grows, so it remains valid after densification.
  VertexHeuristic heuristic() const;
  Cost vertex_heuristic(VertexId from, VertexId to) const { return heuristic()(from, to); }

  /// Fresh lazy graph over the current topology: nothing evaluated,
  /// heuristic weights as lazy values.
  LazyGraph make_lazy_graph() const;

  /// Advances to `epoch` (must be the next one), applies the generated and
  /// scripted changes to the true weights and returns them as a batch with
  /// ascending edge ids.
  ChangeBatch script_change(std::size_t epoch);

  /// Appends `batch_size` feasible uniform samples and wires each one to its
  /// k nearest vertices in both directions. Roadmaps only.
  Densification densify(std::size_t batch_size);

  /// Edges whose heuristic weight exceeds the true weight.
  std::size_t admissibility_violations() const;
  /// Finite-weight edges (u, v) with h(u, t) > w(u, v) + h(v, t).
  std::size_t consistency_violations(VertexId target) const;

  nlohmann::json serialize() const;

 private:
  World() = default;
  void add_twin_edges(VertexId a, VertexId b);
  void add_directed_edge(VertexId a, VertexId b, Cost heuristic, Cost truth);
  void link_twins();
  Cost geometric_truth(EdgeId e, const std::vector<Obstacle>& obstacles) const;
  void reset_truths_from_geometry();
  std::vector<VertexId> nearest(VertexId v, std::size_t k) const;

  WorldKind kind_ = WorldKind::kExplicit;
  Graph graph_;
  std::shared_ptr<std::vector<Point>> points_ = std::make_shared<std::vector<Point>>();
  std::vector<Cost> edge_heuristic_;
  std::vector<Cost> truth_;
  std::vector<std::optional<EdgeId>> twin_;
  std::vector<std::uint8_t> random_blocked_;
  bool geometric_ = false;

  std::shared_ptr<const std::vector<Cost>> heuristic_table_;
  std::optional<VertexId> heuristic_target_;

  ChangeModel changes_;
  std::uint64_t seed_ = 0;
  std::size_t epoch_ = 0;
  std::size_t densify_calls_ = 0;
  std::size_t k_ = 0;
  bool symmetric_ = true;
  Rect bounds_{{0.0, 0.0}, {1.0, 1.0}};
  std::size_t grid_rows_ = 0;
  std::size_t grid_cols_ = 0;
  int grid_connectivity_ = 0;
};

/// Densification schedules: epsilon1 = 1 + 5/q and epsilon2 = 1 + 10/q.
/// Edge weights are Euclidean lengths rounded up to a multiple of 2^-30.
/// Path sums over such values are exact while they stay below 2^22, so two
/// paths of equal length compare equal whatever order their edges are added
/// in. Rounding up keeps the straight-line vertex heuristic consistent.
inline constexpr double kLengthQuantum = 0x1p30;
Cost edge_length(const Point& a, const Point& b);

double schedule_epsilon1(std::size_t q);
double schedule_epsilon2(std::size_t q);

/// Scene cycle for a grid with start on the left and goal on the right edge:
/// A and B are walls across the middle with differently placed gaps (plus a
/// few short fences); C is B with the top-left corner fenced off. Obstacles
/// are thin bars that never cover a vertex.
std::vector<Scene> grid_scene_cycle(std::size_t rows, std::size_t cols,
                                    std::uint64_t seed);

/// Three scenes of moving circular obstacles inside `bounds`, each keeping the
/// protected points free.
std::vector<Scene> roadmap_scene_cycle(const Rect& bounds, std::size_t obstacles,
                                       double radius, const std::vector<Point>& keep_free,
                                       std::uint64_t seed);

nlohmann::json obstacle_to_json(const Obstacle& obstacle);
Obstacle obstacle_from_json(const nlohmann::json& j);

}  // namespace lazysearch

#endif  // LAZYSEARCH_WORLD_HPP
