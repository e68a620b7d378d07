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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lazysearch/geometry.hpp"
#include "lazysearch/oracle.hpp"
#include "lazysearch/sampling.hpp"
#include "lazysearch/stationary_planner.hpp"
#include "lazysearch/world.hpp"

namespace lazysearch {
namespace {

std::size_t infinite_edges(const World& w) {
  return static_cast<std::size_t>(
      std::count(w.truth().begin(), w.truth().end(), kInfinity));
}

TEST(Grid, TwoByTwoFourConnected) {
  GridSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  spec.connectivity = 4;
  const World w = World::grid(spec);
  EXPECT_EQ(w.graph().vertex_count(), 4u);
  EXPECT_EQ(w.graph().edge_count(), 8u);
  for (Cost c : w.truth()) EXPECT_EQ(c, 1.0);
  for (Cost c : w.edge_heuristics()) EXPECT_EQ(c, 1.0);
}

TEST(Grid, VertexLayoutIsRowMajor) {
  GridSpec spec;
  spec.rows = 2;
  spec.cols = 3;
  const World w = World::grid(spec);
  EXPECT_EQ(w.points()[4], (Point{1.0, 1.0}));
  EXPECT_EQ(w.points()[2], (Point{2.0, 0.0}));
  EXPECT_TRUE(w.graph().find_edge(0, 4).has_value());
}

TEST(Grid, BlockedCentreCutsExactlyItsEdges) {
  GridSpec spec;
  spec.rows = 3;
  spec.cols = 3;
  spec.connectivity = 8;
  spec.changes.scenes = {Scene{{Rect{{0.5, 0.5}, {1.5, 1.5}}}}};
  const World w = World::grid(spec);
  // 8 neighbours, both directions.
  EXPECT_EQ(infinite_edges(w), 16u);
  for (EdgeId e = 0; e < w.graph().edge_count(); ++e) {
    const Edge& edge = w.graph().edge(e);
    const bool touches_centre = edge.source == 4 || edge.target == 4;
    EXPECT_EQ(w.truth()[e] == kInfinity, touches_centre) << edge.source << "->" << edge.target;
  }
}

TEST(Grid, DegenerateDimensionsRejected) {
  GridSpec spec;
  spec.rows = 0;
  spec.cols = 5;
  EXPECT_THROW(World::grid(spec), std::invalid_argument);
  spec.rows = 1;
  spec.cols = 1;
  EXPECT_THROW(World::grid(spec), std::invalid_argument);
  spec.cols = 3;
  spec.connectivity = 6;
  EXPECT_THROW(World::grid(spec), std::invalid_argument);
}

TEST(Grid, SameSeedSerializesIdentically) {
  GridSpec spec;
  spec.rows = 12;
  spec.cols = 12;
  spec.seed = 5;
  spec.changes.scenes = grid_scene_cycle(12, 12, 5);
  EXPECT_EQ(World::grid(spec).serialize().dump(), World::grid(spec).serialize().dump());
}

TEST(Grid, SceneCycleRepeatsEveryThreeEpochs) {
  GridSpec spec;
  spec.rows = 16;
  spec.cols = 16;
  spec.seed = 2;
  spec.changes.scenes = grid_scene_cycle(16, 16, 2);
  World w = World::grid(spec);
  std::vector<std::vector<Cost>> truths{{w.truth().begin(), w.truth().end()}};
  for (std::size_t e = 1; e < 6; ++e) {
    w.script_change(e);
    truths.emplace_back(w.truth().begin(), w.truth().end());
  }
  EXPECT_NE(truths[0], truths[1]);
  EXPECT_NE(truths[1], truths[2]);
  for (std::size_t e = 3; e < 6; ++e) EXPECT_EQ(truths[e], truths[e - 3]);
  EXPECT_THROW(w.script_change(9), std::logic_error);
}

TEST(Grid, SceneBatchesCarryBothDirectionsAndMatchTruth) {
  GridSpec spec;
  spec.rows = 16;
  spec.cols = 16;
  spec.seed = 4;
  spec.changes.scenes = grid_scene_cycle(16, 16, 4);
  World w = World::grid(spec);
  for (std::size_t epoch = 1; epoch < 6; ++epoch) {
    const ChangeBatch batch = w.script_change(epoch);
    EXPECT_FALSE(batch.empty());
    for (const auto& change : batch.changes) {
      const auto twin = w.graph().find_edge(change.edge.target, change.edge.source);
      ASSERT_TRUE(twin.has_value());
      const bool has_twin = std::any_of(batch.changes.begin(), batch.changes.end(),
                                        [&](const WeightChange& c) {
                                          return c.edge.source == change.edge.target &&
                                                 c.edge.target == change.edge.source;
                                        });
      EXPECT_TRUE(has_twin);
      EXPECT_EQ(w.truth()[w.graph().edge_id(change.edge)], change.weight);
    }
  }
}

TEST(Grid, SceneCycleKeepsStartAndGoalConnected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t size : {8u, 16u, 32u}) {
      GridSpec spec;
      spec.rows = size;
      spec.cols = size;
      spec.seed = seed;
      spec.changes.scenes = grid_scene_cycle(size, size, seed);
      World w = World::grid(spec);
      const VertexId start = static_cast<VertexId>((size / 2) * size);
      const VertexId goal = static_cast<VertexId>((size / 2) * size + size - 1);
      for (std::size_t e = 0; e < 3; ++e) {
        if (e > 0) w.script_change(e);
        EXPECT_TRUE(is_finite(dijkstra_opt(w.graph(), w.truth(), start, goal).cost))
            << seed << " " << size << " " << e;
      }
    }
  }
}

TEST(Halton, FirstPoint) {
  EXPECT_EQ(halton_point(1), (Point{0.5, 1.0 / 3.0}));
  EXPECT_EQ(halton_point(2), (Point{0.25, 2.0 / 3.0}));
  EXPECT_EQ(radical_inverse(3, 2), 0.75);
}

TEST(Roadmap, CollinearNearestNeighbour) {
  const World w = World::roadmap_from_points({{0, 0}, {1, 0}, {3, 0}}, 1, false);
  EXPECT_TRUE(w.graph().find_edge(0, 1).has_value());
  EXPECT_TRUE(w.graph().find_edge(2, 1).has_value());
  EXPECT_TRUE(w.graph().find_edge(1, 0).has_value());
  EXPECT_EQ(w.graph().edge_count(), 3u);
}

TEST(Roadmap, SymmetricClosureAddsTwins) {
  const World w = World::roadmap_from_points({{0, 0}, {1, 0}, {3, 0}}, 1, true);
  EXPECT_TRUE(w.graph().find_edge(1, 2).has_value());
  EXPECT_EQ(w.graph().edge_count(), 4u);
}

TEST(Roadmap, RejectsBadParameters) {
  EXPECT_THROW(World::roadmap_from_points({{0, 0}, {1, 0}}, 2, true), std::invalid_argument);
  EXPECT_THROW(World::roadmap_from_points({{0, 0}}, 1, true), std::invalid_argument);
  RoadmapSpec spec;
  spec.n = 10;
  spec.k = 10;
  EXPECT_THROW(World::roadmap(spec), std::invalid_argument);
}

TEST(Roadmap, NearestNeighbourTiesGoToSmallerId) {
  // Vertex 1 is equidistant from 0 and 2.
  const World w = World::roadmap_from_points({{0, 0}, {1, 0}, {2, 0}}, 1, false);
  EXPECT_TRUE(w.graph().find_edge(1, 0).has_value());
  EXPECT_FALSE(w.graph().find_edge(1, 2).has_value());
}

TEST(Roadmap, DeterministicAdjacency) {
  for (Sampler sampler : {Sampler::kHalton, Sampler::kUniform}) {
    RoadmapSpec spec;
    spec.n = 200;
    spec.k = 6;
    spec.seed = 11;
    spec.sampler = sampler;
    const World a = World::roadmap(spec);
    const World b = World::roadmap(spec);
    EXPECT_EQ(a.serialize().dump(), b.serialize().dump());
    EXPECT_EQ(a.points(), b.points());
  }
  RoadmapSpec spec;
  spec.n = 50;
  spec.k = 4;
  spec.sampler = Sampler::kUniform;
  spec.seed = 1;
  const World a = World::roadmap(spec);
  spec.seed = 2;
  EXPECT_NE(a.points(), World::roadmap(spec).points());
}

TEST(Roadmap, AnchorsComeFirst) {
  RoadmapSpec spec;
  spec.n = 30;
  spec.k = 5;
  spec.anchors = {{0.1, 0.2}, {0.9, 0.8}};
  const World w = World::roadmap(spec);
  EXPECT_EQ(w.graph().vertex_count(), 30u);
  EXPECT_EQ(w.points()[0], (Point{0.1, 0.2}));
  EXPECT_EQ(w.points()[1], (Point{0.9, 0.8}));
  EXPECT_EQ(w.points()[2], halton_point(1));
}

TEST(ScriptChange, ZeroFractionIsEmpty) {
  RoadmapSpec spec;
  spec.n = 40;
  spec.k = 4;
  World w = World::roadmap(spec);
  EXPECT_TRUE(w.script_change(1).empty());
}

TEST(ScriptChange, FractionRoundsDown) {
  // A chain of 100 directed edges without twins.
  ExplicitSpec spec;
  spec.vertex_count = 101;
  for (std::size_t i = 0; i <= 100; ++i) spec.points.push_back({static_cast<double>(i), 0.0});
  for (VertexId i = 0; i < 100; ++i) spec.edges.push_back({Edge{i, i + 1}, {}, {}});
  spec.changes.reweight_fraction = 0.1;
  spec.seed = 3;
  World w = World::explicit_graph(spec);
  EXPECT_EQ(w.script_change(1).size(), 10u);

  spec.changes.reweight_fraction = 0.109;
  World v = World::explicit_graph(spec);
  EXPECT_EQ(v.script_change(1).size(), 10u);
}

TEST(ScriptChange, UndirectedUnitsCarryTwins) {
  GridSpec spec;
  spec.rows = 3;
  spec.cols = 3;
  spec.connectivity = 4;
  spec.changes.reweight_fraction = 0.25;  // 12 undirected units -> 3
  World w = World::grid(spec);
  const ChangeBatch batch = w.script_change(1);
  EXPECT_EQ(batch.size(), 6u);
  for (std::size_t i = 1; i < batch.size(); ++i) {
    EXPECT_LT(w.graph().edge_id(batch.changes[i - 1].edge),
              w.graph().edge_id(batch.changes[i].edge));
  }
}

TEST(Audit, ShippedWorldsAreAdmissibleAndConsistent) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GridSpec g;
    g.rows = 20;
    g.cols = 20;
    g.seed = seed;
    g.changes.scenes = grid_scene_cycle(20, 20, seed);
    g.changes.reweight_fraction = 0.05;
    World grid = World::grid(g);

    RoadmapSpec r;
    r.n = 300;
    r.k = 8;
    r.seed = seed;
    r.sampler = seed % 2 == 0 ? Sampler::kUniform : Sampler::kHalton;
    r.changes.scenes = roadmap_scene_cycle(r.bounds, 6, 0.07, {}, seed);
    r.changes.reweight_fraction = 0.1;
    World roadmap = World::roadmap(r);

    for (World* w : {&grid, &roadmap}) {
      for (std::size_t e = 0; e < 4; ++e) {
        if (e > 0) w->script_change(e);
        EXPECT_EQ(w->admissibility_violations(), 0u);
        EXPECT_EQ(w->consistency_violations(0), 0u);
        EXPECT_EQ(w->consistency_violations(
                      static_cast<VertexId>(w->graph().vertex_count() - 1)),
                  0u);
      }
    }
  }
}

TEST(Audit, HeuristicVanishesAtTarget) {
  RoadmapSpec r;
  r.n = 20;
  r.k = 3;
  const World w = World::roadmap(r);
  for (VertexId v = 0; v < 20; ++v) EXPECT_EQ(w.vertex_heuristic(v, v), 0.0);
  EXPECT_EQ(w.vertex_heuristic(0, 1),
            kHeuristicScale * distance(w.points()[0], w.points()[1]));
}

TEST(Schedule, Formulas) {
  EXPECT_DOUBLE_EQ(schedule_epsilon1(100), 1.05);
  EXPECT_DOUBLE_EQ(schedule_epsilon2(100), 1.10);
  double last1 = schedule_epsilon1(1);
  double last2 = schedule_epsilon2(1);
  for (std::size_t q = 2; q < 5000; q += 37) {
    EXPECT_LE(schedule_epsilon1(q), last1);
    EXPECT_LE(schedule_epsilon2(q), last2);
    EXPECT_GE(schedule_epsilon1(q), 1.0);
    last1 = schedule_epsilon1(q);
    last2 = schedule_epsilon2(q);
  }
  EXPECT_THROW(schedule_epsilon1(0), std::invalid_argument);
}

TEST(Densify, FreeWorldGainsExactlyTheBatch) {
  RoadmapSpec r;
  r.n = 100;
  r.k = 6;
  r.seed = 4;
  World w = World::roadmap(r);
  const auto edges_before = w.graph().edge_count();
  const Densification d = w.densify(50);
  EXPECT_EQ(d.growth.first_vertex, 100u);
  EXPECT_EQ(d.growth.vertex_count, 50u);
  EXPECT_EQ(d.q, 150u);
  EXPECT_EQ(w.graph().vertex_count(), 150u);
  EXPECT_EQ(d.growth.edges.size(), w.graph().edge_count() - edges_before);
  for (const auto& e : d.growth.edges) EXPECT_LE(e.heuristic, e.weight);
}

TEST(Densify, RejectsSamplesInsideObstacles) {
  RoadmapSpec r;
  r.n = 100;
  r.k = 6;
  r.seed = 8;
  r.changes.scenes = {Scene{{Circle{{0.5, 0.5}, 0.3}, Rect{{0.0, 0.0}, {0.2, 1.0}}}}};
  World w = World::roadmap(r);
  w.densify(200);
  for (VertexId v = 100; v < w.graph().vertex_count(); ++v) {
    for (const Obstacle& o : w.active_obstacles()) EXPECT_FALSE(covers(o, w.points()[v]));
  }
  EXPECT_EQ(w.admissibility_violations(), 0u);
}

TEST(Densify, GridsCannotGrow) {
  GridSpec g;
  g.rows = 3;
  g.cols = 3;
  World w = World::grid(g);
  EXPECT_THROW(w.densify(10), std::logic_error);
}

TEST(Densify, OptimalCostIsNonIncreasing) {
  RoadmapSpec r;
  r.n = 60;
  r.k = 5;
  r.seed = 6;
  r.anchors = {{0.05, 0.5}, {0.95, 0.5}};
  r.changes.scenes = {Scene{{Circle{{0.5, 0.5}, 0.15}}}};
  World w = World::roadmap(r);
  StationaryPlanner planner(w.make_lazy_graph(), w.heuristic(), 0, 1);
  Cost previous = kInfinity;
  for (int epoch = 0; epoch < 10; ++epoch) {
    if (epoch > 0) planner.grow(w.densify(40).growth);
    const QueryResult q = planner.solve_query();
    EXPECT_EQ(q.cost, dijkstra_opt(w.graph(), w.truth(), 0, 1).cost);
    EXPECT_LE(q.cost, previous);
    previous = q.cost;
  }
  EXPECT_TRUE(is_finite(previous));
}

TEST(Geometry, OpenInteriors) {
  const Rect r{{0, 0}, {1, 1}};
  EXPECT_TRUE(covers(r, {0.5, 0.5}));
  EXPECT_FALSE(covers(r, {1.0, 0.5}));
  EXPECT_FALSE(blocks(r, {-1, 0}, {2, 0}));
  EXPECT_TRUE(blocks(r, {-1, 0.5}, {2, 0.5}));
  EXPECT_TRUE(blocks(r, {-1, -1}, {2, 2}));
  const Circle c{{0, 0}, 1};
  EXPECT_FALSE(covers(c, {1, 0}));
  EXPECT_FALSE(blocks(c, {-1, 1}, {1, 1}));
  EXPECT_TRUE(blocks(c, {-1, 0.5}, {1, 0.5}));
  EXPECT_TRUE(blocks(c, {0.1, 0.1}, {0.2, 0.2}));
}

TEST(Geometry, ObstacleJsonRoundTrip) {
  const Obstacle o = Circle{{0.25, 0.75}, 0.125};
  const Obstacle back = obstacle_from_json(obstacle_to_json(o));
  ASSERT_TRUE(std::holds_alternative<Circle>(back));
  EXPECT_EQ(std::get<Circle>(back).center, (Point{0.25, 0.75}));
  EXPECT_EQ(std::get<Circle>(back).radius, 0.125);
  EXPECT_THROW(obstacle_from_json(nlohmann::json{{"type", "blob"}}), std::invalid_argument);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a = Rng::stream(7, 1);
  Rng b = Rng::stream(7, 1);
  Rng c = Rng::stream(7, 2);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng d(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(d.below(7), 7u);
  }
}

}  // namespace
}  // namespace lazysearch
