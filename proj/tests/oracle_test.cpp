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
#include <functional>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "lazysearch/oracle.hpp"
#include "lazysearch/sampling.hpp"

namespace lazysearch {
namespace {

using testing::kA;
using testing::kB;
using testing::kG;
using testing::kS;

const std::vector<Cost> kDiamondTruth{1, 5, 1, 1};

TEST(Dijkstra, Diamond) {
  const Graph g = testing::diamond4_topology();
  const OracleResult r = dijkstra_opt(g, kDiamondTruth, kS, kG);
  EXPECT_EQ(r.cost, 2.0);
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(*r.path, (Path{{kS, kA, kG}}));
  EXPECT_EQ(path_cost(g, kDiamondTruth, *r.path), r.cost);
}

TEST(Dijkstra, StartIsGoal) {
  const Graph g = testing::diamond4_topology();
  const OracleResult r = dijkstra_opt(g, kDiamondTruth, kA, kA);
  EXPECT_EQ(r.cost, 0.0);
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(*r.path, (Path{{kA}}));
}

TEST(Dijkstra, BlockedGoal) {
  const Graph g = testing::diamond4_topology();
  const std::vector<Cost> truth{1, 5, kInfinity, kInfinity};
  const OracleResult r = dijkstra_opt(g, truth, kS, kG);
  EXPECT_EQ(r.cost, kInfinity);
  EXPECT_FALSE(r.path.has_value());
}

TEST(Dijkstra, ReverseVariantAgrees) {
  const Graph g = testing::diamond4_topology();
  const OracleResult r = dijkstra_opt_to_goal(g, kDiamondTruth, kS, kG);
  EXPECT_EQ(r.cost, 2.0);
  EXPECT_EQ(*r.path, (Path{{kS, kA, kG}}));
  const auto d = distances_to_goal(g, kDiamondTruth, kG);
  EXPECT_EQ(d, (std::vector<Cost>{2, 1, 1, 0}));
}

TEST(CheckBound, Examples) {
  EXPECT_TRUE(check_bound(0.956, 0.84, 1.2, 1.2));
  EXPECT_TRUE(check_bound(2, 2, 1, 1));
  EXPECT_TRUE(check_bound(kInfinity, kInfinity, 1, 1));
  EXPECT_FALSE(check_bound(2.1, 2, 1, 1));
  EXPECT_FALSE(check_bound(kInfinity, 3, 2, 2));
  EXPECT_FALSE(below_optimum(2, 2));
  EXPECT_TRUE(below_optimum(1.5, 2));
}

TEST(BruteForce, Examples) {
  const Graph g = testing::diamond4_topology();
  EXPECT_EQ(brute_force_opt(g, kDiamondTruth, kS, kG).cost, 2.0);

  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const OracleResult t = brute_force_opt(tri, std::vector<Cost>{1, 1, 1}, 0, 2);
  EXPECT_EQ(t.cost, 1.0);
  EXPECT_EQ(*t.path, (Path{{0, 2}}));

  Graph pair(2);
  EXPECT_EQ(brute_force_opt(pair, std::vector<Cost>{}, 0, 1).cost, kInfinity);
  EXPECT_FALSE(brute_force_opt(pair, std::vector<Cost>{}, 0, 1).path.has_value());
}

TEST(BruteForce, SizeGuard) {
  Graph big(kBruteForceVertexLimit + 1);
  EXPECT_THROW(brute_force_opt(big, std::vector<Cost>{}, 0, 1), std::length_error);
}

TEST(PathCost, SummationOrders) {
  const Graph g = testing::diamond4_topology();
  const Path p{{kS, kB, kG}};
  EXPECT_EQ(path_cost(g, kDiamondTruth, p, SumOrder::kFromStart), 6.0);
  EXPECT_EQ(path_cost(g, kDiamondTruth, p, SumOrder::kFromGoal), 6.0);
  EXPECT_THROW(path_cost(g, kDiamondTruth, Path{{kS, kG}}), std::invalid_argument);
}

TEST(OracleProperty, DijkstraMatchesBruteForce) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    const testing::RandomGraph rg = testing::random_graph(rng, n, 0.35, 0.2);
    const VertexId s = static_cast<VertexId>(rng.below(n));
    const VertexId t = static_cast<VertexId>(rng.below(n));
    const OracleResult d = dijkstra_opt(rg.graph, rg.truth, s, t);
    const OracleResult b = brute_force_opt(rg.graph, rg.truth, s, t);
    ASSERT_EQ(d.cost, b.cost);
    ASSERT_EQ(d.path.has_value(), is_finite(d.cost));
    if (d.path) {
      ASSERT_EQ(path_cost(rg.graph, rg.truth, *d.path), d.cost);
    }
    ASSERT_EQ(dijkstra_opt_to_goal(rg.graph, rg.truth, s, t).cost, d.cost);
  }
}

}  // namespace
}  // namespace lazysearch
