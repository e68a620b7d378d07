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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "lazysearch/graph.hpp"
#include "lazysearch/lazy_graph.hpp"
#include "lazysearch/sampling.hpp"

namespace lazysearch {
namespace {

using testing::diamond4;
using testing::kA;
using testing::kB;
using testing::kG;
using testing::kS;

TEST(LazyWeight, EvaluatedEdgeReportsTruth) {
  LazyWeights w;
  const EdgeId e = w.add_edge(2, 3);
  w.evaluate(e);
  EXPECT_EQ(w.lazy_weight(e), 3.0);
}

TEST(LazyWeight, UnevaluatedEdgeReportsHeuristic) {
  LazyWeights w;
  const EdgeId e = w.add_edge(2, 3);
  EXPECT_EQ(w.lazy_weight(e), 2.0);
  EXPECT_EQ(w.evaluations(), 0u);
}

TEST(LazyWeight, InflationScalesUnevaluatedEdges) {
  LazyWeights w(1.2);
  const EdgeId e = w.add_edge(2, 3);
  EXPECT_EQ(w.lazy_weight(e), 1.2 * 2.0);
}

TEST(LazyWeight, UnknownEdgeIsRejected) {
  LazyGraph g = diamond4();
  EXPECT_THROW(g.lazy_weight(Edge{kA, kB}), std::invalid_argument);
  EXPECT_THROW(g.weights().lazy_weight(99), std::out_of_range);
}

TEST(Evaluate, ConsistentEdgeIsUnchanged) {
  LazyGraph g = diamond4();
  const Evaluation ev = g.evaluate(Edge{kS, kA});
  EXPECT_EQ(ev.cost, 1.0);
  EXPECT_FALSE(ev.changed);
  EXPECT_EQ(g.weights().evaluations(), 1u);
}

TEST(Evaluate, UnderestimatedEdgeIsChanged) {
  LazyGraph g = diamond4();
  const Evaluation ev = g.evaluate(Edge{kS, kB});
  EXPECT_EQ(ev.cost, 5.0);
  EXPECT_TRUE(ev.changed);
}

TEST(Evaluate, SecondEvaluationIsFree) {
  LazyGraph g = diamond4();
  g.evaluate(Edge{kS, kB});
  const Evaluation again = g.evaluate(Edge{kS, kB});
  EXPECT_EQ(again.cost, 5.0);
  EXPECT_FALSE(again.changed);
  EXPECT_EQ(g.weights().evaluations(), 1u);
}

TEST(ApplyChangeBatch, RevertsToHeuristicAndReportsTargets) {
  LazyGraph g = diamond4();
  g.evaluate(Edge{kA, kG});
  ASSERT_TRUE(g.weights().is_evaluated(g.graph().edge_id({kA, kG})));
  const auto targets = g.apply_change_batch(ChangeBatch{{{Edge{kA, kG}, 10.0}}});
  EXPECT_EQ(targets, std::vector<VertexId>{kG});
  const EdgeId e = g.graph().edge_id({kA, kG});
  EXPECT_FALSE(g.weights().is_evaluated(e));
  EXPECT_EQ(g.weights().lazy_weight(e), 1.0);
  EXPECT_EQ(g.weights().peek_truth(e), 10.0);
}

TEST(ApplyChangeBatch, EmptyBatchIsNoop) {
  LazyGraph g = diamond4();
  g.evaluate(Edge{kS, kB});
  EXPECT_TRUE(g.apply_change_batch(ChangeBatch{}).empty());
  EXPECT_TRUE(g.weights().is_evaluated(g.graph().edge_id({kS, kB})));
  EXPECT_EQ(g.weights().lazy_weight(g.graph().edge_id({kS, kB})), 5.0);
}

TEST(ApplyChangeBatch, InfiniteWeightAccepted) {
  LazyGraph g = diamond4();
  g.evaluate(Edge{kS, kA});
  g.apply_change_batch(ChangeBatch{{{Edge{kS, kA}, kInfinity}}});
  const EdgeId e = g.graph().edge_id({kS, kA});
  EXPECT_EQ(g.weights().lazy_weight(e), 1.0);
  EXPECT_EQ(g.evaluate(Edge{kS, kA}).cost, kInfinity);
}

TEST(ApplyChangeBatch, NonPositiveWeightRejectedAtomically) {
  LazyGraph g = diamond4();
  const ChangeBatch bad{{{Edge{kS, kA}, 7.0}, {Edge{kA, kG}, 0.0}}};
  EXPECT_THROW(g.apply_change_batch(bad), std::invalid_argument);
  EXPECT_EQ(g.weights().peek_truth(g.graph().edge_id({kS, kA})), 1.0);
  EXPECT_THROW(g.apply_change_batch(ChangeBatch{{{Edge{kS, kA}, -1.0}}}),
               std::invalid_argument);
}

TEST(Adjacency, DiamondNeighbours) {
  LazyGraph g = diamond4();
  EXPECT_EQ(g.pred(kG), (std::vector<VertexId>{kA, kB}));
  EXPECT_EQ(g.succ(kS), (std::vector<VertexId>{kA, kB}));
}

TEST(Adjacency, IsolatedVertexHasNoNeighbours) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_TRUE(g.pred(2).empty());
  EXPECT_TRUE(g.succ(2).empty());
}

TEST(Adjacency, AscendingOrderRegardlessOfInsertion) {
  Graph g(5);
  g.add_edge(4, 0);
  g.add_edge(1, 0);
  g.add_edge(3, 0);
  g.add_edge(0, 3);
  g.add_edge(0, 2);
  EXPECT_EQ(g.pred(0), (std::vector<VertexId>{1, 3, 4}));
  EXPECT_EQ(g.succ(0), (std::vector<VertexId>{2, 3}));
}

TEST(Graph, RejectsMalformedEdges) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::invalid_argument);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
}

TEST(LazyWeights, RejectsNonPositiveTruth) {
  LazyWeights w;
  EXPECT_THROW(w.add_edge(1, 0), std::invalid_argument);
  EXPECT_THROW(w.add_edge(1, -2), std::invalid_argument);
}

// Random operation sequences. The reference model tracks the evaluated set and
// a replay log of first-time evaluations independently of LazyWeights.
TEST(LazyWeightsProperty, BranchAgreementAndCounterMatchReplayLog) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    const double inflation = seed % 2 == 0 ? 1.0 : 1.0 + rng.uniform01();
    LazyWeights w(inflation);
    const std::size_t m = 5 + rng.below(20);
    std::vector<Cost> heuristic;
    std::vector<Cost> truth;
    for (std::size_t i = 0; i < m; ++i) {
      heuristic.push_back(1.0 + rng.uniform01());
      truth.push_back(heuristic.back() + rng.uniform01());
      w.add_edge(heuristic.back(), truth.back());
    }
    std::vector<bool> evaluated(m, false);
    std::uint64_t log = 0;
    for (int step = 0; step < 300; ++step) {
      const EdgeId e = static_cast<EdgeId>(rng.below(m));
      const Cost before = w.lazy_weight(e);
      switch (rng.below(3)) {
        case 0: {
          const Evaluation ev = w.evaluate(e);
          if (!evaluated[e]) ++log;
          evaluated[e] = true;
          EXPECT_EQ(ev.cost, truth[e]);
          EXPECT_EQ(ev.changed, truth[e] != before);
          break;
        }
        case 1: {
          const Cost nw = rng.bernoulli(0.3) ? kInfinity : heuristic[e] * (1.0 + rng.uniform01());
          w.change_truth(e, nw);
          truth[e] = nw;
          evaluated[e] = false;
          break;
        }
        default:
          break;
      }
      for (EdgeId k = 0; k < m; ++k) {
        ASSERT_EQ(w.is_evaluated(k), evaluated[k]);
        ASSERT_EQ(w.lazy_weight(k), evaluated[k] ? truth[k] : inflation * heuristic[k]);
        ASSERT_LE(w.lazy_weight(k), inflation * truth[k]);
      }
      ASSERT_EQ(w.evaluations(), log);
    }
    EXPECT_EQ(w.scan_invariants(), 0u);
  }
}

TEST(LazyWeightsProperty, AuditCountsNothingOnValidSequences) {
  LazyGraph g = diamond4(1.3);
  g.weights().set_audit(true);
  g.evaluate(Edge{kS, kB});
  g.apply_change_batch(ChangeBatch{{{Edge{kS, kB}, kInfinity}}});
  g.evaluate(Edge{kS, kB});
  g.weights().set_inflation(1.0);
  EXPECT_EQ(g.weights().audit_violations(), 0u);
  EXPECT_EQ(g.weights().scan_invariants(), 0u);
}

TEST(LazyWeightsProperty, ScanFlagsOverestimate) {
  LazyWeights w;
  w.add_edge(1, 2);
  w.add_edge(3, 2);  // heuristic overestimates the truth
  EXPECT_EQ(w.scan_invariants(), 1u);
}

TEST(LazyWeights, ResetKeepsCounter) {
  LazyGraph g = diamond4();
  g.evaluate(Edge{kS, kB});
  g.weights().reset_evaluations();
  EXPECT_FALSE(g.weights().is_evaluated(g.graph().edge_id({kS, kB})));
  EXPECT_EQ(g.weights().evaluations(), 1u);
  g.evaluate(Edge{kS, kB});
  EXPECT_EQ(g.weights().evaluations(), 2u);
}

TEST(LazyGraph, GrowAppendsUnevaluatedEdges) {
  LazyGraph g = diamond4();
  GraphGrowth growth;
  growth.first_vertex = 4;
  growth.vertex_count = 1;
  growth.edges.push_back(NewEdge{Edge{kG, 4}, 1.5, 2.0});
  g.grow(growth);
  ASSERT_EQ(g.graph().vertex_count(), 5u);
  const EdgeId e = g.graph().edge_id({kG, 4});
  EXPECT_FALSE(g.weights().is_evaluated(e));
  EXPECT_EQ(g.weights().lazy_weight(e), 1.5);
  GraphGrowth stale;
  stale.first_vertex = 2;
  stale.vertex_count = 1;
  EXPECT_THROW(g.grow(stale), std::invalid_argument);
}

}  // namespace
}  // namespace lazysearch
