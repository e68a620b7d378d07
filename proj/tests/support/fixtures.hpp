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

// Shared fixtures for the unit tests.

#ifndef LAZYSEARCH_TESTS_FIXTURES_HPP
#define LAZYSEARCH_TESTS_FIXTURES_HPP

#include <cmath>
#include <cstddef>
#include <ostream>
#include <queue>
#include <vector>

#include "lazysearch/graph.hpp"
#include "lazysearch/lazy_graph.hpp"
#include "lazysearch/sampling.hpp"
#include "lazysearch/search_tree.hpp"
#include "lazysearch/world.hpp"

namespace lazysearch {

// Readable failure messages for path comparisons.
inline void PrintTo(const Path& path, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < path.size(); ++i) *os << (i ? "," : "") << path.vertices[i];
  *os << ")";
}

}  // namespace lazysearch

namespace lazysearch::testing {

// DIAMOND4: s -> a -> g and s -> b -> g.
//   s->a  heuristic 1, weight 1
//   s->b  heuristic 2, weight 5
//   a->g  heuristic 1, weight 1
//   b->g  heuristic 1, weight 1
// Vertex heuristic toward g: h(s)=2, h(a)=1, h(b)=1, h(g)=0.
inline constexpr VertexId kS = 0;
inline constexpr VertexId kA = 1;
inline constexpr VertexId kB = 2;
inline constexpr VertexId kG = 3;

inline Graph diamond4_topology() {
  Graph g(4);
  g.add_edge(kS, kA);
  g.add_edge(kS, kB);
  g.add_edge(kA, kG);
  g.add_edge(kB, kG);
  return g;
}

inline LazyGraph diamond4(double inflation = 1.0) {
  Graph g = diamond4_topology();
  LazyWeights w(inflation);
  w.add_edge(1, 1);
  w.add_edge(2, 5);
  w.add_edge(1, 1);
  w.add_edge(1, 1);
  return LazyGraph(std::move(g), std::move(w));
}

// Vertices sit on a line at s=0, a=b=1, g=2 and h is the distance along it.
// Every edge weighs at least 1, so h is consistent toward any target, and
// h(., g) = [2, 1, 1, 0] as in the fixture description.
inline VertexHeuristic diamond4_heuristic() {
  return [](VertexId from, VertexId to) -> Cost {
    static constexpr Cost position[4] = {0, 1, 1, 2};
    return std::abs(position[from] - position[to]);
  };
}

// Random directed graph with admissible heuristic weights. Weights are small
// integers so every sum is exact.
struct RandomGraph {
  Graph graph;
  std::vector<Cost> heuristic;
  std::vector<Cost> truth;

  LazyGraph lazy(double inflation = 1.0) const {
    LazyWeights w(inflation);
    for (std::size_t e = 0; e < truth.size(); ++e) w.add_edge(heuristic[e], truth[e]);
    return LazyGraph(graph, std::move(w));
  }
};

inline RandomGraph random_graph(Rng& rng, std::size_t n, double density, double blocked) {
  RandomGraph out;
  out.graph = Graph(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || !rng.bernoulli(density)) continue;
      out.graph.add_edge(u, v);
      const Cost h = static_cast<Cost>(1 + rng.below(5));
      out.truth.push_back(rng.bernoulli(blocked) ? kInfinity
                                                 : h + static_cast<Cost>(rng.below(4)));
      out.heuristic.push_back(h);
    }
  }
  return out;
}

inline VertexHeuristic zero_heuristic() {
  return [](VertexId, VertexId) { return 0.0; };
}

// Dijkstra from `root` over the current lazy weights, walking tree edges in
// the given direction. Sums are accumulated from the root, like the kernel.
inline std::vector<Cost> lazy_distances(const SearchTree& tree) {
  const Graph& g = tree.graph().graph();
  std::vector<Cost> dist(g.vertex_count(), kInfinity);
  using Item = std::pair<Cost, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[tree.root()] = 0.0;
  heap.push({0.0, tree.root()});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Adjacent& child : tree.tree_children(u)) {
      const Cost w = tree.graph().weights().lazy_weight(child.edge);
      const Cost c = add_costs(d, w);
      if (c < dist[child.vertex]) {
        dist[child.vertex] = c;
        heap.push({c, child.vertex});
      }
    }
  }
  return dist;
}

}  // namespace lazysearch::testing

#endif  // LAZYSEARCH_TESTS_FIXTURES_HPP
