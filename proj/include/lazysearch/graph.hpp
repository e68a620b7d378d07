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

#ifndef LAZYSEARCH_GRAPH_HPP
#define LAZYSEARCH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lazysearch/cost.hpp"

namespace lazysearch {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the neighbouring vertex and the id of the
/// connecting edge.
struct Adjacent {
  VertexId vertex = 0;
  EdgeId edge = 0;
};

/// Directed graph with dense vertex and edge ids. Adjacency lists are kept in
/// ascending neighbour-id order so every iteration is deterministic. Vertices
/// and edges can be appended but never removed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  VertexId add_vertex();
  /// Appends the directed edge (source, target). Throws std::invalid_argument
  /// on self loops, unknown endpoints or duplicates.
  EdgeId add_edge(VertexId source, VertexId target);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool contains(VertexId v) const noexcept { return v < out_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(VertexId source, VertexId target) const;
  /// Like find_edge but throws std::invalid_argument for a missing edge.
  EdgeId edge_id(const Edge& e) const;

  std::span<const Adjacent> successors(VertexId v) const;
  std::span<const Adjacent> predecessors(VertexId v) const;

  /// Neighbour ids only, ascending.
  std::vector<VertexId> succ(VertexId v) const;
  std::vector<VertexId> pred(VertexId v) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Adjacent>> out_;
  std::vector<std::vector<Adjacent>> in_;
};

/// A set of edges whose true weights changed, applied between repairs.
struct WeightChange {
  Edge edge;
  Cost weight = kInfinity;
};

struct ChangeBatch {
  std::vector<WeightChange> changes;

  bool empty() const noexcept { return changes.empty(); }
  std::size_t size() const noexcept { return changes.size(); }
};

/// A newly added edge together with its heuristic and true weight.
struct NewEdge {
  Edge edge;
  Cost heuristic = 0.0;
  Cost weight = kInfinity;
};

/// Vertices and edges appended to a graph by densification. New vertex ids
/// are [first_vertex, first_vertex + vertex_count).
struct GraphGrowth {
  VertexId first_vertex = 0;
  std::size_t vertex_count = 0;
  std::vector<NewEdge> edges;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_GRAPH_HPP
