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

#include "lazysearch/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lazysearch {
namespace {

void insert_sorted(std::vector<Adjacent>& list, Adjacent entry) {
  auto it = std::lower_bound(
      list.begin(), list.end(), entry.vertex,
      [](const Adjacent& a, VertexId v) { return a.vertex < v; });
  list.insert(it, entry);
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {}

VertexId Graph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<VertexId>(out_.size() - 1);
}

EdgeId Graph::add_edge(VertexId source, VertexId target) {
  check_vertex(source);
  check_vertex(target);
  if (source == target) {
    throw std::invalid_argument("self loop on vertex " + std::to_string(source));
  }
  if (find_edge(source, target)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(source) +
                                "->" + std::to_string(target));
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({source, target});
  insert_sorted(out_[source], {target, id});
  insert_sorted(in_[target], {source, id});
  return id;
}

std::optional<EdgeId> Graph::find_edge(VertexId source, VertexId target) const {
  if (!contains(source) || !contains(target)) return std::nullopt;
  const auto& list = out_[source];
  auto it = std::lower_bound(
      list.begin(), list.end(), target,
      [](const Adjacent& a, VertexId v) { return a.vertex < v; });
  if (it == list.end() || it->vertex != target) return std::nullopt;
  return it->edge;
}

EdgeId Graph::edge_id(const Edge& e) const {
  if (auto id = find_edge(e.source, e.target)) return *id;
  throw std::invalid_argument("unknown edge " + std::to_string(e.source) +
                              "->" + std::to_string(e.target));
}

std::span<const Adjacent> Graph::successors(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const Adjacent> Graph::predecessors(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

std::vector<VertexId> Graph::succ(VertexId v) const {
  std::vector<VertexId> ids;
  for (const auto& a : successors(v)) ids.push_back(a.vertex);
  return ids;
}

std::vector<VertexId> Graph::pred(VertexId v) const {
  std::vector<VertexId> ids;
  for (const auto& a : predecessors(v)) ids.push_back(a.vertex);
  return ids;
}

void Graph::check_vertex(VertexId v) const {
  if (!contains(v)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
}

}  // namespace lazysearch
