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

#include "lazysearch/lazy_graph.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace lazysearch {

LazyWeights::LazyWeights(double inflation) : inflation_(inflation) {
  if (!(inflation >= 1.0) || inflation == kInfinity) {
    throw std::invalid_argument("inflation must be a finite value >= 1");
  }
}

EdgeId LazyWeights::add_edge(Cost heuristic, Cost truth) {
  if (!is_valid_edge_weight(truth)) {
    throw std::invalid_argument("edge weight must be positive");
  }
  if (exact_heuristic_) heuristic = truth;
  if (std::isnan(heuristic) || heuristic <= 0.0 ||
      (!exact_heuristic_ && heuristic == kInfinity)) {
    throw std::invalid_argument("heuristic edge weight must be finite and positive");
  }
  heuristic_.push_back(heuristic);
  truth_.push_back(truth);
  lazy_.push_back(inflation_ * heuristic);
  evaluated_.push_back(0);
  const auto id = static_cast<EdgeId>(heuristic_.size() - 1);
  if (audit_) audit_edge(id);
  return id;
}

Evaluation LazyWeights::evaluate(EdgeId e) {
  if (evaluated_.at(e)) return {truth_[e], false};
  busy_wait();
  ++evaluations_;
  const Cost before = lazy_[e];
  evaluated_[e] = 1;
  lazy_[e] = truth_[e];
  if (audit_) audit_edge(e);
  return {truth_[e], truth_[e] != before};
}

void LazyWeights::change_truth(EdgeId e, Cost weight) {
  if (!is_valid_edge_weight(weight)) {
    throw std::invalid_argument("new edge weight must be positive");
  }
  truth_.at(e) = weight;
  if (exact_heuristic_) heuristic_[e] = weight;
  evaluated_[e] = 0;
  lazy_[e] = inflation_ * heuristic_[e];
  if (audit_) audit_edge(e);
}

void LazyWeights::reset_evaluations() {
  for (EdgeId e = 0; e < heuristic_.size(); ++e) {
    evaluated_[e] = 0;
    lazy_[e] = inflation_ * heuristic_[e];
  }
  if (audit_) audit_violations_ += scan_invariants();
}

void LazyWeights::set_inflation(double inflation) {
  if (!(inflation >= 1.0) || inflation == kInfinity) {
    throw std::invalid_argument("inflation must be a finite value >= 1");
  }
  inflation_ = inflation;
  for (EdgeId e = 0; e < heuristic_.size(); ++e) {
    if (!evaluated_[e]) lazy_[e] = inflation_ * heuristic_[e];
  }
  if (audit_) audit_violations_ += scan_invariants();
}

void LazyWeights::set_exact_heuristic(bool exact) {
  exact_heuristic_ = exact;
  if (!exact) return;
  for (EdgeId e = 0; e < heuristic_.size(); ++e) {
    heuristic_[e] = truth_[e];
    if (!evaluated_[e]) lazy_[e] = inflation_ * heuristic_[e];
  }
}

bool LazyWeights::edge_ok(EdgeId e) const {
  const Cost lazy = lazy_[e];
  if (std::isnan(lazy)) return false;
  const bool branch_ok = evaluated_[e] ? lazy == truth_[e]
                                       : lazy == inflation_ * heuristic_[e];
  const bool admissible = heuristic_[e] <= truth_[e];
  // Invariant: the lazy value never exceeds the inflated true weight.
  const bool bounded = lazy <= inflation_ * truth_[e];
  return branch_ok && admissible && bounded;
}

void LazyWeights::audit_edge(EdgeId e) {
  if (!edge_ok(e)) ++audit_violations_;
}

std::size_t LazyWeights::scan_invariants() const {
  std::size_t bad = 0;
  for (EdgeId e = 0; e < heuristic_.size(); ++e) {
    if (!edge_ok(e)) ++bad;
  }
  return bad;
}

void LazyWeights::busy_wait() const {
  if (delay_us_ == 0) return;
  const auto until =
      std::chrono::steady_clock::now() + std::chrono::microseconds(delay_us_);
  while (std::chrono::steady_clock::now() < until) {
  }
}

LazyGraph::LazyGraph(Graph graph, LazyWeights weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (graph_.edge_count() != weights_.size()) {
    throw std::invalid_argument("weight store does not match the graph");
  }
}

Cost LazyGraph::lazy_weight(const Edge& e) const {
  return weights_.lazy_weight(graph_.edge_id(e));
}

Evaluation LazyGraph::evaluate(const Edge& e) {
  return weights_.evaluate(graph_.edge_id(e));
}

std::vector<VertexId> LazyGraph::apply_change_batch(const ChangeBatch& batch) {
  std::vector<EdgeId> ids;
  ids.reserve(batch.size());
  for (const auto& change : batch.changes) {
    if (!is_valid_edge_weight(change.weight)) {
      throw std::invalid_argument(
          "change batch weight for edge " + std::to_string(change.edge.source) +
          "->" + std::to_string(change.edge.target) + " must be positive");
    }
    ids.push_back(graph_.edge_id(change.edge));
  }
  std::vector<VertexId> targets;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    weights_.change_truth(ids[i], batch.changes[i].weight);
    targets.push_back(batch.changes[i].edge.target);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

void LazyGraph::grow(const GraphGrowth& growth) {
  if (growth.first_vertex != graph_.vertex_count()) {
    throw std::invalid_argument("growth does not start at the next vertex id");
  }
  for (std::size_t i = 0; i < growth.vertex_count; ++i) graph_.add_vertex();
  for (const auto& e : growth.edges) {
    graph_.add_edge(e.edge.source, e.edge.target);
    weights_.add_edge(e.heuristic, e.weight);
  }
}

}  // namespace lazysearch
