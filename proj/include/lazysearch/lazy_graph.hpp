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

#ifndef LAZYSEARCH_LAZY_GRAPH_HPP
#define LAZYSEARCH_LAZY_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "lazysearch/cost.hpp"
#include "lazysearch/graph.hpp"

namespace lazysearch {

/// Result of one call to the expensive evaluator.
struct Evaluation {
  Cost cost = kInfinity;
  /// True iff the true weight differs from the lazy value held before the call.
  bool changed = false;
};

/// Per-edge lazy weight state.
///
/// Each edge carries a heuristic weight (finite, admissible), a true weight
/// that is only revealed by `evaluate`, and an evaluated flag. The lazy
/// weight is the true weight once evaluated and `inflation * heuristic`
/// otherwise. The lazy value is stored explicitly so the branch invariant can
/// be audited against the flag.
class LazyWeights {
 public:
  explicit LazyWeights(double inflation = 1.0);

  EdgeId add_edge(Cost heuristic, Cost truth);
  std::size_t size() const noexcept { return heuristic_.size(); }

  Cost lazy_weight(EdgeId e) const { return lazy_.at(e); }
  Cost heuristic(EdgeId e) const { return heuristic_.at(e); }
  bool is_evaluated(EdgeId e) const { return evaluated_.at(e) != 0; }

  /// Reveals the true weight and moves the edge into the evaluated set. The
  /// evaluation counter (and the optional busy wait) only apply to the first
  /// evaluation since the edge last changed.
  Evaluation evaluate(EdgeId e);

  /// Uncounted access to the true weight. Reserved for oracles and audits;
  /// planners must go through `evaluate`.
  Cost peek_truth(EdgeId e) const { return truth_.at(e); }
  const std::vector<Cost>& truth_snapshot() const noexcept { return truth_; }

  /// Installs a new true weight and reverts the edge to its unevaluated
  /// state. Throws std::invalid_argument for non-positive or NaN weights.
  void change_truth(EdgeId e, Cost weight);

  /// Drops every evaluation (from-scratch replanning). The counter is kept.
  void reset_evaluations();

  double inflation() const noexcept { return inflation_; }
  /// Changes the inflation factor; lazy values of unevaluated edges follow.
  void set_inflation(double inflation);

  /// When set, the heuristic weight of an edge always equals its true weight
  /// (including after changes). Used for policy-equivalence checks.
  void set_exact_heuristic(bool exact);
  bool exact_heuristic() const noexcept { return exact_heuristic_; }

  std::uint64_t evaluations() const noexcept { return evaluations_; }

  void set_evaluation_delay_us(std::uint32_t micros) noexcept { delay_us_ = micros; }

  /// Audit mode re-checks the lazy-weight invariants after every mutation and
  /// counts violations instead of throwing.
  void set_audit(bool enabled) noexcept { audit_ = enabled; }
  std::uint64_t audit_violations() const noexcept { return audit_violations_; }
  /// Full scan over every edge; returns the number of violating edges.
  std::size_t scan_invariants() const;

 private:
  bool edge_ok(EdgeId e) const;
  void audit_edge(EdgeId e);
  void busy_wait() const;

  std::vector<Cost> heuristic_;
  std::vector<Cost> truth_;
  std::vector<Cost> lazy_;
  std::vector<std::uint8_t> evaluated_;
  double inflation_;
  bool exact_heuristic_ = false;
  std::uint64_t evaluations_ = 0;
  std::uint32_t delay_us_ = 0;
  bool audit_ = false;
  std::uint64_t audit_violations_ = 0;
};

/// A graph together with its lazy weight store. Single writer.
class LazyGraph {
 public:
  LazyGraph() = default;
  LazyGraph(Graph graph, LazyWeights weights);

  const Graph& graph() const noexcept { return graph_; }
  LazyWeights& weights() noexcept { return weights_; }
  const LazyWeights& weights() const noexcept { return weights_; }

  Cost lazy_weight(const Edge& e) const;
  Evaluation evaluate(const Edge& e);

  /// Reverts every changed edge to its heuristic lazy value and installs the
  /// new true weights. Returns the distinct target vertices of the changed
  /// edges in ascending order. The whole batch is validated before any state
  /// is touched.
  std::vector<VertexId> apply_change_batch(const ChangeBatch& batch);

  /// Appends densification output. New edges start unevaluated.
  void grow(const GraphGrowth& growth);

  std::vector<VertexId> pred(VertexId v) const { return graph_.pred(v); }
  std::vector<VertexId> succ(VertexId v) const { return graph_.succ(v); }

 private:
  Graph graph_;
  LazyWeights weights_;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_LAZY_GRAPH_HPP
