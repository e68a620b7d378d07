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

#ifndef LAZYSEARCH_SEARCH_TREE_HPP
#define LAZYSEARCH_SEARCH_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lazysearch/cost.hpp"
#include "lazysearch/graph.hpp"
#include "lazysearch/lazy_graph.hpp"
#include "lazysearch/repair_queue.hpp"

namespace lazysearch {

/// Consistent cost-to-go estimate between two vertices.
using VertexHeuristic = std::function<Cost(VertexId from, VertexId to)>;

/// Thrown when a kernel invariant is found broken (e.g. a backpointer chain
/// that reaches neither the root nor a truncated vertex).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Forward trees grow from the start over predecessor edges (u, v). Reverse
/// trees grow from the goal over successor edges (v, u).
enum class TreeDirection { kForward, kReverse };

/// Predicate deciding when repair pauses to hand a candidate path to the
/// evaluator.
class Event {
 public:
  enum class Kind { kShortestPath, kConstantDepth };

  static Event shortest_path() noexcept { return Event(Kind::kShortestPath, 0); }
  /// Pause once the candidate path holds `alpha` unevaluated edges.
  static Event constant_depth(std::size_t alpha) {
    if (alpha == 0) throw std::invalid_argument("lookahead depth must be >= 1");
    return Event(Kind::kConstantDepth, alpha);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t alpha() const noexcept { return alpha_; }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  Event(Kind kind, std::size_t alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  std::size_t alpha_;
};

/// Vertex sequence ordered from the tree root to a leaf.
struct Path {
  std::vector<VertexId> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool contains(VertexId v) const;

  friend bool operator==(const Path&, const Path&) = default;
};

struct NodeRecord {
  Cost g = kInfinity;
  Cost rhs = kInfinity;
  std::optional<VertexId> bp;
  /// Cost-to-come along the current backpointer chain, without repair.
  Cost gpi = kInfinity;
  bool truncated = false;
  /// Path certified when the vertex was truncated.
  std::optional<Path> frozen_path;
};

/// Which lower bound the second truncation rule compares against. On an
/// underconsistent vertex both forms coincide because g < rhs.
enum class UnderconsistentBound { kStoredG, kMinGRhs };

struct Truncation {
  double epsilon2 = 1.0;
  UnderconsistentBound bound = UnderconsistentBound::kStoredG;
};

struct KernelCounters {
  std::uint64_t expansions = 0;
  std::uint64_t stale_reinserts = 0;
  std::uint64_t repair_calls = 0;
  std::uint64_t truncations = 0;
  std::uint64_t early_returns = 0;
  /// ConstantDepth fired with more unevaluated edges than requested.
  std::uint64_t depth_overshoots = 0;
  /// Largest number of times one vertex was processed inside a repair call.
  std::uint32_t max_processed_in_call = 0;
  /// Repair calls in which some vertex was processed more than twice.
  std::uint64_t expansion_bound_violations = 0;
  /// Processed pops whose key was smaller than the previous one in the call.
  std::uint64_t key_order_violations = 0;
};

/// Incremental lazy search tree shared by every planner: node records, the
/// repair queue, UpdateVertex, the truncation bookkeeping and path recovery.
///
/// The tree owns its graph. `target` is the vertex the tree is repaired
/// toward (the goal for forward trees, the agent for reverse ones); the
/// heuristic is always evaluated as h(v, target).
class SearchTree {
 public:
  SearchTree(LazyGraph graph, VertexHeuristic heuristic, TreeDirection direction,
             VertexId root, VertexId target, bool eager = false);

  LazyGraph& graph() noexcept { return graph_; }
  const LazyGraph& graph() const noexcept { return graph_; }
  TreeDirection direction() const noexcept { return direction_; }
  VertexId root() const noexcept { return root_; }
  VertexId target() const noexcept { return target_; }
  void set_target(VertexId target);
  Cost km() const noexcept { return km_; }
  void set_km(Cost km) noexcept { km_ = km; }
  bool eager() const noexcept { return eager_; }

  const NodeRecord& record(VertexId v) const { return records_.at(v); }
  /// Direct record access for diagnostics and fixtures. Callers are
  /// responsible for restoring the queue invariant.
  NodeRecord& mutable_record(VertexId v) { return records_.at(v); }
  const RepairQueue& queue() const noexcept { return queue_; }
  RepairQueue& mutable_queue() noexcept { return queue_; }
  const std::vector<VertexId>& truncated() const noexcept { return truncated_list_; }
  const KernelCounters& counters() const noexcept { return counters_; }

  std::span<const Adjacent> tree_parents(VertexId v) const;
  std::span<const Adjacent> tree_children(VertexId v) const;
  /// Edge joining a tree parent to its child, oriented per direction.
  EdgeId tree_edge(VertexId parent, VertexId child) const;
  std::vector<EdgeId> path_edges(const Path& path) const;

  Cost heuristic(VertexId v) const { return heuristic_(v, target_); }
  Cost heuristic_between(VertexId from, VertexId to) const { return heuristic_(from, to); }
  static Key calculate_key(const NodeRecord& record, Cost heuristic, Cost km) noexcept;
  Key calculate_key(VertexId v) const;

  /// Sets rhs(root) = 0, g^pi(root) = 0 and queues the root.
  void initialize_root();
  void update_vertex(VertexId v);
  /// Walks backpointers from v toward the root summing lazy weights. A
  /// truncated vertex on the way contributes the cost of its frozen path.
  /// Stores and returns g^pi(v); +inf on a cycle or a missing backpointer.
  Cost compute_gpi(VertexId v);
  /// Root-to-v path along backpointers, splicing the frozen path of the first
  /// truncated vertex met. Throws InvariantViolation on a broken chain.
  Path obtain_path(VertexId v) const;
  std::size_t unevaluated_edges(const Path& path) const;
  bool event_triggered(const Event& event, VertexId v);

  /// Repairs inconsistencies until an event fires, the first truncation rule
  /// certifies the current path, or the target is settled. Returns the
  /// candidate path, or nullopt when the target is unreachable.
  std::optional<Path> repair(const Event& event,
                             const std::optional<Truncation>& truncation);

  /// Empties the truncated list, resets g^pi and re-queues the vertices that
  /// are still inconsistent.
  void clear_truncated();

  /// Forgets all search state (records, queue, truncation). Weights untouched.
  void reset();
  /// Adopts vertices appended to the graph.
  void grow_records();
  /// Refreshes the lazy value of every vertex (after an inflation change).
  void update_all_vertices();

  /// Sum of lazy weights along the path, accumulated from the root.
  Cost lazy_path_cost(const Path& path) const;

  /// Full scan: the queue holds exactly the inconsistent, untruncated vertices.
  bool queue_invariant_holds() const;

 private:
  Cost use_weight(EdgeId e);
  void flush_pending();
  void note_processed(VertexId v, const Key& key);
  void truncate(VertexId v);
  bool settled(VertexId v) const;

  LazyGraph graph_;
  VertexHeuristic heuristic_;
  TreeDirection direction_;
  VertexId root_;
  VertexId target_;
  bool eager_;
  Cost km_ = 0.0;

  std::vector<NodeRecord> records_;
  RepairQueue queue_;
  std::vector<VertexId> truncated_list_;
  // Vertex made consistent by the expansion that fired an event; its children
  // are updated at the start of the next repair call.
  std::optional<VertexId> pending_;

  std::vector<std::uint32_t> processed_;
  std::vector<VertexId> processed_touched_;
  Key last_processed_key_;
  mutable std::vector<std::uint32_t> visit_stamp_;
  mutable std::uint32_t stamp_ = 0;

  KernelCounters counters_;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_SEARCH_TREE_HPP
