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

#include "lazysearch/search_tree.hpp"

#include <algorithm>
#include <string>

namespace lazysearch {

bool Path::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

SearchTree::SearchTree(LazyGraph graph, VertexHeuristic heuristic,
                       TreeDirection direction, VertexId root, VertexId target,
                       bool eager)
    : graph_(std::move(graph)),
      heuristic_(std::move(heuristic)),
      direction_(direction),
      root_(root),
      target_(target),
      eager_(eager) {
  if (!graph_.graph().contains(root) || !graph_.graph().contains(target)) {
    throw std::invalid_argument("root and target must be graph vertices");
  }
  if (!heuristic_) throw std::invalid_argument("a vertex heuristic is required");
  grow_records();
}

void SearchTree::set_target(VertexId target) {
  if (!graph_.graph().contains(target)) {
    throw std::invalid_argument("unknown target vertex " + std::to_string(target));
  }
  target_ = target;
}

std::span<const Adjacent> SearchTree::tree_parents(VertexId v) const {
  return direction_ == TreeDirection::kForward ? graph_.graph().predecessors(v)
                                               : graph_.graph().successors(v);
}

std::span<const Adjacent> SearchTree::tree_children(VertexId v) const {
  return direction_ == TreeDirection::kForward ? graph_.graph().successors(v)
                                               : graph_.graph().predecessors(v);
}

EdgeId SearchTree::tree_edge(VertexId parent, VertexId child) const {
  return direction_ == TreeDirection::kForward
             ? graph_.graph().edge_id({parent, child})
             : graph_.graph().edge_id({child, parent});
}

std::vector<EdgeId> SearchTree::path_edges(const Path& path) const {
  std::vector<EdgeId> edges;
  for (std::size_t i = 1; i < path.size(); ++i) {
    edges.push_back(tree_edge(path.vertices[i - 1], path.vertices[i]));
  }
  return edges;
}

Key SearchTree::calculate_key(const NodeRecord& record, Cost heuristic,
                              Cost km) noexcept {
  const Cost best = std::min(record.g, record.rhs);
  return {add_costs(add_costs(best, heuristic), km), best};
}

Key SearchTree::calculate_key(VertexId v) const {
  return calculate_key(records_.at(v), heuristic(v), km_);
}

void SearchTree::initialize_root() {
  auto& r = records_.at(root_);
  r.rhs = 0.0;
  r.gpi = 0.0;
  update_vertex(root_);
}

Cost SearchTree::use_weight(EdgeId e) {
  auto& weights = graph_.weights();
  return eager_ ? weights.evaluate(e).cost : weights.lazy_weight(e);
}

void SearchTree::update_vertex(VertexId v) {
  auto& r = records_.at(v);
  if (v != root_) {
    Cost best = kInfinity;
    std::optional<VertexId> best_parent;
    for (const Adjacent& parent : tree_parents(v)) {
      const Cost candidate = add_costs(records_[parent.vertex].g, use_weight(parent.edge));
      // Parents arrive in ascending id order, so strict < keeps the smallest id.
      if (candidate < best) {
        best = candidate;
        best_parent = parent.vertex;
      }
    }
    r.rhs = best;
    r.bp = best_parent;
  }
  queue_.remove(v);
  if (r.g != r.rhs && !r.truncated) queue_.insert(v, calculate_key(v));
}

Cost SearchTree::compute_gpi(VertexId v) {
  ++stamp_;
  std::vector<VertexId> chain;
  Cost base = 0.0;
  VertexId cur = v;
  while (cur != root_) {
    const NodeRecord& r = records_[cur];
    if (r.truncated && r.frozen_path) {
      base = lazy_path_cost(*r.frozen_path);
      break;
    }
    if (visit_stamp_[cur] == stamp_ || !r.bp) {
      records_[v].gpi = kInfinity;
      return kInfinity;
    }
    visit_stamp_[cur] = stamp_;
    chain.push_back(cur);
    cur = *r.bp;
  }
  // Accumulate root-first so the value matches a path cost bit for bit.
  Cost total = base;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    total = add_costs(total, graph_.weights().lazy_weight(tree_edge(*records_[*it].bp, *it)));
  }
  records_[v].gpi = total;
  return total;
}

Path SearchTree::obtain_path(VertexId v) const {
  ++stamp_;
  std::vector<VertexId> reversed;
  VertexId cur = v;
  while (true) {
    const NodeRecord& r = records_.at(cur);
    if (r.truncated && r.frozen_path) {
      Path spliced = *r.frozen_path;
      spliced.vertices.insert(spliced.vertices.end(), reversed.rbegin(), reversed.rend());
      return spliced;
    }
    reversed.push_back(cur);
    if (cur == root_) break;
    if (!r.bp || visit_stamp_[cur] == stamp_) {
      throw InvariantViolation("backpointer chain from vertex " + std::to_string(v) +
                               " breaks at vertex " + std::to_string(cur));
    }
    visit_stamp_[cur] = stamp_;
    cur = *r.bp;
  }
  return Path{{reversed.rbegin(), reversed.rend()}};
}

std::size_t SearchTree::unevaluated_edges(const Path& path) const {
  std::size_t count = 0;
  for (EdgeId e : path_edges(path)) {
    if (!graph_.weights().is_evaluated(e)) ++count;
  }
  return count;
}

bool SearchTree::event_triggered(const Event& event, VertexId v) {
  if (v == target_) return true;
  if (event.kind() == Event::Kind::kShortestPath) return false;
  const std::size_t depth = unevaluated_edges(obtain_path(v));
  if (depth > event.alpha()) ++counters_.depth_overshoots;
  return depth >= event.alpha();
}

bool SearchTree::settled(VertexId v) const {
  const NodeRecord& r = records_[v];
  return r.truncated || r.g == r.rhs;
}

void SearchTree::flush_pending() {
  if (!pending_) return;
  const VertexId u = *pending_;
  pending_.reset();
  for (const Adjacent& child : tree_children(u)) update_vertex(child.vertex);
}

void SearchTree::note_processed(VertexId v, const Key& key) {
  ++counters_.expansions;
  if (key < last_processed_key_) ++counters_.key_order_violations;
  last_processed_key_ = key;
  if (processed_[v] == 0) processed_touched_.push_back(v);
  const std::uint32_t count = ++processed_[v];
  counters_.max_processed_in_call = std::max(counters_.max_processed_in_call, count);
}

void SearchTree::truncate(VertexId v) {
  NodeRecord& r = records_[v];
  r.frozen_path = obtain_path(v);
  r.truncated = true;
  truncated_list_.push_back(v);
  ++counters_.truncations;
}

std::optional<Path> SearchTree::repair(const Event& event,
                                       const std::optional<Truncation>& truncation) {
  ++counters_.repair_calls;
  for (VertexId v : processed_touched_) processed_[v] = 0;
  processed_touched_.clear();
  last_processed_key_ = Key{-kInfinity, -kInfinity};
  flush_pending();

  std::uint32_t worst = 0;
  auto finish = [&](std::optional<Path> result) {
    for (VertexId v : processed_touched_) worst = std::max(worst, processed_[v]);
    if (worst > 2) ++counters_.expansion_bound_violations;
    return result;
  };

  while (!queue_.empty()) {
    if (!(queue_.top_key() < calculate_key(target_)) && settled(target_)) break;
    const RepairQueue::Entry top = queue_.pop();
    const VertexId u = top.vertex;
    const Key fresh = calculate_key(u);
    if (top.key < fresh) {
      queue_.insert(u, fresh);
      ++counters_.stale_reinserts;
      continue;
    }
    NodeRecord& r = records_[u];
    const Cost h = heuristic(u);

    if (truncation) {
      const Cost path_cost = compute_gpi(target_);
      const Cost bound = truncation->epsilon2 * add_costs(std::min(r.g, r.rhs), h);
      if (is_finite(path_cost) && path_cost <= bound) {
        // The popped vertex stays inconsistent; put it back untouched.
        queue_.insert(u, top.key);
        ++counters_.early_returns;
        return finish(obtain_path(target_));
      }
    }

    note_processed(u, top.key);
    if (r.g > r.rhs) {
      r.g = r.rhs;
      if (event_triggered(event, u)) {
        pending_ = u;
        return finish(obtain_path(u));
      }
      for (const Adjacent& child : tree_children(u)) update_vertex(child.vertex);
      continue;
    }

    if (truncation) {
      const Cost gpi = compute_gpi(u);
      const Cost lower = truncation->bound == UnderconsistentBound::kStoredG
                             ? r.g
                             : std::min(r.g, r.rhs);
      if (is_finite(gpi) && add_costs(gpi, h) <= truncation->epsilon2 * add_costs(lower, h)) {
        truncate(u);
        continue;
      }
    }
    r.g = kInfinity;
    update_vertex(u);
    for (const Adjacent& child : tree_children(u)) update_vertex(child.vertex);
  }

  const NodeRecord& t = records_[target_];
  if (t.truncated || is_finite(t.g)) return finish(obtain_path(target_));
  return finish(std::nullopt);
}

void SearchTree::clear_truncated() {
  std::vector<VertexId> cleared;
  cleared.swap(truncated_list_);
  for (VertexId v : cleared) {
    NodeRecord& r = records_[v];
    r.truncated = false;
    r.frozen_path.reset();
    r.gpi = kInfinity;
  }
  for (VertexId v : cleared) update_vertex(v);
}

void SearchTree::reset() {
  std::fill(records_.begin(), records_.end(), NodeRecord{});
  queue_.clear();
  truncated_list_.clear();
  pending_.reset();
}

void SearchTree::grow_records() {
  const std::size_t n = graph_.graph().vertex_count();
  records_.resize(n);
  processed_.resize(n, 0);
  visit_stamp_.resize(n, 0);
}

void SearchTree::update_all_vertices() {
  flush_pending();
  for (VertexId v = 0; v < records_.size(); ++v) update_vertex(v);
}

Cost SearchTree::lazy_path_cost(const Path& path) const {
  Cost total = 0.0;
  for (EdgeId e : path_edges(path)) total = add_costs(total, graph_.weights().lazy_weight(e));
  return total;
}

bool SearchTree::queue_invariant_holds() const {
  for (VertexId v = 0; v < records_.size(); ++v) {
    const NodeRecord& r = records_[v];
    const bool should_queue = r.g != r.rhs && !r.truncated;
    if (queue_.contains(v) != should_queue) return false;
  }
  return true;
}

}  // namespace lazysearch
