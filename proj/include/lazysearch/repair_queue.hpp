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

#ifndef LAZYSEARCH_REPAIR_QUEUE_HPP
#define LAZYSEARCH_REPAIR_QUEUE_HPP

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "lazysearch/cost.hpp"
#include "lazysearch/graph.hpp"

namespace lazysearch {

/// Two-component priority, compared lexicographically.
struct Key {
  Cost k1 = kInfinity;
  Cost k2 = kInfinity;

  friend bool operator==(const Key&, const Key&) = default;
  friend bool operator<(const Key& a, const Key& b) noexcept {
    if (a.k1 != b.k1) return a.k1 < b.k1;
    return a.k2 < b.k2;
  }
};

inline constexpr Key kInfiniteKey{kInfinity, kInfinity};

/// Addressable binary min-heap of (vertex, key). Each vertex appears at most
/// once. Equal keys are ordered by smaller vertex id.
class RepairQueue {
 public:
  struct Entry {
    VertexId vertex = 0;
    Key key;
  };

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(VertexId v) const noexcept {
    return v < position_.size() && position_[v] != kAbsent;
  }

  /// Minimum key, or (inf, inf) when empty.
  Key top_key() const noexcept { return heap_.empty() ? kInfiniteKey : heap_.front().key; }
  const Entry& top() const { return heap_.front(); }

  /// Inserts v, or updates its key if it is already queued.
  void insert(VertexId v, Key key);
  /// Removes v if present; returns whether it was.
  bool remove(VertexId v);
  /// Removes and returns the minimum. Precondition: !empty().
  Entry pop();
  void clear();

  /// Snapshot of the queued entries in heap order.
  const std::vector<Entry>& entries() const noexcept { return heap_; }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  static bool before(const Entry& a, const Entry& b) noexcept {
    if (a.key < b.key) return true;
    if (b.key < a.key) return false;
    return a.vertex < b.vertex;
  }
  void place(std::size_t i, Entry e);
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);

  std::vector<Entry> heap_;
  std::vector<std::size_t> position_;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_REPAIR_QUEUE_HPP
