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

#include "lazysearch/repair_queue.hpp"

#include <cassert>

namespace lazysearch {

void RepairQueue::insert(VertexId v, Key key) {
  if (v >= position_.size()) position_.resize(v + 1, kAbsent);
  if (position_[v] != kAbsent) {
    const std::size_t i = position_[v];
    heap_[i].key = key;
    sift_up(i);
    sift_down(position_[v]);
    return;
  }
  heap_.push_back({v, key});
  position_[v] = heap_.size() - 1;
  sift_up(heap_.size() - 1);
}

bool RepairQueue::remove(VertexId v) {
  if (!contains(v)) return false;
  const std::size_t i = position_[v];
  position_[v] = kAbsent;
  Entry last = heap_.back();
  heap_.pop_back();
  if (i < heap_.size()) {
    place(i, last);
    sift_up(i);
    sift_down(position_[last.vertex]);
  }
  return true;
}

RepairQueue::Entry RepairQueue::pop() {
  assert(!heap_.empty());
  Entry top = heap_.front();
  remove(top.vertex);
  return top;
}

void RepairQueue::clear() {
  for (const auto& e : heap_) position_[e.vertex] = kAbsent;
  heap_.clear();
}

void RepairQueue::place(std::size_t i, Entry e) {
  heap_[i] = e;
  position_[e.vertex] = i;
}

void RepairQueue::sift_up(std::size_t i) {
  Entry e = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(e, heap_[parent])) break;
    place(i, heap_[parent]);
    i = parent;
  }
  place(i, e);
}

void RepairQueue::sift_down(std::size_t i) {
  Entry e = heap_[i];
  const std::size_t n = heap_.size();
  while (true) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
    if (!before(heap_[child], e)) break;
    place(i, heap_[child]);
    i = child;
  }
  place(i, e);
}

}  // namespace lazysearch
