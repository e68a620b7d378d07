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

#ifndef LAZYSEARCH_COST_HPP
#define LAZYSEARCH_COST_HPP

#include <cmath>
#include <limits>

namespace lazysearch {

/// Extended non-negative cost. Finite values or +infinity, never NaN.
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

/// Saturating addition: anything plus infinity stays infinity.
constexpr Cost add_costs(Cost a, Cost b) noexcept {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

inline bool is_finite(Cost c) noexcept { return c != kInfinity; }

/// Valid edge weight: strictly positive or +infinity.
inline bool is_valid_edge_weight(Cost c) noexcept {
  return !std::isnan(c) && c > 0.0;
}

}  // namespace lazysearch

#endif  // LAZYSEARCH_COST_HPP
