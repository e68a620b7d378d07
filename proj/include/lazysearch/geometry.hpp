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

#ifndef LAZYSEARCH_GEOMETRY_HPP
#define LAZYSEARCH_GEOMETRY_HPP

#include <variant>

namespace lazysearch {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b) noexcept;

/// Axis-aligned rectangle. Only the open interior is blocked, so a segment
/// grazing an edge or a corner stays free.
struct Rect {
  Point min;
  Point max;
};

/// Open disk.
struct Circle {
  Point center;
  double radius = 0.0;
};

using Obstacle = std::variant<Rect, Circle>;

bool covers(const Obstacle& obstacle, const Point& p) noexcept;
/// True iff the closed segment [a, b] meets the obstacle interior.
bool blocks(const Obstacle& obstacle, const Point& a, const Point& b) noexcept;

}  // namespace lazysearch

#endif  // LAZYSEARCH_GEOMETRY_HPP
