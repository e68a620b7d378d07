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

#include "lazysearch/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lazysearch {
namespace {

bool covers_rect(const Rect& r, const Point& p) noexcept {
  return r.min.x < p.x && p.x < r.max.x && r.min.y < p.y && p.y < r.max.y;
}

// Slab clipping against the open box. The segment parameter range [0, 1] is
// closed, each slab is open.
bool blocks_rect(const Rect& r, const Point& a, const Point& b) noexcept {
  double enter = -INFINITY;
  double exit = INFINITY;
  const double origin[2] = {a.x, a.y};
  const double delta[2] = {b.x - a.x, b.y - a.y};
  const double lo[2] = {r.min.x, r.min.y};
  const double hi[2] = {r.max.x, r.max.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (delta[axis] == 0.0) {
      if (!(lo[axis] < origin[axis] && origin[axis] < hi[axis])) return false;
      continue;
    }
    double t0 = (lo[axis] - origin[axis]) / delta[axis];
    double t1 = (hi[axis] - origin[axis]) / delta[axis];
    if (t0 > t1) std::swap(t0, t1);
    enter = std::max(enter, t0);
    exit = std::min(exit, t1);
  }
  return enter < exit && enter < 1.0 && exit > 0.0;
}

bool blocks_circle(const Circle& c, const Point& a, const Point& b) noexcept {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((c.center.x - a.x) * dx + (c.center.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double px = a.x + t * dx - c.center.x;
  const double py = a.y + t * dy - c.center.y;
  return px * px + py * py < c.radius * c.radius;
}

}  // namespace

double distance(const Point& a, const Point& b) noexcept {
  return std::hypot(b.x - a.x, b.y - a.y);
}

bool covers(const Obstacle& obstacle, const Point& p) noexcept {
  if (const Rect* r = std::get_if<Rect>(&obstacle)) return covers_rect(*r, p);
  const Circle& c = std::get<Circle>(obstacle);
  const double dx = p.x - c.center.x;
  const double dy = p.y - c.center.y;
  return dx * dx + dy * dy < c.radius * c.radius;
}

bool blocks(const Obstacle& obstacle, const Point& a, const Point& b) noexcept {
  if (const Rect* r = std::get_if<Rect>(&obstacle)) return blocks_rect(*r, a, b);
  return blocks_circle(std::get<Circle>(obstacle), a, b);
}

}  // namespace lazysearch
