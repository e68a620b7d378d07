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

#include "lazysearch/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lazysearch/sampling.hpp"

namespace lazysearch {
namespace {

const std::vector<Obstacle> kNoObstacles;

nlohmann::json cost_to_json(Cost c) {
  if (!is_finite(c)) return "inf";
  return c;
}

nlohmann::json point_to_json(const Point& p) { return nlohmann::json::array({p.x, p.y}); }

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("a point is an array of two numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const char* kind_name(WorldKind kind) {
  switch (kind) {
    case WorldKind::kGrid: return "grid";
    case WorldKind::kRoadmap: return "roadmap";
    case WorldKind::kExplicit: return "explicit";
  }
  return "unknown";
}

}  // namespace

double schedule_epsilon1(std::size_t q) {
  if (q == 0) throw std::invalid_argument("schedule needs q >= 1");
  return 1.0 + 5.0 / static_cast<double>(q);
}

Cost edge_length(const Point& a, const Point& b) {
  return std::ceil(distance(a, b) * kLengthQuantum) / kLengthQuantum;
}

double schedule_epsilon2(std::size_t q) {
  if (q == 0) throw std::invalid_argument("schedule needs q >= 1");
  return 1.0 + 10.0 / static_cast<double>(q);
}

const std::vector<Obstacle>& World::active_obstacles() const {
  if (changes_.scenes.empty()) return kNoObstacles;
  return changes_.scenes[epoch_ % changes_.scenes.size()].obstacles;
}

void World::add_directed_edge(VertexId a, VertexId b, Cost heuristic, Cost truth) {
  graph_.add_edge(a, b);
  edge_heuristic_.push_back(heuristic);
  truth_.push_back(truth);
  twin_.emplace_back();
  random_blocked_.push_back(0);
}

void World::add_twin_edges(VertexId a, VertexId b) {
  const Cost length = edge_length((*points_)[a], (*points_)[b]);
  if (!graph_.find_edge(a, b)) add_directed_edge(a, b, length, length);
  if (!graph_.find_edge(b, a)) add_directed_edge(b, a, length, length);
}

void World::link_twins() {
  twin_.assign(graph_.edge_count(), std::nullopt);
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const Edge& edge = graph_.edge(e);
    twin_[e] = graph_.find_edge(edge.target, edge.source);
  }
}

Cost World::geometric_truth(EdgeId e, const std::vector<Obstacle>& obstacles) const {
  if (random_blocked_[e]) return kInfinity;
  if (!geometric_) return truth_[e];
  const Edge& edge = graph_.edge(e);
  const Point& a = (*points_)[edge.source];
  const Point& b = (*points_)[edge.target];
  for (const Obstacle& o : obstacles) {
    if (blocks(o, a, b)) return kInfinity;
  }
  return edge_heuristic_[e];
}

void World::reset_truths_from_geometry() {
  const auto& obstacles = active_obstacles();
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) truth_[e] = geometric_truth(e, obstacles);
}

std::vector<VertexId> World::nearest(VertexId v, std::size_t k) const {
  const auto& pts = *points_;
  std::vector<std::pair<double, VertexId>> candidates;
  candidates.reserve(pts.size());
  for (VertexId u = 0; u < pts.size(); ++u) {
    if (u != v) candidates.emplace_back(distance(pts[v], pts[u]), u);
  }
  k = std::min(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                    candidates.end());
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(candidates[i].second);
  return out;
}

World World::grid(const GridSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0 || spec.rows * spec.cols < 2) {
    throw std::invalid_argument("grid needs at least two cells");
  }
  if (spec.connectivity != 4 && spec.connectivity != 8) {
    throw std::invalid_argument("grid connectivity must be 4 or 8");
  }
  World w;
  w.kind_ = WorldKind::kGrid;
  w.geometric_ = true;
  w.seed_ = spec.seed;
  w.changes_ = spec.changes;
  w.grid_rows_ = spec.rows;
  w.grid_cols_ = spec.cols;
  w.grid_connectivity_ = spec.connectivity;
  w.graph_ = Graph(spec.rows * spec.cols);
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      w.points_->push_back({static_cast<double>(c), static_cast<double>(r)});
    }
  }
  const auto id = [&](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * spec.cols + c);
  };
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      const VertexId u = id(r, c);
      if (c + 1 < spec.cols) w.add_twin_edges(u, id(r, c + 1));
      if (r + 1 < spec.rows) w.add_twin_edges(u, id(r + 1, c));
      if (spec.connectivity == 8 && r + 1 < spec.rows) {
        if (c + 1 < spec.cols) w.add_twin_edges(u, id(r + 1, c + 1));
        if (c > 0) w.add_twin_edges(u, id(r + 1, c - 1));
      }
    }
  }
  w.link_twins();
  w.reset_truths_from_geometry();
  return w;
}

World World::roadmap(const RoadmapSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("roadmap needs n >= 2");
  if (spec.anchors.size() > spec.n) throw std::invalid_argument("more anchors than vertices");
  if (!(spec.bounds.min.x < spec.bounds.max.x && spec.bounds.min.y < spec.bounds.max.y)) {
    throw std::invalid_argument("roadmap bounds are empty");
  }
  std::vector<Point> points = spec.anchors;
  const double width = spec.bounds.max.x - spec.bounds.min.x;
  const double height = spec.bounds.max.y - spec.bounds.min.y;
  Rng rng = Rng::stream(spec.seed, 0);
  for (std::uint64_t i = 0; points.size() < spec.n; ++i) {
    Point unit = spec.sampler == Sampler::kHalton ? halton_point(1 + spec.halton_skip + i)
                                                  : Point{rng.uniform01(), rng.uniform01()};
    points.push_back({spec.bounds.min.x + width * unit.x, spec.bounds.min.y + height * unit.y});
  }
  World w = roadmap_from_points(std::move(points), spec.k, spec.symmetric, spec.changes);
  w.seed_ = spec.seed;
  w.bounds_ = spec.bounds;
  return w;
}

World World::roadmap_from_points(std::vector<Point> points, std::size_t k, bool symmetric,
                                 ChangeModel changes) {
  if (points.size() < 2) throw std::invalid_argument("roadmap needs n >= 2");
  if (k == 0 || k >= points.size()) throw std::invalid_argument("roadmap needs 1 <= k < n");
  World w;
  w.kind_ = WorldKind::kRoadmap;
  w.geometric_ = true;
  w.changes_ = std::move(changes);
  w.k_ = k;
  w.symmetric_ = symmetric;
  w.graph_ = Graph(points.size());
  *w.points_ = std::move(points);
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const Point& p : *w.points_) {
    lo_x = std::min(lo_x, p.x), lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x), hi_y = std::max(hi_y, p.y);
  }
  w.bounds_ = {{lo_x, lo_y}, {hi_x, hi_y}};
  for (VertexId u = 0; u < w.points_->size(); ++u) {
    for (VertexId v : w.nearest(u, k)) {
      const Cost length = edge_length((*w.points_)[u], (*w.points_)[v]);
      if (!w.graph_.find_edge(u, v)) w.add_directed_edge(u, v, length, length);
      if (symmetric && !w.graph_.find_edge(v, u)) w.add_directed_edge(v, u, length, length);
    }
  }
  w.link_twins();
  w.reset_truths_from_geometry();
  return w;
}

World World::explicit_graph(const ExplicitSpec& spec) {
  World w;
  w.kind_ = WorldKind::kExplicit;
  w.seed_ = spec.seed;
  w.changes_ = spec.changes;
  const bool with_points = !spec.points.empty();
  const std::size_t n = with_points ? spec.points.size() : spec.vertex_count;
  if (with_points && spec.vertex_count != 0 && spec.vertex_count != spec.points.size()) {
    throw std::invalid_argument("vertex_count disagrees with the number of points");
  }
  if (n < 1) throw std::invalid_argument("explicit graph needs at least one vertex");
  w.graph_ = Graph(n);
  *w.points_ = spec.points;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const ExplicitEdge& e = spec.edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (!w.graph_.contains(e.edge.source) || !w.graph_.contains(e.edge.target)) {
      throw std::invalid_argument(where + " references an unknown vertex");
    }
    Cost length = 0.0;
    if (with_points) {
      length = edge_length(spec.points[e.edge.source], spec.points[e.edge.target]);
    }
    if (!with_points && (!e.heuristic || !e.weight)) {
      throw std::invalid_argument(where + " needs heuristic and weight without points");
    }
    const Cost heuristic = e.heuristic.value_or(length);
    const Cost weight = e.weight.value_or(length);
    if (!is_valid_edge_weight(heuristic) || !is_finite(heuristic)) {
      throw std::invalid_argument(where + " heuristic must be finite and positive");
    }
    if (!is_valid_edge_weight(weight)) {
      throw std::invalid_argument(where + " weight must be positive or inf");
    }
    if (heuristic > weight) throw std::invalid_argument(where + " heuristic exceeds weight");
    if (w.graph_.find_edge(e.edge.source, e.edge.target) ||
        e.edge.source == e.edge.target) {
      throw std::invalid_argument(where + " is a duplicate or a self loop");
    }
    w.add_directed_edge(e.edge.source, e.edge.target, heuristic, weight);
  }
  // Listed weights are the base truth even when points are given; scenes do
  // not apply to explicit worlds.
  w.link_twins();
  if (!spec.vertex_heuristic.empty()) {
    if (spec.vertex_heuristic.size() != n || !spec.heuristic_target ||
        !w.graph_.contains(*spec.heuristic_target)) {
      throw std::invalid_argument("vertex heuristic needs one value per vertex and a target");
    }
    if (spec.vertex_heuristic[*spec.heuristic_target] != 0.0) {
      throw std::invalid_argument("vertex heuristic must vanish at its target");
    }
    w.heuristic_table_ = std::make_shared<const std::vector<Cost>>(spec.vertex_heuristic);
    w.heuristic_target_ = spec.heuristic_target;
    for (EdgeId e = 0; e < w.graph_.edge_count(); ++e) {
      const Edge& edge = w.graph_.edge(e);
      const auto& h = *w.heuristic_table_;
      if (h[edge.source] < 0.0 || h[edge.source] > w.edge_heuristic_[e] + h[edge.target]) {
        throw std::invalid_argument("vertex heuristic is inconsistent on edge " +
                                    std::to_string(e));
      }
    }
  }
  return w;
}

VertexHeuristic World::heuristic() const {
  if (has_points()) {
    std::shared_ptr<const std::vector<Point>> pts = points_;
    return [pts](VertexId from, VertexId to) {
      return kHeuristicScale * distance((*pts)[from], (*pts)[to]);
    };
  }
  if (heuristic_table_) {
    auto table = heuristic_table_;
    const VertexId target = *heuristic_target_;
    return [table, target](VertexId from, VertexId to) {
      return to == target ? (*table)[from] : 0.0;
    };
  }
  return [](VertexId, VertexId) { return 0.0; };
}

LazyGraph World::make_lazy_graph() const {
  LazyWeights weights;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    weights.add_edge(edge_heuristic_[e], truth_[e]);
  }
  return LazyGraph(graph_, std::move(weights));
}

ChangeBatch World::script_change(std::size_t epoch) {
  if (epoch != epoch_ + 1) {
    throw std::logic_error("epochs must advance one at a time (at " + std::to_string(epoch_) +
                           ", asked for " + std::to_string(epoch) + ")");
  }
  const std::size_t scene_count = changes_.scenes.size();
  const std::size_t previous_scene = scene_count ? epoch_ % scene_count : 0;
  epoch_ = epoch;
  std::map<EdgeId, Cost> out;

  if (scene_count > 1 && epoch_ % scene_count != previous_scene) {
    const auto& obstacles = active_obstacles();
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      const Cost c = geometric_truth(e, obstacles);
      if (c != truth_[e]) out[e] = c;
    }
  }

  if (changes_.reweight_fraction > 0.0) {
    std::vector<EdgeId> units;
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      if (!twin_[e] || e < *twin_[e]) units.push_back(e);
    }
    const auto count = static_cast<std::size_t>(
        std::floor(changes_.reweight_fraction * static_cast<double>(units.size()) + 1e-9));
    Rng rng = Rng::stream(seed_, epoch_);
    const auto& obstacles = active_obstacles();
    for (std::size_t i = 0; i < std::min(count, units.size()); ++i) {
      std::swap(units[i], units[i + rng.below(units.size() - i)]);
      const std::uint8_t blocked = rng.bernoulli(changes_.block_probability) ? 1 : 0;
      for (std::optional<EdgeId> e : {std::optional<EdgeId>(units[i]), twin_[units[i]]}) {
        if (!e) continue;
        random_blocked_[*e] = blocked;
        // Lone explicit edges have no geometry; their base weight is the heuristic.
        out[*e] = blocked ? kInfinity
                          : (geometric_ ? geometric_truth(*e, obstacles) : edge_heuristic_[*e]);
      }
    }
  }

  if (auto it = changes_.scripted.find(epoch_); it != changes_.scripted.end()) {
    for (const WeightChange& change : it->second.changes) {
      if (!is_valid_edge_weight(change.weight)) {
        throw std::invalid_argument("scripted weight must be positive or inf");
      }
      const EdgeId e = graph_.edge_id(change.edge);
      if (edge_heuristic_[e] > change.weight) {
        throw std::invalid_argument("scripted weight undercuts the edge heuristic");
      }
      out[e] = change.weight;
    }
  }

  ChangeBatch batch;
  for (const auto& [e, c] : out) {
    truth_[e] = c;
    batch.changes.push_back({graph_.edge(e), c});
  }
  return batch;
}

Densification World::densify(std::size_t batch_size) {
  if (kind_ != WorldKind::kRoadmap) throw std::logic_error("only roadmaps can be densified");
  Rng rng = Rng::stream(seed_, 0x10000 + densify_calls_++);
  const auto& obstacles = active_obstacles();
  Densification result;
  result.growth.first_vertex = static_cast<VertexId>(graph_.vertex_count());
  const std::size_t max_attempts = 1000 * std::max<std::size_t>(batch_size, 1);
  std::size_t attempts = 0;
  while (result.growth.vertex_count < batch_size) {
    if (++attempts > max_attempts) throw std::runtime_error("densify: free space too small");
    const Point p{rng.uniform(bounds_.min.x, bounds_.max.x),
                  rng.uniform(bounds_.min.y, bounds_.max.y)};
    const bool free = std::none_of(obstacles.begin(), obstacles.end(),
                                   [&](const Obstacle& o) { return covers(o, p); });
    if (!free) continue;
    points_->push_back(p);
    graph_.add_vertex();
    ++result.growth.vertex_count;
  }
  const EdgeId first_new_edge = static_cast<EdgeId>(graph_.edge_count());
  for (VertexId v = result.growth.first_vertex; v < graph_.vertex_count(); ++v) {
    for (VertexId u : nearest(v, k_)) {
      const Cost length = edge_length((*points_)[v], (*points_)[u]);
      if (!graph_.find_edge(v, u)) add_directed_edge(v, u, length, length);
      if (!graph_.find_edge(u, v)) add_directed_edge(u, v, length, length);
    }
  }
  link_twins();
  for (EdgeId e = first_new_edge; e < graph_.edge_count(); ++e) {
    truth_[e] = geometric_truth(e, obstacles);
    result.growth.edges.push_back({graph_.edge(e), edge_heuristic_[e], truth_[e]});
  }
  result.q = graph_.vertex_count();
  return result;
}

std::size_t World::admissibility_violations() const {
  std::size_t count = 0;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (!(edge_heuristic_[e] <= truth_[e])) ++count;
  }
  return count;
}

std::size_t World::consistency_violations(VertexId target) const {
  const VertexHeuristic h = heuristic();
  std::size_t count = 0;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (!is_finite(truth_[e])) continue;
    const Edge& edge = graph_.edge(e);
    if (h(edge.source, target) > truth_[e] + h(edge.target, target)) ++count;
  }
  return count;
}

nlohmann::json World::serialize() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  j["seed"] = seed_;
  j["epoch"] = epoch_;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const Point& p : *points_) pts.push_back(point_to_json(p));
  auto& edges = j["edges"] = nlohmann::json::array();
  auto& heuristics = j["heuristic"] = nlohmann::json::array();
  auto& truths = j["truth"] = nlohmann::json::array();
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    edges.push_back({graph_.edge(e).source, graph_.edge(e).target});
    heuristics.push_back(cost_to_json(edge_heuristic_[e]));
    truths.push_back(cost_to_json(truth_[e]));
  }
  auto& obstacles = j["obstacles"] = nlohmann::json::array();
  for (const Obstacle& o : active_obstacles()) obstacles.push_back(obstacle_to_json(o));
  return j;
}

nlohmann::json obstacle_to_json(const Obstacle& obstacle) {
  if (const Rect* r = std::get_if<Rect>(&obstacle)) {
    return {{"type", "rect"}, {"min", point_to_json(r->min)}, {"max", point_to_json(r->max)}};
  }
  const Circle& c = std::get<Circle>(obstacle);
  return {{"type", "circle"}, {"center", point_to_json(c.center)}, {"radius", c.radius}};
}

Obstacle obstacle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("obstacle needs a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "rect") {
    if (!j.contains("min") || !j.contains("max")) {
      throw std::invalid_argument("rect obstacle needs 'min' and 'max'");
    }
    Rect r{point_from_json(j["min"]), point_from_json(j["max"])};
    if (!(r.min.x < r.max.x && r.min.y < r.max.y)) {
      throw std::invalid_argument("rect obstacle has an empty interior");
    }
    return r;
  }
  if (type == "circle") {
    if (!j.contains("center") || !j.contains("radius") || !j["radius"].is_number()) {
      throw std::invalid_argument("circle obstacle needs 'center' and numeric 'radius'");
    }
    Circle c{point_from_json(j["center"]), j["radius"].get<double>()};
    if (!(c.radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
    return c;
  }
  throw std::invalid_argument("unknown obstacle type '" + type + "'");
}

std::vector<Scene> grid_scene_cycle(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows < 4 || cols < 5) return {Scene{}, Scene{}, Scene{}};
  // Every obstacle is a thin bar on a half-integer line, so no lattice vertex
  // is ever covered and an agent can never be boxed in where it stands.
  constexpr double kHalf = 0.1;
  Rng rng = Rng::stream(seed, 0x5ce);
  const double R = static_cast<double>(rows);
  const double C = static_cast<double>(cols);
  const double wall_x = static_cast<double>(cols / 2) - 0.5;
  const std::size_t gap_lo = rows / 4;
  const std::size_t gap_hi = std::max(gap_lo, (3 * rows) / 4 - 2);
  const std::size_t keep_out = rows >= 8 && cols >= 8 ? 2 : 1;

  auto wall = [&](std::size_t gap) {
    Scene scene;
    const double g = static_cast<double>(gap);
    scene.obstacles.push_back(Rect{{wall_x - kHalf, -1.0}, {wall_x + kHalf, g - 0.5}});
    scene.obstacles.push_back(Rect{{wall_x - kHalf, g + 1.5}, {wall_x + kHalf, R}});
    const std::uint64_t fences = 1 + rng.below(2);
    for (std::uint64_t i = 0; i < fences; ++i) {
      const double length = static_cast<double>(2 + rng.below(3));
      const bool horizontal = rng.bernoulli(0.5);
      // Fences stay clear of the wall, the outer columns and the far corner.
      const double x0 = rng.uniform(2.0, std::max(2.0, C - 3.0 - length));
      const double y0 = rng.uniform(static_cast<double>(keep_out), std::max(2.0, R - 2.0));
      const double line_y = std::floor(y0) + 0.5;
      const double line_x = std::floor(x0) + 0.5;
      Rect r = horizontal
                   ? Rect{{std::floor(x0) - 0.5, line_y - kHalf},
                          {std::floor(x0) - 0.5 + length, line_y + kHalf}}
                   : Rect{{line_x - kHalf, std::floor(y0) - 0.5},
                          {line_x + kHalf, std::floor(y0) - 0.5 + length}};
      if (r.max.x > wall_x - 2.0 && r.min.x < wall_x + 2.0) continue;
      if (r.max.x > C - 1.5) continue;
      scene.obstacles.push_back(r);
    }
    return scene;
  };
  const std::size_t span = gap_hi - gap_lo + 1;
  const std::size_t gap_a = gap_lo + rng.below(span);
  std::size_t gap_b = gap_lo + rng.below(span);
  if (gap_b == gap_a && span > 1) gap_b = gap_lo + (gap_a - gap_lo + 1 + rng.below(span - 1)) % span;

  Scene a = wall(gap_a);
  Scene b = wall(gap_b);
  // C fences off the far corner, away from both endpoints.
  Scene c = b;
  const double corner = static_cast<double>(keep_out) - 0.5;
  c.obstacles.push_back(Rect{{corner - kHalf, -1.0}, {corner + kHalf, corner + kHalf}});
  c.obstacles.push_back(Rect{{-1.0, corner - kHalf}, {corner + kHalf, corner + kHalf}});
  return {std::move(a), std::move(b), std::move(c)};
}

std::vector<Scene> roadmap_scene_cycle(const Rect& bounds, std::size_t obstacles,
                                       double radius, const std::vector<Point>& keep_free,
                                       std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 0x5ce);
  std::vector<Scene> scenes(3);
  for (Scene& scene : scenes) {
    std::size_t attempts = 0;
    while (scene.obstacles.size() < obstacles && attempts++ < 1000 * (obstacles + 1)) {
      const Point center{rng.uniform(bounds.min.x, bounds.max.x),
                         rng.uniform(bounds.min.y, bounds.max.y)};
      const bool clear = std::all_of(keep_free.begin(), keep_free.end(), [&](const Point& p) {
        return distance(p, center) > radius * 1.5;
      });
      if (clear) scene.obstacles.push_back(Circle{center, radius});
    }
  }
  return scenes;
}

}  // namespace lazysearch
