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

#include "lazysearch/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <istream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "lazysearch/format.hpp"
#include "lazysearch/moving_planner.hpp"
#include "lazysearch/oracle.hpp"
#include "lazysearch/sampling.hpp"
#include "lazysearch/stationary_planner.hpp"

namespace lazysearch {
namespace {

constexpr std::size_t kQueueScanLimit = 200;

// Everything a planner replays, computed once per scenario so planner runs
// share no mutable state.
struct Timeline {
  LazyGraph initial;
  VertexHeuristic heuristic;
  std::size_t initial_vertices = 0;
  std::vector<ChangeBatch> batches;
  std::vector<Densification> growth;
  std::vector<Cost> oracle;
  // Moving protocol: cost-to-goal of every vertex, per epoch.
  std::vector<std::vector<Cost>> to_goal;
};

Timeline build_timeline(const Scenario& s) {
  World world = build_world(s);
  Timeline t;
  t.initial = world.make_lazy_graph();
  t.heuristic = world.heuristic();
  t.initial_vertices = world.graph().vertex_count();
  const Protocol& p = s.protocol;
  t.batches.resize(p.epochs);
  t.growth.resize(p.epochs);
  for (std::size_t e = 0; e < p.epochs; ++e) {
    if (e > 0) {
      if (p.kind == ProtocolKind::kDensify) {
        t.growth[e] = world.densify(p.batch_size);
      } else {
        t.batches[e] = world.script_change(e);
      }
    }
    if (p.kind == ProtocolKind::kMoving) {
      t.to_goal.push_back(distances_to_goal(world.graph(), world.truth(), p.goal));
    } else {
      t.oracle.push_back(dijkstra_opt(world.graph(), world.truth(), p.start, p.goal).cost);
    }
  }
  return t;
}

RunRow make_row(const Scenario& s, const PlannerSpec& spec, std::size_t epoch,
                std::uint64_t evals, std::uint64_t expansions, std::uint64_t wall_us, Cost cost,
                Cost oracle, const PlannerConfig& config) {
  RunRow row;
  row.scenario_id = s.id;
  row.epoch = epoch;
  row.planner = spec.label;
  row.edge_evaluations = evals;
  row.vertex_expansions = expansions;
  row.wall_time_us = wall_us;
  row.path_cost = cost;
  row.oracle_cost = oracle;
  row.bound_ok = check_bound(cost, oracle, config.epsilon1, config.epsilon2) &&
                 !below_optimum(cost, oracle);
  return row;
}

std::uint64_t micros_since(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count());
}

void audit_epoch(const SearchTree& tree, PlannerDiagnostics& diag) {
  diag.scan_violations += tree.graph().weights().scan_invariants();
  if (tree.graph().graph().vertex_count() <= kQueueScanLimit && !tree.queue_invariant_holds()) {
    ++diag.queue_violations;
  }
}

std::string failure_context(const Scenario& s, const PlannerSpec& spec, std::size_t epoch) {
  return "scenario " + s.id + ", planner " + spec.label + ", epoch " + std::to_string(epoch);
}

void run_stationary(const Scenario& s, const Timeline& t, const PlannerSpec& spec,
                    const RunOptions& options, std::vector<RunRow>& rows,
                    PlannerDiagnostics& diag) {
  PlannerConfig config = spec.config;
  if (spec.epsilon_schedule) {
    config.epsilon1 = schedule_epsilon1(t.initial_vertices);
    config.epsilon2 = schedule_epsilon2(t.initial_vertices);
  }
  StationaryPlanner planner(t.initial, t.heuristic, s.protocol.start, s.protocol.goal, config);
  LazyWeights& weights = planner.tree().graph().weights();
  weights.set_audit(options.audit);
  weights.set_evaluation_delay_us(s.evaluation_delay_us);
  for (std::size_t e = 0; e < s.protocol.epochs; ++e) {
    try {
      const std::uint64_t evals0 = planner.total_evaluations();
      const std::uint64_t exp0 = planner.total_expansions();
      if (e > 0 && s.protocol.kind == ProtocolKind::kDensify) {
        planner.grow(t.growth[e].growth);
        if (spec.epsilon_schedule) {
          planner.set_epsilons(schedule_epsilon1(t.growth[e].q),
                               schedule_epsilon2(t.growth[e].q));
        }
      } else if (e > 0) {
        planner.apply_changes(t.batches[e]);
      }
      const auto t0 = std::chrono::steady_clock::now();
      const QueryResult result = planner.solve_query();
      const std::uint64_t wall = options.timing ? micros_since(t0) : 0;
      rows.push_back(make_row(s, spec, e, planner.total_evaluations() - evals0,
                              planner.total_expansions() - exp0, wall, result.cost,
                              t.oracle[e], planner.config()));
      if (options.audit) audit_epoch(planner.tree(), diag);
    } catch (const InvariantViolation& ex) {
      throw ScenarioFailure(failure_context(s, spec, e) + ": " + ex.what());
    }
  }
  diag.kernel = planner.tree().counters();
  diag.audit_violations = weights.audit_violations();
}

void run_moving(const Scenario& s, const Timeline& t, const PlannerSpec& spec,
                const RunOptions& options, std::vector<RunRow>& rows, PlannerDiagnostics& diag) {
  MovingPlanner planner(t.initial, t.heuristic, s.protocol.start, s.protocol.goal, spec.config);
  LazyWeights& weights = planner.tree().graph().weights();
  weights.set_audit(options.audit);
  weights.set_evaluation_delay_us(s.evaluation_delay_us);
  const std::size_t last = s.protocol.epochs - 1;
  const ChangeBatch none;
  auto script = [&](std::size_t epoch) -> ChangeBatch {
    return epoch <= last ? t.batches[epoch] : none;
  };
  std::size_t epoch = 0;
  auto on_epoch = [&](const EpochReport& report) {
    epoch = report.epoch;
    const Cost oracle = t.to_goal[std::min(report.epoch, last)][report.position];
    rows.push_back(make_row(s, spec, report.epoch, report.stats.edge_evaluations,
                            report.stats.vertex_expansions,
                            options.timing ? report.wall_time_us : 0, report.planned_cost,
                            oracle, planner.config()));
    if (options.audit) audit_epoch(planner.tree(), diag);
  };
  const std::size_t max_steps = s.protocol.max_steps != 0
                                    ? s.protocol.max_steps
                                    : 4 * t.initial.graph().vertex_count();
  try {
    const EpisodeResult result = planner.run_to_goal(script, on_epoch, max_steps);
    diag.reached_goal = result.reached_goal;
  } catch (const InvariantViolation& ex) {
    throw ScenarioFailure(failure_context(s, spec, epoch) + ": " + ex.what());
  }
  diag.kernel = planner.tree().counters();
  diag.audit_violations = weights.audit_violations();
}

}  // namespace

RunReport run_scenario(const Scenario& scenario, const RunOptions& options) {
  const Timeline timeline = build_timeline(scenario);
  const std::size_t jobs = scenario.planners.size();
  std::vector<std::vector<RunRow>> rows(jobs);
  std::vector<PlannerDiagnostics> diags(jobs);
  std::vector<std::exception_ptr> errors(jobs);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) {
      const PlannerSpec& spec = scenario.planners[i];
      diags[i].label = spec.label;
      try {
        if (spec.family() == PlannerFamily::kMoving) {
          run_moving(scenario, timeline, spec, options, rows[i], diags[i]);
        } else {
          run_stationary(scenario, timeline, spec, options, rows[i], diags[i]);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(jobs, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  RunReport report;
  for (auto& r : rows) report.rows.insert(report.rows.end(), r.begin(), r.end());
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const RunRow& a, const RunRow& b) {
    if (a.planner != b.planner) return a.planner < b.planner;
    return a.epoch < b.epoch;
  });
  report.planners = std::move(diags);
  return report;
}

unsigned thread_count_from_env() {
  const char* value = std::getenv("LAZYBENCH_THREADS");
  if (!value || !*value) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(value, &end, 10);
  if (*end != '\0' || n == 0) return 1;
  return static_cast<unsigned>(std::min<unsigned long>(n, 256));
}

const std::string& csv_header() {
  static const std::string header =
      "scenario_id,epoch,planner,edge_evals,vertex_expansions,wall_time_us,path_cost,"
      "oracle_cost,bound_ok";
  return header;
}

void write_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << csv_header() << '\n';
  for (const RunRow& r : rows) {
    out << r.scenario_id << ',' << r.epoch << ',' << r.planner << ',' << r.edge_evaluations
        << ',' << r.vertex_expansions << ',' << r.wall_time_us << ','
        << format_number(r.path_cost) << ',' << format_number(r.oracle_cost) << ','
        << (r.bound_ok ? "true" : "false") << '\n';
  }
}

std::string to_csv(const std::vector<RunRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

namespace {

Cost parse_cost(const std::string& text, const std::string& where) {
  if (text == "inf") return kInfinity;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !(v >= 0.0)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(where, "expected a cost, got '" + text + "'");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

VerifyResult verify_csv(std::istream& in, const std::optional<Scenario>& scenario) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) {
    throw ScenarioError("line 1", "header does not match the expected column order");
  }
  std::map<std::string, const PlannerSpec*> roster;
  std::size_t initial_vertices = 0;
  if (scenario) {
    for (const PlannerSpec& p : scenario->planners) roster[p.label] = &p;
    initial_vertices = build_world(*scenario).graph().vertex_count();
  }
  static const std::regex epsilons(R"(\(([0-9.eE+-]+);([0-9.eE+-]+)\))");

  VerifyResult result;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(number);
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw ScenarioError(where, "expected 9 fields");
    if (f[8] != "true" && f[8] != "false") throw ScenarioError(where, "bound_ok must be true/false");
    const Cost cost = parse_cost(f[6], where);
    const Cost oracle = parse_cost(f[7], where);
    const bool recorded = f[8] == "true";
    ++result.rows;

    std::optional<std::pair<double, double>> eps;
    if (auto it = roster.find(f[2]); it != roster.end()) {
      const PlannerSpec& p = *it->second;
      if (p.epsilon_schedule) {
        const std::size_t epoch = std::stoul(f[1]);
        const std::size_t q = initial_vertices + epoch * scenario->protocol.batch_size;
        eps = {schedule_epsilon1(q), schedule_epsilon2(q)};
      } else {
        eps = {p.config.epsilon1, p.config.epsilon2};
      }
    } else if (f[2].find("(sched)") == std::string::npos) {
      std::smatch m;
      if (std::regex_search(f[2], m, epsilons)) {
        eps = {std::stod(m[1].str()), std::stod(m[2].str())};
      } else {
        eps = {1.0, 1.0};
      }
    }
    bool recomputed = !below_optimum(cost, oracle);
    if (eps) recomputed = recomputed && check_bound(cost, oracle, eps->first, eps->second);
    if (!recorded) {
      result.failures.push_back(where + ": " + f[2] + " epoch " + f[1] + " is flagged out of bound");
    } else if (!recomputed) {
      result.failures.push_back(where + ": " + f[2] + " epoch " + f[1] +
                                " fails re-certification (" + f[6] + " vs " + f[7] + ")");
    }
  }
  return result;
}

namespace {

std::vector<PlannerSpec> default_roster(ProtocolKind protocol) {
  switch (protocol) {
    case ProtocolKind::kFixed:
      return {make_planner("lpa"), make_planner("tlpa"), make_planner("gls"),
              make_planner("lgls"), make_planner("blgls")};
    case ProtocolKind::kDensify:
      return {make_planner("lgls"),
              make_planner("blgls", {}, {}, Event::shortest_path(), true)};
    case ProtocolKind::kMoving:
      return {make_planner("dstar"), make_planner("tdstar"), make_planner("gdstar"),
              make_planner("bgdstar")};
  }
  return {};
}

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kFixed: return "fixed";
    case ProtocolKind::kDensify: return "densify";
    case ProtocolKind::kMoving: return "moving";
  }
  return "fixed";
}

nlohmann::json scenes_to_json(const std::vector<Scene>& scenes) {
  nlohmann::json out = nlohmann::json::array();
  for (const Scene& scene : scenes) {
    nlohmann::json obstacles = nlohmann::json::array();
    for (const Obstacle& o : scene.obstacles) obstacles.push_back(obstacle_to_json(o));
    out.push_back({{"obstacles", obstacles}});
  }
  return out;
}

}  // namespace

Scenario generate_scenario(const GenerateParams& params) {
  if (params.epochs == 0) throw std::invalid_argument("epochs must be >= 1");
  if (params.batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
  Scenario s;
  s.seed = params.seed;
  s.protocol.kind = params.protocol;
  s.protocol.epochs = params.epochs;
  s.protocol.batch_size = params.batch_size;
  s.planners = params.planners.empty() ? default_roster(params.protocol) : params.planners;
  Rng rng = Rng::stream(params.seed, 0x9e7);

  if (params.world == GeneratedWorld::kGrid) {
    if (params.protocol == ProtocolKind::kDensify) {
      throw std::invalid_argument("the densify protocol needs a roadmap");
    }
    if (params.rows == 0 || params.cols == 0 || params.rows * params.cols < 2) {
      throw std::invalid_argument("grid needs at least two cells");
    }
    if (params.connectivity != 4 && params.connectivity != 8) {
      throw std::invalid_argument("grid connectivity must be 4 or 8");
    }
    const std::size_t lo = params.rows >= 4 ? params.rows / 4 : 0;
    const std::size_t hi = params.rows >= 4 ? (3 * params.rows) / 4 - 1 : params.rows - 1;
    const std::size_t start_row = lo + rng.below(hi - lo + 1);
    const std::size_t goal_row = lo + rng.below(hi - lo + 1);
    s.protocol.start = static_cast<VertexId>(start_row * params.cols);
    s.protocol.goal = static_cast<VertexId>(goal_row * params.cols + params.cols - 1);
    if (s.protocol.start == s.protocol.goal) s.protocol.goal = static_cast<VertexId>(params.cols * params.rows - 1);
    s.world = {{"kind", "grid"},
               {"rows", params.rows},
               {"cols", params.cols},
               {"connectivity", params.connectivity},
               {"scenes", scenes_to_json(grid_scene_cycle(params.rows, params.cols, params.seed))}};
    s.id = "grid" + std::to_string(params.rows) + "x" + std::to_string(params.cols) + "-" +
           protocol_name(params.protocol) + "-s" + std::to_string(params.seed);
    return s;
  }

  if (params.n < 2 || params.k == 0 || params.k >= params.n) {
    throw std::invalid_argument("roadmap needs n >= 2 and 1 <= k < n");
  }
  const Rect bounds{{0.0, 0.0}, {1.0, 1.0}};
  const Point start{0.05, rng.uniform(0.2, 0.8)};
  const Point goal{0.95, rng.uniform(0.2, 0.8)};
  std::vector<Scene> scenes;
  double fraction = params.reweight_fraction;
  if (params.protocol == ProtocolKind::kDensify) {
    // One static scene: densification only ever sees fixed obstacles.
    scenes = roadmap_scene_cycle(bounds, 5, 0.08, {start, goal}, params.seed);
    scenes.resize(1);
    fraction = 0.0;
  } else if (params.protocol == ProtocolKind::kMoving) {
    // Moving obstacles could land on the agent; reweighting cannot trap it in
    // practice.
    if (fraction < 0.0) fraction = 0.05;
  } else {
    scenes = roadmap_scene_cycle(bounds, 8, 0.06, {start, goal}, params.seed);
    if (fraction < 0.0) fraction = 0.05;
  }
  s.world = {{"kind", "roadmap"},
             {"n", params.n},
             {"k", params.k},
             {"sampler", params.sampler == Sampler::kHalton ? "halton" : "uniform"},
             {"halton_skip", (params.seed * 7919) % 1000003},
             {"anchors", {{start.x, start.y}, {goal.x, goal.y}}},
             {"symmetric", true},
             {"scenes", scenes_to_json(scenes)}};
  if (fraction > 0.0) {
    s.world["reweight_fraction"] = fraction;
    s.world["block_probability"] = 0.5;
  }
  s.protocol.start = 0;
  s.protocol.goal = 1;
  s.id = "roadmap" + std::to_string(params.n) + "k" + std::to_string(params.k) + "-" +
         protocol_name(params.protocol) + "-s" + std::to_string(params.seed);
  return s;
}

}  // namespace lazysearch
