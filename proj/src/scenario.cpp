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

#include "lazysearch/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lazysearch/format.hpp"

namespace lazysearch {
namespace {

using nlohmann::json;

// Typed access to one JSON value with its pointer path for diagnostics.
class Field {
 public:
  Field(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const json& raw() const { return *value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ScenarioError(path_.empty() ? "/" : path_, message);
  }

  bool has(const char* key) const { return value_->is_object() && value_->contains(key); }

  Field at(const char* key) const {
    expect_object();
    if (!value_->contains(key)) {
      throw ScenarioError(path_ + "/" + key, "missing required field");
    }
    return Field((*value_)[key], path_ + "/" + key);
  }

  std::optional<Field> maybe(const char* key) const {
    if (!has(key)) return std::nullopt;
    return at(key);
  }

  std::vector<Field> items() const {
    if (!value_->is_array()) fail("expected an array");
    std::vector<Field> out;
    for (std::size_t i = 0; i < value_->size(); ++i) {
      out.emplace_back((*value_)[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }

  void expect_object() const {
    if (!value_->is_object()) fail("expected an object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    expect_object();
    for (const auto& [key, unused] : value_->items()) {
      const bool known = std::any_of(keys.begin(), keys.end(),
                                     [&](const char* k) { return key == k; });
      if (!known) throw ScenarioError(path_ + "/" + key, "unknown field");
    }
  }

  double number() const {
    if (!value_->is_number()) fail("expected a number");
    const double v = value_->get<double>();
    if (!std::isfinite(v)) fail("expected a finite number");
    return v;
  }

  double number_in(double lo, double hi) const {
    const double v = number();
    if (v < lo || v > hi) {
      fail("expected a value in [" + format_number(lo) + ", " + format_number(hi) + "]");
    }
    return v;
  }

  /// A positive number or the string "inf".
  Cost weight() const {
    if (value_->is_string() && value_->get<std::string>() == "inf") return kInfinity;
    const double v = number();
    if (!(v > 0.0)) fail("expected a positive weight or \"inf\"");
    return v;
  }

  std::uint64_t unsigned_integer() const {
    if (value_->is_number_unsigned()) return value_->get<std::uint64_t>();
    if (!value_->is_number_integer() || value_->get<std::int64_t>() < 0) {
      fail("expected a non-negative integer");
    }
    return static_cast<std::uint64_t>(value_->get<std::int64_t>());
  }

  std::uint64_t integer_at_least(std::uint64_t lo) const {
    const std::uint64_t v = unsigned_integer();
    if (v < lo) fail("expected an integer >= " + std::to_string(lo));
    return v;
  }

  std::string string() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }

  bool boolean() const {
    if (!value_->is_boolean()) fail("expected true or false");
    return value_->get<bool>();
  }

  Point point() const {
    const auto xy = items();
    if (xy.size() != 2) fail("expected [x, y]");
    return {xy[0].number(), xy[1].number()};
  }

 private:
  const json* value_;
  std::string path_;
};

struct PlannerInfo {
  const char* name;
  PlannerFamily family;
  bool takes_epsilon1;
  bool takes_epsilon2;
};

constexpr PlannerInfo kPlanners[] = {
    {"lpa", PlannerFamily::kStationary, false, false},
    {"tlpa", PlannerFamily::kStationary, false, true},
    {"gls", PlannerFamily::kStationary, false, false},
    {"lgls", PlannerFamily::kStationary, false, false},
    {"blgls", PlannerFamily::kStationary, true, true},
    {"dstar", PlannerFamily::kMoving, false, false},
    {"tdstar", PlannerFamily::kMoving, false, true},
    {"gdstar", PlannerFamily::kMoving, false, false},
    {"bgdstar", PlannerFamily::kMoving, true, true},
};

constexpr double kDefaultBoundedEpsilon = 1.2;

const PlannerInfo* find_planner(const std::string& name) {
  for (const PlannerInfo& info : kPlanners) {
    if (name == info.name) return &info;
  }
  return nullptr;
}

std::string join_names() {
  std::string out;
  for (const PlannerInfo& info : kPlanners) {
    if (!out.empty()) out += ", ";
    out += info.name;
  }
  return out;
}

Event parse_event(const Field& f) {
  if (f.raw().is_string()) {
    if (f.string() == "shortest_path") return Event::shortest_path();
    f.fail("expected \"shortest_path\" or a constant_depth object");
  }
  f.allow_only({"kind", "alpha"});
  const std::string kind = f.at("kind").string();
  if (kind == "shortest_path") return Event::shortest_path();
  if (kind == "constant_depth") return Event::constant_depth(f.at("alpha").integer_at_least(1));
  f.at("kind").fail("unknown event kind '" + kind + "'");
}

json event_to_json(const Event& event) {
  if (event.kind() == Event::Kind::kShortestPath) return "shortest_path";
  return {{"kind", "constant_depth"}, {"alpha", event.alpha()}};
}

PlannerSpec parse_planner(const Field& f) {
  f.allow_only({"name", "label", "epsilon1", "epsilon2", "event", "epsilon_schedule",
                "strict_truncation"});
  const std::string name = f.at("name").string();
  const PlannerInfo* info = find_planner(name);
  if (!info) f.at("name").fail("unknown planner '" + name + "' (known: " + join_names() + ")");
  std::optional<double> e1, e2;
  if (auto g = f.maybe("epsilon1")) {
    if (!info->takes_epsilon1) g->fail("planner '" + name + "' takes no epsilon1");
    e1 = g->number_in(1.0, 1e6);
  }
  if (auto g = f.maybe("epsilon2")) {
    if (!info->takes_epsilon2) g->fail("planner '" + name + "' takes no epsilon2");
    e2 = g->number_in(1.0, 1e6);
  }
  Event event = Event::shortest_path();
  if (auto g = f.maybe("event")) event = parse_event(*g);
  bool schedule = false;
  if (auto g = f.maybe("epsilon_schedule")) {
    if (g->string() != "densify") g->fail("the only schedule is \"densify\"");
    if (name != "blgls") g->fail("only blgls follows the densification schedule");
    if (e1 || e2) g->fail("a schedule excludes fixed epsilons");
    schedule = true;
  }
  std::string label;
  if (auto g = f.maybe("label")) {
    label = g->string();
    if (label.empty() || label.find_first_of(",\"\n") != std::string::npos) {
      g->fail("label must be non-empty and free of commas, quotes and newlines");
    }
  }
  PlannerSpec spec = make_planner(name, e1, e2, event, schedule, label);
  if (auto g = f.maybe("strict_truncation")) {
    if (g->boolean()) spec.config.underconsistent_bound = UnderconsistentBound::kStoredG;
  }
  return spec;
}

ChangeModel parse_change_model(const Field& world) {
  ChangeModel model;
  if (auto scenes = world.maybe("scenes")) {
    for (const Field& scene : scenes->items()) {
      scene.allow_only({"obstacles"});
      Scene s;
      for (const Field& o : scene.at("obstacles").items()) {
        try {
          s.obstacles.push_back(obstacle_from_json(o.raw()));
        } catch (const std::invalid_argument& e) {
          o.fail(e.what());
        }
      }
      model.scenes.push_back(std::move(s));
    }
  }
  if (auto g = world.maybe("reweight_fraction")) model.reweight_fraction = g->number_in(0.0, 1.0);
  if (auto g = world.maybe("block_probability")) model.block_probability = g->number_in(0.0, 1.0);
  return model;
}

void parse_scripted(const Field& changes, ChangeModel& model) {
  for (const Field& entry : changes.items()) {
    entry.allow_only({"epoch", "edges"});
    const std::size_t epoch = entry.at("epoch").integer_at_least(1);
    ChangeBatch& batch = model.scripted[epoch];
    for (const Field& e : entry.at("edges").items()) {
      e.allow_only({"source", "target", "weight"});
      batch.changes.push_back(
          {{static_cast<VertexId>(e.at("source").unsigned_integer()),
            static_cast<VertexId>(e.at("target").unsigned_integer())},
           e.at("weight").weight()});
    }
  }
}

World build_world_from(const Field& world, const Field& changes, const Scenario& scenario) {
  const std::string kind = world.at("kind").string();
  ChangeModel model = parse_change_model(world);
  parse_scripted(changes, model);
  try {
    if (kind == "grid") {
      world.allow_only({"kind", "rows", "cols", "connectivity", "scenes", "reweight_fraction",
                        "block_probability"});
      GridSpec spec;
      spec.rows = world.at("rows").integer_at_least(1);
      spec.cols = world.at("cols").integer_at_least(1);
      if (auto g = world.maybe("connectivity")) {
        spec.connectivity = static_cast<int>(g->unsigned_integer());
        if (spec.connectivity != 4 && spec.connectivity != 8) g->fail("expected 4 or 8");
      }
      if (spec.rows * spec.cols < 2) world.fail("grid needs at least two cells");
      spec.seed = scenario.seed;
      spec.changes = std::move(model);
      return World::grid(spec);
    }
    if (kind == "roadmap") {
      world.allow_only({"kind", "n", "k", "sampler", "halton_skip", "bounds", "anchors",
                        "symmetric", "scenes", "reweight_fraction", "block_probability"});
      RoadmapSpec spec;
      spec.n = world.at("n").integer_at_least(2);
      spec.k = world.at("k").integer_at_least(1);
      if (spec.k >= spec.n) world.at("k").fail("k must be smaller than n");
      if (auto g = world.maybe("sampler")) {
        const std::string s = g->string();
        if (s == "halton") spec.sampler = Sampler::kHalton;
        else if (s == "uniform") spec.sampler = Sampler::kUniform;
        else g->fail("expected \"halton\" or \"uniform\"");
      }
      if (auto g = world.maybe("halton_skip")) spec.halton_skip = g->unsigned_integer();
      if (auto g = world.maybe("bounds")) {
        g->allow_only({"min", "max"});
        spec.bounds = {g->at("min").point(), g->at("max").point()};
        if (!(spec.bounds.min.x < spec.bounds.max.x && spec.bounds.min.y < spec.bounds.max.y)) {
          g->fail("bounds are empty");
        }
      }
      if (auto g = world.maybe("anchors")) {
        for (const Field& a : g->items()) spec.anchors.push_back(a.point());
        if (spec.anchors.size() > spec.n) g->fail("more anchors than vertices");
      }
      if (auto g = world.maybe("symmetric")) spec.symmetric = g->boolean();
      spec.seed = scenario.seed;
      spec.changes = std::move(model);
      return World::roadmap(spec);
    }
    if (kind == "explicit") {
      world.allow_only({"kind", "vertex_count", "points", "edges", "vertex_heuristic",
                        "heuristic_target", "reweight_fraction", "block_probability"});
      ExplicitSpec spec;
      if (auto g = world.maybe("vertex_count")) spec.vertex_count = g->integer_at_least(1);
      if (auto g = world.maybe("points")) {
        for (const Field& p : g->items()) spec.points.push_back(p.point());
      }
      if (spec.vertex_count == 0 && spec.points.empty()) {
        world.fail("explicit world needs vertex_count or points");
      }
      for (const Field& e : world.at("edges").items()) {
        e.allow_only({"source", "target", "heuristic", "weight"});
        ExplicitEdge edge;
        edge.edge = {static_cast<VertexId>(e.at("source").unsigned_integer()),
                     static_cast<VertexId>(e.at("target").unsigned_integer())};
        if (auto h = e.maybe("heuristic")) edge.heuristic = h->number();
        if (auto w = e.maybe("weight")) edge.weight = w->weight();
        spec.edges.push_back(edge);
      }
      if (auto g = world.maybe("vertex_heuristic")) {
        for (const Field& h : g->items()) spec.vertex_heuristic.push_back(h.number_in(0.0, 1e300));
        spec.heuristic_target = scenario.protocol.goal;
        if (auto t = world.maybe("heuristic_target")) {
          spec.heuristic_target = static_cast<VertexId>(t->unsigned_integer());
        } else if (scenario.protocol.goal >= std::max(spec.vertex_count, spec.points.size())) {
          // The goal doubles as the heuristic target; name the field that is wrong.
          throw ScenarioError("/protocol/goal", "vertex " +
                                                    std::to_string(scenario.protocol.goal) +
                                                    " is not in the graph");
        }
      }
      spec.seed = scenario.seed;
      spec.changes = std::move(model);
      return World::explicit_graph(spec);
    }
  } catch (const std::invalid_argument& e) {
    world.fail(e.what());
  }
  world.at("kind").fail("unknown world kind '" + kind + "' (known: grid, roadmap, explicit)");
}

void check_scripted_edges(const World& world, const Field& changes) {
  for (const Field& entry : changes.items()) {
    for (const Field& e : entry.at("edges").items()) {
      const auto s = static_cast<VertexId>(e.at("source").unsigned_integer());
      const auto t = static_cast<VertexId>(e.at("target").unsigned_integer());
      const auto id = world.graph().contains(s) && world.graph().contains(t)
                          ? world.graph().find_edge(s, t)
                          : std::nullopt;
      if (!id) e.fail("no edge " + std::to_string(s) + " -> " + std::to_string(t));
      if (world.edge_heuristics()[*id] > e.at("weight").weight()) {
        e.at("weight").fail("weight undercuts the edge heuristic");
      }
    }
  }
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

PlannerFamily PlannerSpec::family() const {
  const PlannerInfo* info = find_planner(name);
  if (!info) throw std::invalid_argument("unknown planner '" + name + "'");
  return info->family;
}

const std::vector<std::string>& planner_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const PlannerInfo& info : kPlanners) out.emplace_back(info.name);
    return out;
  }();
  return names;
}

PlannerSpec make_planner(const std::string& name, std::optional<double> epsilon1,
                         std::optional<double> epsilon2, Event event, bool epsilon_schedule,
                         std::string label) {
  const PlannerInfo* info = find_planner(name);
  if (!info) throw std::invalid_argument("unknown planner '" + name + "' (known: " + join_names() + ")");
  if (epsilon1 && !info->takes_epsilon1) throw std::invalid_argument(name + " takes no epsilon1");
  if (epsilon2 && !info->takes_epsilon2) throw std::invalid_argument(name + " takes no epsilon2");

  PlannerSpec spec;
  spec.name = name;
  spec.epsilon_schedule = epsilon_schedule;
  const double e1 = epsilon1.value_or(kDefaultBoundedEpsilon);
  const double e2 = epsilon2.value_or(kDefaultBoundedEpsilon);
  if (name == "lpa" || name == "dstar") {
    spec.config = PlannerConfig::eager_incremental();
  } else if (name == "tlpa" || name == "tdstar") {
    spec.config = PlannerConfig::eager_truncated(e2);
  } else if (name == "gls") {
    spec.config = PlannerConfig::from_scratch(event);
  } else if (name == "lgls" || name == "gdstar") {
    spec.config = PlannerConfig::lazy_lifelong(event);
  } else {
    spec.config = PlannerConfig::bounded_lazy_lifelong(e1, e2, event);
  }
  spec.config.event = event;
  // Goal-rooted planners test rule 2 against min(g, rhs).
  if (info->family == PlannerFamily::kMoving) {
    spec.config.underconsistent_bound = UnderconsistentBound::kMinGRhs;
  }
  spec.config = spec.config.normalized();

  if (label.empty()) {
    label = name;
    if (epsilon_schedule) {
      label += "(sched)";
    } else if (spec.config.truncation) {
      label += "(" + format_number(spec.config.epsilon1) + ";" +
               format_number(spec.config.epsilon2) + ")";
    }
    if (event.kind() == Event::Kind::kConstantDepth) {
      label += "[a=" + std::to_string(event.alpha()) + "]";
    }
  }
  spec.label = std::move(label);
  return spec;
}

PlannerSpec parse_planner_token(const std::string& token) {
  const std::string where = "planner '" + token + "'";
  const auto number = [&](const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw ScenarioError(where, "malformed epsilon");
    return value;
  };
  try {
    std::string body = token;
    Event event = Event::shortest_path();
    // Optional "[a=N]" suffix, the same form make_planner puts in labels.
    if (const auto bracket = body.find("[a="); bracket != std::string::npos) {
      if (body.back() != ']') throw ScenarioError(where, "malformed event suffix");
      const std::string depth = body.substr(bracket + 3, body.size() - bracket - 4);
      const double alpha = number(depth);
      if (!(alpha >= 1.0) || alpha != std::floor(alpha) || alpha > 1e9) {
        throw ScenarioError(where, "alpha must be a positive integer");
      }
      event = Event::constant_depth(static_cast<std::size_t>(alpha));
      body.resize(bracket);
    }
    const auto open = body.find('(');
    if (open == std::string::npos) return make_planner(body, {}, {}, event);
    if (body.back() != ')') throw ScenarioError(where, "malformed planner token");
    const std::string name = body.substr(0, open);
    const std::string args = body.substr(open + 1, body.size() - open - 2);
    if (args == "sched") return make_planner(name, {}, {}, event, true);
    const auto sep = args.find(';');
    if (sep == std::string::npos) return make_planner(name, {}, number(args), event);
    return make_planner(name, number(args.substr(0, sep)), number(args.substr(sep + 1)), event);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where, e.what());
  }
}

Scenario parse_scenario(const json& j) {
  const Field root(j, "");
  root.allow_only({"schema_version", "id", "seed", "world", "changes", "protocol", "planners",
                   "evaluation_delay_us"});
  if (root.at("schema_version").unsigned_integer() != kScenarioSchemaVersion) {
    root.at("schema_version").fail("unsupported schema version (expected " +
                                   std::to_string(kScenarioSchemaVersion) + ")");
  }
  Scenario s;
  s.id = root.at("id").string();
  if (s.id.empty() || s.id.find_first_of(",\"\n") != std::string::npos) {
    root.at("id").fail("id must be non-empty and free of commas, quotes and newlines");
  }
  s.seed = root.at("seed").unsigned_integer();
  if (auto g = root.maybe("evaluation_delay_us")) {
    s.evaluation_delay_us = static_cast<std::uint32_t>(g->unsigned_integer());
  }

  const Field protocol = root.at("protocol");
  protocol.allow_only({"kind", "epochs", "batch_size", "start", "goal", "max_steps"});
  const std::string kind = protocol.at("kind").string();
  if (kind == "fixed") s.protocol.kind = ProtocolKind::kFixed;
  else if (kind == "densify") s.protocol.kind = ProtocolKind::kDensify;
  else if (kind == "moving") s.protocol.kind = ProtocolKind::kMoving;
  else protocol.at("kind").fail("expected \"fixed\", \"densify\" or \"moving\"");
  s.protocol.epochs = protocol.at("epochs").integer_at_least(1);
  if (auto g = protocol.maybe("batch_size")) s.protocol.batch_size = g->integer_at_least(1);
  s.protocol.start = static_cast<VertexId>(protocol.at("start").unsigned_integer());
  s.protocol.goal = static_cast<VertexId>(protocol.at("goal").unsigned_integer());
  if (auto g = protocol.maybe("max_steps")) s.protocol.max_steps = g->unsigned_integer();

  const PlannerFamily wanted = s.protocol.kind == ProtocolKind::kMoving
                                   ? PlannerFamily::kMoving
                                   : PlannerFamily::kStationary;
  std::set<std::string> labels;
  for (const Field& p : root.at("planners").items()) {
    PlannerSpec spec;
    try {
      spec = parse_planner(p);
    } catch (const std::invalid_argument& e) {
      p.fail(e.what());
    }
    if (spec.family() != wanted) {
      p.at("name").fail("planner '" + spec.name + "' does not fit the " + kind + " protocol");
    }
    if (spec.epsilon_schedule && s.protocol.kind != ProtocolKind::kDensify) {
      p.at("epsilon_schedule").fail("schedules need the densify protocol");
    }
    if (!labels.insert(spec.label).second) p.fail("duplicate planner label '" + spec.label + "'");
    s.planners.push_back(std::move(spec));
  }

  s.world = root.at("world").raw();
  if (auto g = root.maybe("changes")) {
    g->items();
    s.changes = g->raw();
  }
  if (s.protocol.kind == ProtocolKind::kDensify && !s.changes.empty()) {
    root.at("changes").fail("the densify protocol takes no weight changes");
  }
  // Building the world validates the remaining references.
  build_world(s);
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(line_column(text, e.byte), "invalid JSON");
  }
  return parse_scenario(j);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path.string(), "cannot open scenario file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario_text(buffer.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.where(),
                        std::string(e.what()).substr(e.where().size() + 2));
  }
}

World build_world(const Scenario& scenario) {
  const Field world(scenario.world, "/world");
  const Field changes(scenario.changes, "/changes");
  World w = build_world_from(world, changes, scenario);
  check_scripted_edges(w, changes);
  const std::size_t n = w.graph().vertex_count();
  if (scenario.protocol.start >= n) {
    throw ScenarioError("/protocol/start", "vertex " + std::to_string(scenario.protocol.start) +
                                               " is not in the graph");
  }
  if (scenario.protocol.goal >= n) {
    throw ScenarioError("/protocol/goal", "vertex " + std::to_string(scenario.protocol.goal) +
                                              " is not in the graph");
  }
  if (scenario.protocol.kind == ProtocolKind::kDensify && w.kind() != WorldKind::kRoadmap) {
    throw ScenarioError("/world/kind", "the densify protocol needs a roadmap");
  }
  return w;
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["schema_version"] = kScenarioSchemaVersion;
  j["id"] = s.id;
  j["seed"] = s.seed;
  j["world"] = s.world;
  if (!s.changes.empty()) j["changes"] = s.changes;
  const char* kind = s.protocol.kind == ProtocolKind::kFixed     ? "fixed"
                     : s.protocol.kind == ProtocolKind::kDensify ? "densify"
                                                                 : "moving";
  json protocol = {{"kind", kind},
                   {"epochs", s.protocol.epochs},
                   {"start", s.protocol.start},
                   {"goal", s.protocol.goal}};
  if (s.protocol.kind == ProtocolKind::kDensify) protocol["batch_size"] = s.protocol.batch_size;
  if (s.protocol.max_steps != 0) protocol["max_steps"] = s.protocol.max_steps;
  j["protocol"] = protocol;
  json planners = json::array();
  for (const PlannerSpec& p : s.planners) {
    json entry = {{"name", p.name}, {"label", p.label}};
    const PlannerInfo* info = find_planner(p.name);
    if (p.epsilon_schedule) {
      entry["epsilon_schedule"] = "densify";
    } else {
      if (info->takes_epsilon1) entry["epsilon1"] = p.config.epsilon1;
      if (info->takes_epsilon2) entry["epsilon2"] = p.config.epsilon2;
    }
    if (p.config.event.kind() != Event::Kind::kShortestPath) {
      entry["event"] = event_to_json(p.config.event);
    }
    if (info->family == PlannerFamily::kMoving && p.config.truncation &&
        p.config.underconsistent_bound == UnderconsistentBound::kStoredG) {
      entry["strict_truncation"] = true;
    }
    planners.push_back(std::move(entry));
  }
  j["planners"] = planners;
  if (s.evaluation_delay_us != 0) j["evaluation_delay_us"] = s.evaluation_delay_us;
  return j;
}

}  // namespace lazysearch
