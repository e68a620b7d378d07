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

#ifndef LAZYSEARCH_SCENARIO_HPP
#define LAZYSEARCH_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lazysearch/planner_config.hpp"
#include "lazysearch/world.hpp"

namespace lazysearch {

inline constexpr int kScenarioSchemaVersion = 1;

/// Input problem with a location: a JSON pointer to the offending field, or a
/// line and column for syntax errors.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

enum class ProtocolKind {
  /// Fixed topology; scripted weight changes between queries.
  kFixed,
  /// Growing roadmap; no weight changes.
  kDensify,
  /// Agent walking to the goal while weights change.
  kMoving,
};

enum class PlannerFamily { kStationary, kMoving };

/// One roster entry.
struct PlannerSpec {
  std::string name;
  std::string label;
  PlannerConfig config;
  /// Densification schedules drive epsilon1 and epsilon2.
  bool epsilon_schedule = false;

  PlannerFamily family() const;
};

struct Protocol {
  ProtocolKind kind = ProtocolKind::kFixed;
  /// Fixed and densify: number of queries. Moving: epochs with changes.
  std::size_t epochs = 1;
  std::size_t batch_size = 100;
  VertexId start = 0;
  VertexId goal = 0;
  /// Moving protocol only; 0 picks 4 * vertex count.
  std::size_t max_steps = 0;
};

struct Scenario {
  std::string id;
  std::uint64_t seed = 0;
  nlohmann::json world;
  /// Scripted weight changes: [{"epoch": e, "edges": [{source, target, weight}]}].
  nlohmann::json changes = nlohmann::json::array();
  Protocol protocol;
  std::vector<PlannerSpec> planners;
  std::uint32_t evaluation_delay_us = 0;
};

/// Planner names accepted in rosters and on the command line.
const std::vector<std::string>& planner_names();

/// Builds a roster entry. Bounded planners default to epsilon 1.2; the label
/// is derived unless given.
PlannerSpec make_planner(const std::string& name, std::optional<double> epsilon1 = {},
                         std::optional<double> epsilon2 = {}, Event event = Event::shortest_path(),
                         bool epsilon_schedule = false, std::string label = {});

/// Parses "name" or "name(e1;e2)" as used by `compare --planners`.
PlannerSpec parse_planner_token(const std::string& token);

Scenario parse_scenario(const nlohmann::json& j);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const Scenario& scenario);

/// Builds the epoch-0 world. Throws ScenarioError for world-level problems
/// (including start and goal outside the graph).
World build_world(const Scenario& scenario);

}  // namespace lazysearch

#endif  // LAZYSEARCH_SCENARIO_HPP
