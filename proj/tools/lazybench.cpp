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

// lazybench: generate scenarios, replay them across planners and certify the
// results against the oracle.
//
// Exit codes: 0 ok, 2 input error, 3 invariant or bound violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lazysearch/bench.hpp"
#include "lazysearch/scenario.hpp"

namespace {

using namespace lazysearch;

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInvariantError = 3;

std::vector<PlannerSpec> parse_planner_list(const std::string& list) {
  std::vector<PlannerSpec> out;
  std::stringstream in(list);
  std::string token;
  // Commas separate planners; epsilons inside parentheses use ';'.
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(parse_planner_token(token));
  }
  return out;
}

int write_rows(const RunReport& report, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, report.rows);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kInputError;
    }
    write_csv(out, report.rows);
  }
  std::size_t violations = 0;
  for (const RunRow& row : report.rows) {
    if (!row.bound_ok) {
      ++violations;
      std::cerr << "bound violation: " << row.planner << " epoch " << row.epoch
                << " cost " << row.path_cost << " oracle " << row.oracle_cost << "\n";
    }
  }
  return violations == 0 ? kOk : kInvariantError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy incremental replanning benchmark"};
  app.require_subcommand(1);

  GenerateParams gen;
  std::string world_kind = "grid";
  std::string protocol = "fixed";
  std::string sampler = "halton";
  std::string gen_planners;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a self-contained scenario file");
  generate->add_option("--world", world_kind, "grid or roadmap")
      ->check(CLI::IsMember({"grid", "roadmap"}));
  generate->add_option("--protocol", protocol, "fixed, densify or moving")
      ->check(CLI::IsMember({"fixed", "densify", "moving"}));
  generate->add_option("--seed", gen.seed, "Scenario seed");
  generate->add_option("--rows", gen.rows, "Grid rows")->check(CLI::PositiveNumber);
  generate->add_option("--cols", gen.cols, "Grid columns")->check(CLI::PositiveNumber);
  generate->add_option("--connectivity", gen.connectivity, "Grid connectivity (4 or 8)")
      ->check(CLI::IsMember({4, 8}));
  generate->add_option("--n", gen.n, "Roadmap vertices (anchors included)");
  generate->add_option("--k", gen.k, "Roadmap nearest neighbours");
  generate->add_option("--sampler", sampler, "halton or uniform")
      ->check(CLI::IsMember({"halton", "uniform"}));
  generate->add_option("--epochs", gen.epochs, "Queries or change epochs")->check(CLI::PositiveNumber);
  generate->add_option("--batch-size", gen.batch_size, "Densification batch")
      ->check(CLI::PositiveNumber);
  generate->add_option("--reweight-fraction", gen.reweight_fraction,
                       "Roadmap edge share reweighted per epoch");
  generate->add_option("--planners", gen_planners, "Roster, e.g. lgls,blgls(1.2;1.2)");
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  std::string scenario_path;
  std::string out_path;
  bool timing = false;
  bool audit = false;
  auto* run = app.add_subcommand("run", "Replay a scenario with its own roster");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_path, "CSV output (default stdout)");
  run->add_flag("--timing", timing, "Record wall time (output no longer reproducible)");
  run->add_flag("--audit", audit, "Check lazy-weight invariants after every mutation");

  std::string compare_planners;
  auto* compare = app.add_subcommand("compare", "Replay a scenario with a given roster");
  compare->add_option("--planners", compare_planners, "Comma-separated planner names")
      ->required();
  compare->add_option("--scenario", scenario_path, "Scenario file")->required();
  compare->add_option("--out", out_path, "CSV output (default stdout)");
  compare->add_flag("--timing", timing, "Record wall time");
  compare->add_flag("--audit", audit, "Check lazy-weight invariants after every mutation");

  std::string csv_path;
  auto* verify = app.add_subcommand("verify", "Re-certify the bound flags of a CSV");
  verify->add_option("--csv", csv_path, "CSV file")->required();
  verify->add_option("--scenario", scenario_path, "Scenario that produced the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*generate) {
      gen.world = world_kind == "grid" ? GeneratedWorld::kGrid : GeneratedWorld::kRoadmap;
      gen.protocol = protocol == "fixed"     ? ProtocolKind::kFixed
                     : protocol == "densify" ? ProtocolKind::kDensify
                                             : ProtocolKind::kMoving;
      gen.sampler = sampler == "halton" ? Sampler::kHalton : Sampler::kUniform;
      gen.planners = parse_planner_list(gen_planners);
      Scenario scenario = generate_scenario(gen);
      // Round-trip through the validator before writing.
      const std::string text = scenario_to_json(scenario).dump(2) + "\n";
      parse_scenario_text(text);
      if (gen_out.empty() || gen_out == "-") {
        std::cout << text;
      } else {
        std::ofstream out(gen_out);
        if (!out) {
          std::cerr << "error: cannot write " << gen_out << "\n";
          return kInputError;
        }
        out << text;
      }
      return kOk;
    }

    RunOptions options;
    options.timing = timing;
    options.audit = audit;
    options.threads = thread_count_from_env();
    if (*run) {
      const Scenario scenario = load_scenario(scenario_path);
      return write_rows(run_scenario(scenario, options), out_path);
    }
    if (*compare) {
      Scenario scenario = load_scenario(scenario_path);
      scenario.planners = parse_planner_list(compare_planners);
      // Re-validate the replaced roster against the protocol.
      scenario = parse_scenario(scenario_to_json(scenario));
      return write_rows(run_scenario(scenario, options), out_path);
    }
    if (*verify) {
      std::ifstream in(csv_path);
      if (!in) {
        std::cerr << "error: cannot open " << csv_path << "\n";
        return kInputError;
      }
      std::optional<Scenario> scenario;
      if (!scenario_path.empty()) scenario = load_scenario(scenario_path);
      const VerifyResult result = verify_csv(in, scenario);
      for (const std::string& failure : result.failures) std::cerr << failure << "\n";
      std::cout << result.rows << " rows, " << result.failures.size() << " failures\n";
      return result.ok() ? kOk : kInvariantError;
    }
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScenarioFailure& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
