// Copyright 2026 The entplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entplan/checker.hpp"
#include "entplan/graphstate.hpp"
#include "entplan/harness.hpp"
#include "entplan/planner.hpp"
#include "entplan/taskgen.hpp"
#include "entplan/topology.hpp"

namespace entplan {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// All user indices in JSON documents are 0-based.

Json to_json(const QubitGraph& g);
QubitGraph qubit_graph_from_json(const Json& j);

/// {"n_users": n, "tasks": [[[a, b], ...], ...]}
Json to_json(const TaskSet& ts);
/// Accepts the object form, or a bare list of tasks when n_users is given.
TaskSet task_set_from_json(const Json& j, std::optional<size_t> n_users = std::nullopt);

Json to_json(const ResourcePlan& plan);
ResourcePlan plan_from_json(const Json& j);

Json to_json(const Schedule& s);

Json to_json(const GridNetwork& net);

Json to_json(const std::vector<SummaryRow>& rows);

struct ScenarioConfig {
    GridNetwork net = GridNetwork::example(2);
    std::optional<TaskSet> tasks;
    /// Generator block; used when no inline tasks are given.
    std::optional<size_t> n_tasks;
    double p = 0.8;
    std::optional<uint64_t> seed;
    std::vector<Setting> settings{std::begin(kAllSettings), std::end(kAllSettings)};
    std::optional<SweepKind> sweep;
    std::vector<uint64_t> sweep_values;
    size_t trials = 20;
    std::optional<unsigned> threads;
    std::optional<std::string> csv_path;
    std::optional<std::string> summary_path;
};

/// Parses a scenario document. Unknown keys, wrong types and invalid values
/// raise ConfigError naming the offending field.
ScenarioConfig parse_config(const Json& j);

/// Scenario for run_scenario. `seed` overrides the document's seed.
Scenario to_scenario(const ScenarioConfig& cfg, std::optional<uint64_t> seed = std::nullopt);

/// Reads and parses a JSON file; errors become ConfigError.
Json read_json_file(const std::string& path);

}  // namespace entplan
