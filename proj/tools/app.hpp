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
#include <ostream>
#include <string>

#include "entplan/planner.hpp"

namespace entplan::app {

/// Process exit codes of the entplan tool.
enum ExitCode : int {
    kOk = 0,
    kUnsatisfied = 1,
    kConfigError = 2,
    kStrictInfeasible = 3,
};

struct PlanArgs {
    std::optional<std::string> config;
    bool example = false;
    uint64_t seed = 0;
    bool seed_given = false;
    std::optional<unsigned> threshold;
    Setting setting = Setting::kBM;
    bool strict = false;
    bool merge = true;
    std::optional<std::string> out;
    std::optional<std::string> tasks_out;
};

struct CheckArgs {
    std::string plan_path;
    std::string tasks_path;
    /// 1-based task index; all tasks when absent.
    std::optional<size_t> task;
    std::optional<std::string> out;
};

struct SimulateArgs {
    std::string scenario_path;
    uint64_t seed = 0;
    bool seed_given = false;
    std::optional<unsigned> threads;
    std::optional<std::string> csv_out;
    std::optional<std::string> summary_out;
};

struct TaskgenArgs {
    size_t n_users = 6;
    std::optional<size_t> n_tasks;
    double p = 0.8;
    uint64_t seed = 0;
    std::optional<std::string> out;
};

int cmd_plan(const PlanArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_taskgen(const TaskgenArgs& args, std::ostream& out, std::ostream& err);
/// Exhaustive rewrite-rule sweep over all graphs with at most `max_vertices`
/// vertices. Prints "rule1 PASS rule2 PASS rule3 PASS rule4 PASS" on success.
int cmd_verify_rules(std::ostream& out, std::ostream& err, size_t max_vertices = 5);

}  // namespace entplan::app
