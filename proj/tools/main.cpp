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

#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"

using namespace entplan;

int main(int argc, char** argv) {
    CLI::App cli{"Plan, check and simulate pre-distributed entanglement in grid networks"};
    cli.require_subcommand(1);

    app::PlanArgs plan;
    std::string plan_setting = "bm";
    auto* plan_cmd = cli.add_subcommand("plan", "Build and merge a resource state");
    plan_cmd->add_option("config", plan.config, "Scenario config (JSON)");
    plan_cmd->add_flag("--example", plan.example, "Use the built-in six-user example");
    auto* plan_seed = plan_cmd->add_option("--seed", plan.seed, "Seed for all random choices");
    plan_cmd->add_option("--D", plan.threshold, "Distance threshold (overrides the config)");
    plan_cmd->add_option("--setting", plan_setting, "bm, sed, ec or sed_ec")
        ->check(CLI::IsMember({"bm", "sed", "ec", "sed_ec"}, CLI::ignore_case));
    plan_cmd->add_flag("--strict", plan.strict, "Exit with code 3 if any task is infeasible");
    plan_cmd->add_flag("!--no-merge", plan.merge, "Skip the merging step");
    plan_cmd->add_option("--out", plan.out, "Write the plan JSON here");
    plan_cmd->add_option("--tasks-out", plan.tasks_out, "Write the task set JSON here");

    app::CheckArgs check;
    auto* check_cmd = cli.add_subcommand("check", "Find a measurement schedule for every task");
    check_cmd->add_option("plan", check.plan_path, "Plan JSON")->required();
    check_cmd->add_option("tasks", check.tasks_path, "Task set JSON")->required();
    check_cmd->add_option("--task", check.task, "Only this task (1-based)");
    check_cmd->add_option("--out", check.out, "Write schedules as JSON here");

    app::SimulateArgs sim;
    auto* sim_cmd = cli.add_subcommand("simulate", "Run a Monte-Carlo scenario");
    sim_cmd->add_option("scenario", sim.scenario_path, "Scenario config (JSON)")->required();
    auto* sim_seed = sim_cmd->add_option("--seed", sim.seed, "Master seed (overrides the config)");
    sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
    sim_cmd->add_option("--out", sim.csv_out, "CSV output path ('-' for stdout)");
    sim_cmd->add_option("--summary", sim.summary_out, "Summary JSON output path");

    app::TaskgenArgs gen;
    auto* gen_cmd = cli.add_subcommand("taskgen", "Draw a random task set");
    gen_cmd->add_option("--users", gen.n_users, "Number of users")->check(CLI::Range(2, 1000));
    gen_cmd->add_option("--tasks", gen.n_tasks, "Number of tasks (default users - 1)");
    gen_cmd->add_option("--p", gen.p, "Pair probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "Seed");
    gen_cmd->add_option("--out", gen.out, "Write the task set JSON here");

    size_t max_vertices = 5;
    auto* verify_cmd =
        cli.add_subcommand("verify-rules", "Check the rewrite rules against statevector simulation");
    verify_cmd->add_option("--max-vertices", max_vertices, "Largest graph size swept")
        ->check(CLI::Range(1, 6));

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return app::kConfigError;
    }

    if (*plan_cmd) {
        plan.setting = parse_setting(plan_setting);
        plan.seed_given = plan_seed->count() > 0;
        return app::cmd_plan(plan, std::cout, std::cerr);
    }
    if (*check_cmd) {
        return app::cmd_check(check, std::cout, std::cerr);
    }
    if (*sim_cmd) {
        sim.seed_given = sim_seed->count() > 0;
        return app::cmd_simulate(sim, std::cout, std::cerr);
    }
    if (*gen_cmd) {
        return app::cmd_taskgen(gen, std::cout, std::cerr);
    }
    return app::cmd_verify_rules(std::cout, std::cerr, max_vertices);
}
