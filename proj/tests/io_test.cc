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

#include "entplan/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

using namespace entplan;

TEST(io, qubit_graph_round_trip) {
    QubitGraph g;
    g.add_qubit(0);
    g.add_qubit(2);
    g.add_qubit(2);
    g.add_edge(0, 2);
    g.add_edge(1, 0);
    EXPECT_EQ(qubit_graph_from_json(to_json(g)), g);
}

TEST(io, task_set_round_trip_and_bare_list) {
    const TaskSet ts = example_task_set();
    EXPECT_EQ(task_set_from_json(to_json(ts)), ts);
    EXPECT_EQ(task_set_from_json(to_json(ts)["tasks"], 6), ts);
    EXPECT_THROW(task_set_from_json(to_json(ts)["tasks"]), ConfigError);
    EXPECT_THROW(task_set_from_json(Json::parse(R"({"n_users": 3, "tasks": [[[0, 1], [1, 2]]]})")),
                 std::invalid_argument);
}

TEST(io, plan_round_trip_for_every_setting) {
    const TaskSet ts = example_task_set();
    for (Setting s : kAllSettings) {
        Rng rng(0);
        const ResourcePlan plan = merging_algorithm(build(s, ts, GridNetwork::example(4), rng));
        const Json j = to_json(plan);
        EXPECT_EQ(plan_from_json(j), plan) << to_string(s);
        EXPECT_EQ(j["q"], q_count(plan));
        EXPECT_EQ(plan_from_json(Json::parse(j.dump())), plan);
    }
}

TEST(io, plan_with_infeasible_tasks_round_trips) {
    Rng rng(0);
    const ResourcePlan plan = build_ec(example_task_set(), GridNetwork::example(1), rng);
    EXPECT_EQ(plan_from_json(to_json(plan)), plan);
}

TEST(io, tampered_plan_is_rejected) {
    const ResourcePlan plan = build_bm(example_task_set());
    Json j = to_json(plan);
    j["q"] = 3;
    EXPECT_THROW(plan_from_json(j), ConfigError);
}

TEST(io, config_defaults_to_the_example_network) {
    const ScenarioConfig cfg = parse_config(Json::object());
    EXPECT_EQ(cfg.net, GridNetwork::example(2));
    EXPECT_FALSE(cfg.tasks.has_value());
    const Scenario sc = to_scenario(cfg, 5);
    EXPECT_EQ(sc.master_seed, 5u);
    EXPECT_EQ(sc.trials_per_point, 1u);
}

TEST(io, config_full_document) {
    const Json j = Json::parse(R"({
        "grid": {"width": 4, "height": 3, "edge_km": 100},
        "users": [[0, 0], [3, 2], [1, 1]],
        "D": 1,
        "generator": {"n_tasks": 4, "p": 0.5, "seed": 9},
        "settings": ["bm", "SED_EC"],
        "sweep": {"kind": "positions", "values": [1, 2], "trials": 3},
        "threads": 2,
        "output": {"csv": "out.csv", "summary": "out.json"}
    })");
    const ScenarioConfig cfg = parse_config(j);
    EXPECT_EQ(cfg.net.width(), 4);
    EXPECT_EQ(cfg.net.n_users(), 3u);
    EXPECT_EQ(cfg.net.threshold(), 1u);
    EXPECT_EQ(cfg.n_tasks, 4u);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.settings, (std::vector<Setting>{Setting::kBM, Setting::kSedEc}));
    EXPECT_EQ(cfg.sweep, SweepKind::kPositions);
    EXPECT_EQ(cfg.trials, 3u);
    EXPECT_EQ(cfg.threads, 2u);
    EXPECT_EQ(cfg.csv_path, "out.csv");
    const Scenario sc = to_scenario(cfg);
    EXPECT_EQ(sc.master_seed, 9u);
    EXPECT_EQ(to_scenario(cfg, 1).master_seed, 1u);
}

TEST(io, config_errors_name_the_field) {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {R"({"bogus": 1})", "bogus"},
        {R"({"grid": {"width": 5, "depth": 2}})", "depth"},
        {R"({"generator": {"p": 2}})", "generator.p"},
        {R"({"settings": ["XX"]})", "settings"},
        {R"({"sweep": {"kind": "n_users"}})", "sweep"},
        {R"({"sweep": {"kind": "sideways", "values": [1]}})", "sweep.kind"},
        {R"({"users": [[0, 0], [0, 0]]})", "network"},
        {R"({"D": "two"})", "D"},
    };
    for (const auto& [doc, field] : cases) {
        try {
            parse_config(Json::parse(doc));
            ADD_FAILURE() << "accepted " << doc;
        } catch (const ConfigError& e) {
            EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
        }
    }
}

TEST(io, read_json_file_errors) {
    EXPECT_THROW(read_json_file("/nonexistent/entplan.json"), ConfigError);
    const auto path = std::filesystem::temp_directory_path() / "entplan_io_test_bad.json";
    std::ofstream(path) << "{ not json";
    EXPECT_THROW(read_json_file(path.string()), ConfigError);
    std::filesystem::remove(path);
}

TEST(io, summary_rows_serialize) {
    SummaryRow r;
    r.sweep_value = 3;
    r.trials = 2;
    r.q_pre_sum = 10;
    r.q_post_sum = 6;
    const Json j = to_json(std::vector<SummaryRow>{r});
    EXPECT_EQ(j[0]["setting"], "BM");
    EXPECT_DOUBLE_EQ(j[0]["q_post_mean"].get<double>(), 3.0);
}
