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

#include "app.hpp"

#include <fstream>
#include <sstream>

#include "entplan/checker.hpp"
#include "entplan/harness.hpp"
#include "entplan/io.hpp"
#include "entplan/oracle.hpp"

namespace entplan::app {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot write '" + path + "'");
    }
    f << text;
}

std::string label(const UserPair& p) {
    return "(" + std::to_string(p.lo + 1) + "," + std::to_string(p.hi + 1) + ")";
}

std::string route_label(const std::vector<UserId>& route) {
    std::string out;
    for (size_t i = 0; i < route.size(); ++i) {
        out += (i ? "-" : "") + std::to_string(route[i] + 1);
    }
    return out;
}

}  // namespace

int cmd_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.example == args.config.has_value()) {
            throw ConfigError("plan needs exactly one of --example or a config file");
        }
        GridNetwork net = GridNetwork::example(7);
        TaskSet ts;
        uint64_t seed = args.seed;
        if (args.example) {
            ts = example_task_set();
        } else {
            const ScenarioConfig cfg = parse_config(read_json_file(*args.config));
            net = cfg.net;
            if (!args.seed_given && cfg.seed) {
                seed = *cfg.seed;
            }
            if (cfg.tasks) {
                ts = *cfg.tasks;
            } else {
                Rng rng(derive_seed(seed, {stream_tag("tasks")}));
                ts = generate_tasks(net.n_users(), cfg.n_tasks.value_or(net.n_users() - 1), cfg.p,
                                    rng);
            }
        }
        if (args.threshold) {
            net = net.with_threshold(*args.threshold);
        }
        Rng rng(derive_seed(seed, {stream_tag("plan")}));
        const ResourcePlan built = build(args.setting, ts, net, rng);
        const ResourcePlan plan = args.merge ? merge_preserving_tasks(built, ts) : built;

        out << "setting " << to_string(plan.setting) << ", D=" << net.threshold() << ", "
            << ts.size() << " tasks\n";
        out << "Q=" << built.q_pre << " → " << q_count(plan) << "\n";
        for (size_t k = 0; k < plan.sed_choice.size(); ++k) {
            if (plan.sed_choice[k]) {
                out << "task " << k + 1 << " satellite S_{" << plan.sed_choice[k]->lo + 1 << ","
                    << plan.sed_choice[k]->hi + 1 << "}\n";
            }
        }
        for (const auto& [p, route] : plan.ec_paths) {
            out << "pair " << label(p) << " routed " << route_label(route) << "\n";
        }
        if (!plan.infeasible_tasks.empty()) {
            out << "infeasible tasks:";
            for (size_t k : plan.infeasible_tasks) {
                out << " " << k + 1;
            }
            out << "\n";
        }
        if (args.out) {
            write_file(*args.out, to_json(plan).dump(2) + "\n");
        }
        if (args.tasks_out) {
            write_file(*args.tasks_out, to_json(ts).dump(2) + "\n");
        }
        if (args.strict && !plan.infeasible_tasks.empty()) {
            err << "error: " << plan.infeasible_tasks.size() << " task(s) cannot be planned under D="
                << net.threshold() << "\n";
            return kStrictInfeasible;
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    ResourcePlan plan;
    TaskSet ts;
    try {
        plan = plan_from_json(read_json_file(args.plan_path));
        ts = task_set_from_json(read_json_file(args.tasks_path), plan.n_users);
        if (ts.n_users != plan.n_users) {
            throw ConfigError("tasks and plan disagree on the number of users");
        }
        if (plan.sed_choice.size() != ts.size()) {
            throw ConfigError("plan covers " + std::to_string(plan.sed_choice.size()) +
                              " tasks but the task file has " + std::to_string(ts.size()));
        }
        if (args.task && (*args.task == 0 || *args.task > ts.size())) {
            throw ConfigError("task index " + std::to_string(*args.task) + " out of range");
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }

    Json schedules = Json::array();
    std::vector<size_t> failed;
    for (size_t k = 0; k < ts.size(); ++k) {
        if (args.task && *args.task != k + 1) {
            continue;
        }
        std::optional<Schedule> s;
        if (!plan.infeasible_tasks.contains(k)) {
            try {
                s = satisfy(plan.state, ts.tasks[k], plan.sed_choice[k]);
            } catch (const std::invalid_argument& e) {
                err << "error: task " << k + 1 << ": " << e.what() << "\n";
                return kConfigError;
            }
        }
        out << "task " << k + 1 << ": ";
        if (s) {
            const std::string text = notation(plan.state, *s);
            out << (text.empty() ? "-" : text) << "\n";
            Json j = to_json(*s);
            j["task"] = k + 1;
            schedules.push_back(j);
        } else {
            out << "UNSATISFIED\n";
            failed.push_back(k + 1);
            schedules.push_back({{"task", k + 1}, {"unsatisfied", true}});
        }
    }
    if (args.out) {
        try {
            write_file(*args.out, schedules.dump(2) + "\n");
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kConfigError;
        }
    }
    if (!failed.empty()) {
        err << "unsatisfied task(s):";
        for (size_t k : failed) {
            err << " " << k;
        }
        err << "\n";
        return kUnsatisfied;
    }
    return kOk;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig cfg = parse_config(read_json_file(args.scenario_path));
        const Scenario sc =
            to_scenario(cfg, args.seed_given ? std::optional(args.seed) : std::nullopt);
        const unsigned threads = args.threads.value_or(cfg.threads.value_or(1));
        const auto records = run_scenario(sc, threads);

        std::ostringstream csv;
        write_csv(csv, records);
        const auto csv_path = args.csv_out ? args.csv_out : cfg.csv_path;
        if (csv_path && *csv_path != "-") {
            write_file(*csv_path, csv.str());
        } else {
            out << csv.str();
        }

        const auto rows = summarize(records);
        Json summary = {{"sweep", to_string(sc.sweep)},
                        {"master_seed", sc.master_seed},
                        {"trials_per_point", sc.trials_per_point},
                        {"rows", to_json(rows)}};
        const auto summary_path = args.summary_out ? args.summary_out : cfg.summary_path;
        if (summary_path) {
            write_file(*summary_path, summary.dump(2) + "\n");
        }
        if (csv_path && *csv_path != "-") {
            for (const auto& r : rows) {
                out << to_string(sc.sweep) << "=" << r.sweep_value << " " << to_string(r.setting)
                    << " mean Q " << r.mean_q_pre() << " → " << r.mean_q_post()
                    << ", failed tasks " << r.tasks_failed << ", failed sets " << r.sets_failed
                    << "\n";
            }
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

int cmd_taskgen(const TaskgenArgs& args, std::ostream& out, std::ostream& err) {
    try {
        Rng rng(derive_seed(args.seed, {stream_tag("tasks")}));
        const TaskSet ts =
            generate_tasks(args.n_users, args.n_tasks.value_or(args.n_users - 1), args.p, rng);
        const std::string text = to_json(ts).dump(2) + "\n";
        if (args.out) {
            write_file(*args.out, text);
        } else {
            out << text;
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

int cmd_verify_rules(std::ostream& out, std::ostream& err, size_t max_vertices) {
    const oracle::RuleTally t = oracle::exhaustive_rule_sweep(max_vertices);
    for (size_t r = 0; r < oracle::kRuleCount; ++r) {
        out << (r ? " " : "") << "rule" << r + 1 << " " << (t.passed(r) ? "PASS" : "FAIL");
    }
    out << "\n";
    if (!t.all_passed()) {
        for (size_t r = 0; r < oracle::kRuleCount; ++r) {
            err << "rule" << r + 1 << ": " << t.failures[r] << " of " << t.cases[r]
                << " cases failed\n";
        }
        return kUnsatisfied;
    }
    return kOk;
}

}  // namespace entplan::app
