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

#include <fstream>
#include <set>

namespace entplan {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
}

template <typename T>
T get(const Json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

uint64_t get_count(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<int64_t>() < 0)) {
        throw ConfigError(where + ": expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

UserPair pair_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError(where + ": expected a pair [a, b]");
    }
    const auto a = static_cast<UserId>(get_count(j[0], where));
    const auto b = static_cast<UserId>(get_count(j[1], where));
    if (a == b) {
        throw ConfigError(where + ": pair joins user " + std::to_string(a) + " to itself");
    }
    return {a, b};
}

Json pair_json(const UserPair& p) {
    return Json::array({p.lo, p.hi});
}

Json graph_edges(const UserGraph& g) {
    Json out = Json::array();
    for (const auto& [p, w] : g.edges()) {
        for (uint32_t i = 0; i < w; ++i) {
            out.push_back(pair_json(p));
        }
    }
    return out;
}

UserGraph user_graph_from_json(const Json& j, size_t n_users, const std::string& where) {
    if (!j.is_array()) {
        throw ConfigError(where + ": expected a list of pairs");
    }
    UserGraph g(n_users);
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const UserPair p = pair_from_json(j[i], at);
        if (p.hi >= n_users) {
            throw ConfigError(at + ": user " + std::to_string(p.hi) + " out of range");
        }
        g.add_edge(p);
    }
    return g;
}

GridNetwork network_from_config(const Json& j) {
    int width = 5;
    int height = 5;
    double km = 200.0;
    if (j.contains("grid")) {
        const Json& g = j["grid"];
        check_keys(g, {"width", "height", "edge_km"}, "grid");
        if (g.contains("width")) {
            width = static_cast<int>(get_count(g["width"], "grid.width"));
        }
        if (g.contains("height")) {
            height = static_cast<int>(get_count(g["height"], "grid.height"));
        }
        if (g.contains("edge_km")) {
            km = get<double>(g["edge_km"], "grid.edge_km");
        }
    }
    std::vector<GridPoint> users = GridNetwork::example().users();
    if (j.contains("users")) {
        users.clear();
        const Json& u = j["users"];
        if (!u.is_array()) {
            throw ConfigError("users: expected a list of [x, y] cells");
        }
        for (size_t i = 0; i < u.size(); ++i) {
            const std::string at = "users[" + std::to_string(i) + "]";
            if (!u[i].is_array() || u[i].size() != 2) {
                throw ConfigError(at + ": expected [x, y]");
            }
            users.push_back({static_cast<int>(get_count(u[i][0], at)),
                             static_cast<int>(get_count(u[i][1], at))});
        }
    }
    unsigned d = 2;
    if (j.contains("D")) {
        d = static_cast<unsigned>(get_count(j["D"], "D"));
    }
    try {
        return GridNetwork(width, height, km, users, d);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("network: ") + e.what());
    }
}

}  // namespace

Json to_json(const QubitGraph& g) {
    Json qubits = Json::array();
    for (QubitId q : g.qubits()) {
        qubits.push_back({{"id", q}, {"owner", g.owner(q)}});
    }
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back(Json::array({a, b}));
    }
    return {{"qubits", qubits}, {"edges", edges}};
}

QubitGraph qubit_graph_from_json(const Json& j) {
    check_keys(j, {"qubits", "edges"}, "state");
    QubitGraph g;
    if (!j.contains("qubits") || !j["qubits"].is_array()) {
        throw ConfigError("state.qubits: expected a list");
    }
    for (const auto& q : j["qubits"]) {
        check_keys(q, {"id", "owner"}, "state.qubits");
        if (!q.contains("id") || !q.contains("owner")) {
            throw ConfigError("state.qubits: every qubit needs id and owner");
        }
        try {
            g.add_qubit_with_id(static_cast<QubitId>(get_count(q["id"], "state.qubits.id")),
                                static_cast<UserId>(get_count(q["owner"], "state.qubits.owner")));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("state.qubits: ") + e.what());
        }
    }
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) {
                throw ConfigError("state.edges: expected [a, b]");
            }
            try {
                g.add_edge(static_cast<QubitId>(get_count(e[0], "state.edges")),
                           static_cast<QubitId>(get_count(e[1], "state.edges")));
            } catch (const std::logic_error& err) {
                throw ConfigError(std::string("state.edges: ") + err.what());
            }
        }
    }
    return g;
}

Json to_json(const TaskSet& ts) {
    Json tasks = Json::array();
    for (const auto& t : ts.tasks) {
        tasks.push_back(graph_edges(t));
    }
    return {{"n_users", ts.n_users}, {"tasks", tasks}};
}

TaskSet task_set_from_json(const Json& j, std::optional<size_t> n_users) {
    const Json* list = &j;
    if (j.is_object()) {
        check_keys(j, {"n_users", "tasks"}, "task set");
        if (!j.contains("n_users") || !j.contains("tasks")) {
            throw ConfigError("task set: needs n_users and tasks");
        }
        n_users = get_count(j["n_users"], "n_users");
        list = &j["tasks"];
    }
    if (!list->is_array()) {
        throw ConfigError("tasks: expected a list of tasks");
    }
    if (!n_users.has_value()) {
        throw ConfigError("tasks: the number of users is unknown");
    }
    TaskSet ts{*n_users, {}};
    for (size_t k = 0; k < list->size(); ++k) {
        ts.tasks.push_back(
            user_graph_from_json((*list)[k], *n_users, "tasks[" + std::to_string(k) + "]"));
    }
    try {
        validate(ts);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return ts;
}

Json to_json(const ResourcePlan& plan) {
    Json sed = Json::array();
    for (const auto& c : plan.sed_choice) {
        sed.push_back(c ? pair_json(*c) : Json(nullptr));
    }
    Json paths = Json::array();
    for (const auto& [p, route] : plan.ec_paths) {
        paths.push_back({{"pair", pair_json(p)}, {"path", route}});
    }
    Json transformed = Json::array();
    for (const auto& t : plan.transformed_tasks) {
        transformed.push_back(graph_edges(t));
    }
    return {{"n_users", plan.n_users},
            {"setting", to_string(plan.setting)},
            {"q_pre", plan.q_pre},
            {"q", q_count(plan)},
            {"state", to_json(plan.state)},
            {"sed_choice", sed},
            {"ec_paths", paths},
            {"transformed_tasks", transformed},
            {"infeasible_tasks", plan.infeasible_tasks}};
}

ResourcePlan plan_from_json(const Json& j) {
    check_keys(j,
               {"n_users", "setting", "q_pre", "q", "state", "sed_choice", "ec_paths",
                "transformed_tasks", "infeasible_tasks"},
               "plan");
    for (const char* key : {"n_users", "setting", "state", "sed_choice", "transformed_tasks"}) {
        if (!j.contains(key)) {
            throw ConfigError(std::string("plan: missing '") + key + "'");
        }
    }
    ResourcePlan plan;
    plan.n_users = get_count(j["n_users"], "plan.n_users");
    try {
        plan.setting = parse_setting(get<std::string>(j["setting"], "plan.setting"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("plan.setting: ") + e.what());
    }
    plan.state = qubit_graph_from_json(j["state"]);
    for (QubitId q : plan.state.qubits()) {
        if (plan.state.owner(q) >= plan.n_users) {
            throw ConfigError("plan.state: qubit " + std::to_string(q) + " has an unknown owner");
        }
    }
    for (const auto& c : j["sed_choice"]) {
        plan.sed_choice.push_back(c.is_null() ? std::nullopt
                                              : std::optional(pair_from_json(c, "plan.sed_choice")));
    }
    if (j.contains("ec_paths")) {
        for (const auto& e : j["ec_paths"]) {
            check_keys(e, {"pair", "path"}, "plan.ec_paths");
            plan.ec_paths.emplace(pair_from_json(e.at("pair"), "plan.ec_paths.pair"),
                                  get<std::vector<UserId>>(e.at("path"), "plan.ec_paths.path"));
        }
    }
    const Json& tt = j["transformed_tasks"];
    for (size_t k = 0; k < tt.size(); ++k) {
        plan.transformed_tasks.push_back(user_graph_from_json(
            tt[k], plan.n_users, "plan.transformed_tasks[" + std::to_string(k) + "]"));
    }
    if (j.contains("infeasible_tasks")) {
        plan.infeasible_tasks =
            get<std::set<size_t>>(j["infeasible_tasks"], "plan.infeasible_tasks");
    }
    plan.q_pre = j.contains("q_pre") ? get_count(j["q_pre"], "plan.q_pre") : plan.state.size();
    if (j.contains("q") && get_count(j["q"], "plan.q") != plan.state.size()) {
        throw ConfigError("plan.q does not match the state's qubit count");
    }
    return plan;
}

Json to_json(const Schedule& s) {
    Json pairs = Json::array();
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        pairs.push_back({{"pair", pair_json(s.pairs[i])}, {"path", s.pair_paths[i]}});
    }
    Json ops = Json::array();
    for (const auto& op : s.ops) {
        Json o = {{"op", to_string(op.kind)}, {"qubit", op.target}};
        if (op.other) {
            o[op.kind == RewriteKind::kMerge ? "partner" : "helper"] = *op.other;
        }
        ops.push_back(o);
    }
    return {{"sed_pair", s.sed_pair ? pair_json(*s.sed_pair) : Json(nullptr)},
            {"paths", pairs},
            {"ops", ops}};
}

Json to_json(const GridNetwork& net) {
    Json users = Json::array();
    for (const auto& u : net.users()) {
        users.push_back(Json::array({u.x, u.y}));
    }
    return {{"grid", {{"width", net.width()}, {"height", net.height()}, {"edge_km", net.edge_length_km()}}},
            {"users", users},
            {"D", net.threshold()}};
}

Json to_json(const std::vector<SummaryRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back({{"sweep", r.sweep_value},
                       {"setting", to_string(r.setting)},
                       {"trials", r.trials},
                       {"q_pre_sum", r.q_pre_sum},
                       {"q_post_sum", r.q_post_sum},
                       {"q_pre_mean", r.mean_q_pre()},
                       {"q_post_mean", r.mean_q_post()},
                       {"q_post_min", r.q_post_min},
                       {"q_post_max", r.q_post_max},
                       {"tasks_failed", r.tasks_failed},
                       {"sets_failed", r.sets_failed}});
    }
    return out;
}

ScenarioConfig parse_config(const Json& j) {
    check_keys(j,
               {"$schema", "grid", "users", "D", "tasks", "generator", "settings", "sweep",
                "threads", "output"},
               "config");
    ScenarioConfig cfg;
    cfg.net = network_from_config(j);
    if (j.contains("tasks")) {
        cfg.tasks = task_set_from_json(j["tasks"], cfg.net.n_users());
    }
    if (j.contains("generator")) {
        const Json& g = j["generator"];
        check_keys(g, {"n_tasks", "p", "seed"}, "generator");
        if (g.contains("n_tasks")) {
            cfg.n_tasks = get_count(g["n_tasks"], "generator.n_tasks");
        }
        if (g.contains("p")) {
            cfg.p = get<double>(g["p"], "generator.p");
            if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
                throw ConfigError("generator.p: must lie in [0, 1]");
            }
        }
        if (g.contains("seed")) {
            cfg.seed = get_count(g["seed"], "generator.seed");
        }
    }
    if (j.contains("settings")) {
        cfg.settings.clear();
        for (const auto& s : j["settings"]) {
            try {
                cfg.settings.push_back(parse_setting(get<std::string>(s, "settings")));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("settings: ") + e.what());
            }
        }
        if (cfg.settings.empty()) {
            throw ConfigError("settings: at least one setting is required");
        }
    }
    if (j.contains("sweep")) {
        const Json& s = j["sweep"];
        check_keys(s, {"kind", "values", "trials"}, "sweep");
        if (!s.contains("kind") || !s.contains("values")) {
            throw ConfigError("sweep: needs kind and values");
        }
        try {
            cfg.sweep = parse_sweep_kind(get<std::string>(s["kind"], "sweep.kind"));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("sweep.kind: ") + e.what());
        }
        if (!s["values"].is_array() || s["values"].empty()) {
            throw ConfigError("sweep.values: expected a nonempty list");
        }
        for (const auto& v : s["values"]) {
            cfg.sweep_values.push_back(get_count(v, "sweep.values"));
        }
        if (s.contains("trials")) {
            cfg.trials = get_count(s["trials"], "sweep.trials");
            if (cfg.trials == 0) {
                throw ConfigError("sweep.trials: must be at least 1");
            }
        }
    }
    if (j.contains("threads")) {
        cfg.threads = static_cast<unsigned>(get_count(j["threads"], "threads"));
    }
    if (j.contains("output")) {
        const Json& o = j["output"];
        check_keys(o, {"csv", "summary"}, "output");
        if (o.contains("csv")) {
            cfg.csv_path = get<std::string>(o["csv"], "output.csv");
        }
        if (o.contains("summary")) {
            cfg.summary_path = get<std::string>(o["summary"], "output.summary");
        }
    }
    return cfg;
}

Scenario to_scenario(const ScenarioConfig& cfg, std::optional<uint64_t> seed) {
    Scenario sc;
    sc.net = cfg.net;
    sc.sweep = cfg.sweep.value_or(SweepKind::kTaskDraws);
    sc.sweep_values = cfg.sweep_values.empty() ? std::vector<uint64_t>{1} : cfg.sweep_values;
    sc.trials_per_point = cfg.sweep ? cfg.trials : 1;
    sc.p = cfg.p;
    sc.n_tasks = cfg.n_tasks;
    sc.fixed_tasks = cfg.tasks;
    sc.settings = cfg.settings;
    sc.master_seed = seed.value_or(cfg.seed.value_or(0));
    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return sc;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace entplan
