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

#include "entplan/planner.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace entplan {

namespace {

// One chain of EPR pairs along a user route. A direct pair is a two-user route.
using Route = std::vector<UserId>;

void add_chain(QubitGraph& g, const Route& route) {
    QubitId prev = g.add_qubit(route.front());
    for (size_t i = 1; i < route.size(); ++i) {
        QubitId in = g.add_qubit(route[i]);
        g.add_edge(prev, in);
        if (i + 1 < route.size()) {
            prev = g.add_qubit(route[i]);
        }
    }
}

ResourcePlan empty_plan(const TaskSet& ts, Setting setting) {
    validate(ts);
    ResourcePlan plan;
    plan.n_users = ts.n_users;
    plan.setting = setting;
    plan.sed_choice.assign(ts.size(), std::nullopt);
    return plan;
}

// Removes a longest pair from each nonempty task; records the choice.
std::vector<UserGraph> remove_longest(const TaskSet& ts, const GridNetwork& net, Rng& rng,
                                      std::vector<std::optional<UserPair>>& choice) {
    std::vector<UserGraph> out;
    out.reserve(ts.size());
    for (size_t k = 0; k < ts.size(); ++k) {
        UserGraph t = ts.tasks[k];
        if (t.empty()) {
            out.push_back(std::move(t));
            continue;
        }
        unsigned best = 0;
        std::vector<UserPair> longest;
        for (const auto& [p, w] : t.edges()) {
            const unsigned d = user_distance(net, p.lo, p.hi);
            if (longest.empty() || d > best) {
                best = d;
                longest.clear();
            }
            if (d == best) {
                longest.push_back(p);
            }
        }
        const UserPair pick = longest.size() == 1 ? longest.front()
                                                  : longest[rng.uniform_index(longest.size())];
        t.remove_edge(pick);
        choice[k] = pick;
        out.push_back(std::move(t));
    }
    return out;
}

void build_direct(ResourcePlan& plan, const std::vector<UserGraph>& tasks) {
    const AdjMatrix u = union_adjacency(plan.n_users, tasks);
    for (const auto& p : u.support()) {
        for (uint64_t m = 0; m < u.at(p); ++m) {
            add_chain(plan.state, {p.lo, p.hi});
        }
    }
    plan.transformed_tasks = tasks;
    plan.q_pre = plan.state.size();
}

void build_routed(ResourcePlan& plan, const std::vector<UserGraph>& base, const GridNetwork& net,
                  Rng& rng) {
    if (net.n_users() != plan.n_users) {
        throw std::invalid_argument("network has " + std::to_string(net.n_users()) +
                                    " users but the task set has " +
                                    std::to_string(plan.n_users));
    }
    // Route every long pair once, in lexicographic order, and share the route
    // across all tasks that request the pair.
    std::set<UserPair> unroutable;
    for (const auto& p : union_adjacency(plan.n_users, base).support()) {
        if (edge_allowed(net, p.lo, p.hi)) {
            continue;
        }
        if (auto path = constrained_path(net, p.lo, p.hi, rng)) {
            plan.ec_paths.emplace(p, std::move(*path));
        } else {
            unroutable.insert(p);
        }
    }

    std::vector<UserGraph> feasible_base;
    plan.transformed_tasks.clear();
    for (size_t k = 0; k < base.size(); ++k) {
        UserGraph t(plan.n_users);
        bool feasible = true;
        for (const auto& [p, w] : base[k].edges()) {
            if (unroutable.contains(p)) {
                feasible = false;
                break;
            }
            auto it = plan.ec_paths.find(p);
            if (it == plan.ec_paths.end()) {
                t.add_edge(p, w);
                continue;
            }
            const Route& r = it->second;
            for (size_t i = 0; i + 1 < r.size(); ++i) {
                t.add_edge(r[i], r[i + 1], w);
            }
        }
        if (feasible) {
            plan.transformed_tasks.push_back(std::move(t));
            feasible_base.push_back(base[k]);
        } else {
            plan.transformed_tasks.emplace_back(plan.n_users);
            plan.infeasible_tasks.insert(k);
        }
    }

    const AdjMatrix u = union_adjacency(plan.n_users, feasible_base);
    for (const auto& p : u.support()) {
        auto it = plan.ec_paths.find(p);
        const Route route = it == plan.ec_paths.end() ? Route{p.lo, p.hi} : it->second;
        for (uint64_t m = 0; m < u.at(p); ++m) {
            add_chain(plan.state, route);
        }
    }
    plan.q_pre = plan.state.size();
}

}  // namespace

std::string to_string(Setting s) {
    switch (s) {
        case Setting::kBM:
            return "BM";
        case Setting::kSED:
            return "SED";
        case Setting::kEC:
            return "EC";
        case Setting::kSedEc:
            return "SED_EC";
    }
    return "?";
}

Setting parse_setting(std::string_view text) {
    std::string upper(text);
    for (auto& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (Setting s : kAllSettings) {
        if (to_string(s) == upper) {
            return s;
        }
    }
    throw std::invalid_argument("unknown setting '" + std::string(text) +
                                "' (expected bm, sed, ec or sed_ec)");
}

bool uses_sed(Setting s) {
    return s == Setting::kSED || s == Setting::kSedEc;
}

bool uses_ec(Setting s) {
    return s == Setting::kEC || s == Setting::kSedEc;
}

size_t q_count(const QubitGraph& state) {
    return state.size();
}

size_t q_count(const ResourcePlan& plan) {
    return plan.state.size();
}

ResourcePlan build_bm(const TaskSet& ts) {
    ResourcePlan plan = empty_plan(ts, Setting::kBM);
    build_direct(plan, ts.tasks);
    return plan;
}

ResourcePlan build_sed(const TaskSet& ts, const GridNetwork& net, Rng& rng) {
    ResourcePlan plan = empty_plan(ts, Setting::kSED);
    Rng sed_rng = rng.fork("sed");
    build_direct(plan, remove_longest(ts, net, sed_rng, plan.sed_choice));
    return plan;
}

ResourcePlan build_ec(const TaskSet& ts, const GridNetwork& net, Rng& rng) {
    ResourcePlan plan = empty_plan(ts, Setting::kEC);
    Rng path_rng = rng.fork("ec");
    build_routed(plan, ts.tasks, net, path_rng);
    return plan;
}

ResourcePlan build_sed_ec(const TaskSet& ts, const GridNetwork& net, Rng& rng) {
    ResourcePlan plan = empty_plan(ts, Setting::kSedEc);
    Rng sed_rng = rng.fork("sed");
    Rng path_rng = rng.fork("ec");
    const auto reduced = remove_longest(ts, net, sed_rng, plan.sed_choice);
    build_routed(plan, reduced, net, path_rng);
    return plan;
}

ResourcePlan build(Setting setting, const TaskSet& ts, const GridNetwork& net, Rng& rng) {
    switch (setting) {
        case Setting::kBM:
            return build_bm(ts);
        case Setting::kSED:
            return build_sed(ts, net, rng);
        case Setting::kEC:
            return build_ec(ts, net, rng);
        case Setting::kSedEc:
            return build_sed_ec(ts, net, rng);
    }
    throw std::invalid_argument("unknown setting");
}

size_t intermediate_slots(const ResourcePlan& plan) {
    size_t slots = 0;
    for (const auto& [p, route] : plan.ec_paths) {
        slots += route.size() - 2;
    }
    return slots;
}

namespace {

std::set<QubitId> joint_neighbors(const QubitGraph& g, QubitId a, QubitId b) {
    std::set<QubitId> n = g.neighbors(a);
    n.insert(g.neighbors(b).begin(), g.neighbors(b).end());
    n.erase(a);
    n.erase(b);
    return n;
}

// User pairs of the edges incident to a or b, or nullopt if one of them joins
// two qubits of the same user.
std::optional<std::set<UserPair>> incident_pairs(const QubitGraph& g, QubitId a, QubitId b) {
    std::set<UserPair> out;
    for (QubitId q : {a, b}) {
        for (QubitId x : g.neighbors(q)) {
            if (g.owner(x) == g.owner(q)) {
                return std::nullopt;
            }
            out.emplace(g.owner(q), g.owner(x));
        }
    }
    return out;
}

bool all_unit(const AdjMatrix& s, const std::set<UserPair>& pairs) {
    return std::all_of(pairs.begin(), pairs.end(), [&](const UserPair& p) { return s.at(p) == 1; });
}

}  // namespace

ResourcePlan merging_algorithm(const ResourcePlan& plan, const MergeOptions& opts) {
    ResourcePlan out = plan;
    QubitGraph& g = out.state;
    const AdjMatrix s = simultaneous_adjacency(out.n_users, out.transformed_tasks);

    auto try_pair = [&](UserId user, QubitId i1, QubitId i2) -> bool {
        // A shared neighbor would lose its edge: the two CZ phases cancel.
        const auto& n1 = g.neighbors(i1);
        for (QubitId x : g.neighbors(i2)) {
            if (n1.contains(x)) {
                return false;
            }
        }
        const auto pairs = incident_pairs(g, i1, i2);
        if (!pairs) {
            return false;
        }
        std::optional<MergeCriterion> why;
        if (all_unit(s, *pairs)) {
            why = MergeCriterion::kUnitSimultaneous;
        } else {
            std::set<UserPair> window;
            for (QubitId q : joint_neighbors(g, i1, i2)) {
                for (QubitId x : g.neighbors(q)) {
                    if (g.owner(x) != g.owner(q)) {
                        window.emplace(g.owner(q), g.owner(x));
                    }
                }
            }
            if (all_unit(restricted_simultaneous(out.n_users, out.transformed_tasks, window),
                         *pairs)) {
                why = MergeCriterion::kRestrictedSimultaneous;
            }
        }
        if (!why) {
            return false;
        }
        if (opts.accept) {
            QubitGraph trial = g;
            trial.merge_in_place(i1, i2);
            if (!opts.accept(trial, i1, i2)) {
                return false;
            }
            g = std::move(trial);
        } else {
            g.merge_in_place(i1, i2);
        }
        if (opts.trace != nullptr) {
            opts.trace->push_back({user, i1, i2, *why});
        }
        return true;
    };

    bool merged = true;
    while (merged) {
        merged = false;
        for (UserId user = 0; user < out.n_users && !merged; ++user) {
            const auto qs = g.qubits_of(user);
            for (size_t a = 0; a < qs.size() && !merged; ++a) {
                for (size_t b = a + 1; b < qs.size() && !merged; ++b) {
                    merged = try_pair(user, qs[a], qs[b]);
                }
            }
        }
    }
    return out;
}

}  // namespace entplan
