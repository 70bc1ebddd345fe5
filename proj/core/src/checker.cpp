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

#include "entplan/checker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace entplan {

namespace {

class PathSearch {
  public:
    PathSearch(const QubitGraph& state, std::vector<UserPair> pairs, uint64_t budget)
        : state_(state), pairs_(std::move(pairs)), budget_(budget) {
        ids_ = state.qubits();
        for (size_t i = 0; i < ids_.size(); ++i) {
            index_.emplace(ids_[i], i);
        }
        adj_.resize(ids_.size());
        owner_.resize(ids_.size());
        for (size_t i = 0; i < ids_.size(); ++i) {
            owner_[i] = state.owner(ids_[i]);
            for (QubitId n : state.neighbors(ids_[i])) {
                adj_[i].push_back(index_.at(n));
            }
        }
        for (size_t i = 0; i < ids_.size(); ++i) {
            by_owner_[owner_[i]].push_back(i);
        }
        used_.assign(ids_.size(), false);
    }

    std::optional<Schedule> run(std::optional<UserPair> sed_pair) {
        sed_pair_ = sed_pair;
        chosen_.clear();
        if (solve(0)) {
            return result_;
        }
        return std::nullopt;
    }

  private:
    bool exhausted() const { return nodes_ > budget_; }

    // Chooses a path for pairs_[k] and recurses; shortest candidates first.
    bool solve(size_t k) {
        if (k == pairs_.size()) {
            return finish();
        }
        size_t free = 0;
        for (bool u : used_) {
            free += u ? 0 : 1;
        }
        const UserPair p = pairs_[k];
        auto starts = by_owner_.find(p.lo);
        if (starts == by_owner_.end() || !by_owner_.contains(p.hi)) {
            return false;
        }
        const std::vector<size_t> saved_dist = std::move(dist_);
        dist_ = moves_to(p.hi);
        for (size_t len = 2; len <= free && !exhausted(); ++len) {
            for (size_t s : starts->second) {
                if (used_[s] || touches_used(s, s)) {
                    continue;
                }
                path_.assign(1, s);
                path_owners_.assign(1, p.lo);
                mark(s, true);
                const bool ok = extend(k, len, false);
                mark(s, false);
                if (ok) {
                    return true;
                }
                if (exhausted()) {
                    break;
                }
            }
            if (exhausted()) {
                break;
            }
        }
        dist_ = saved_dist;
        return false;
    }

    // Fewest moves (edges or same-owner links) from each qubit to a qubit of
    // `target`, ignoring which qubits are in use. A lower bound for pruning.
    std::vector<size_t> moves_to(UserId target) const {
        const size_t inf = ids_.size() + 1;
        std::vector<size_t> d(ids_.size(), inf);
        std::vector<size_t> queue;
        for (size_t q : by_owner_.at(target)) {
            d[q] = 0;
            queue.push_back(q);
        }
        for (size_t head = 0; head < queue.size(); ++head) {
            const size_t q = queue[head];
            auto relax = [&](size_t x) {
                if (d[x] == inf) {
                    d[x] = d[q] + 1;
                    queue.push_back(x);
                }
            };
            for (size_t x : adj_[q]) {
                relax(x);
            }
            for (size_t x : by_owner_.at(owner_[q])) {
                relax(x);
            }
        }
        return d;
    }

    void mark(size_t q, bool on) { used_[q] = on; }

    // q must not be adjacent to a qubit of an already chosen path.
    bool touches_used(size_t q, size_t allowed) const {
        for (size_t n : adj_[q]) {
            if (used_[n] && n != allowed) {
                return true;
            }
        }
        return false;
    }

    bool extend(size_t k, size_t len, bool entered_by_link) {
        ++nodes_;
        if (exhausted()) {
            return false;
        }
        const UserPair p = pairs_[k];
        const size_t cur = path_.back();
        if (path_.size() == len) {
            return false;
        }
        const bool last_slot = path_.size() + 1 == len;

        // Edge moves.
        for (size_t x : adj_[cur]) {
            const UserId ox = owner_[x];
            if (used_[x] || ox == p.lo ||
                std::find(path_owners_.begin(), path_owners_.end(), ox) != path_owners_.end()) {
                continue;
            }
            if (last_slot != (ox == p.hi)) {
                continue;
            }
            if (path_.size() + 1 + dist_[x] > len || touches_used(x, cur)) {
                continue;
            }
            if (take(k, len, x, false)) {
                return true;
            }
        }
        // Link to another qubit of the same intermediate user.
        if (!entered_by_link && path_.size() > 1 && !last_slot) {
            for (size_t x : by_owner_.at(owner_[cur])) {
                if (used_[x] || path_.size() + 1 + dist_[x] > len ||
                    touches_used(x, ids_.size())) {
                    continue;
                }
                if (take(k, len, x, true)) {
                    return true;
                }
            }
        }
        return false;
    }

    bool take(size_t k, size_t len, size_t x, bool link) {
        path_.push_back(x);
        if (!link) {
            path_owners_.push_back(owner_[x]);
        }
        mark(x, true);
        bool ok;
        if (path_.size() == len) {
            chosen_.push_back(path_);
            auto saved_path = path_;
            auto saved_owners = path_owners_;
            ok = solve(k + 1);
            path_ = std::move(saved_path);
            path_owners_ = std::move(saved_owners);
            chosen_.pop_back();
        } else {
            ok = extend(k, len, link);
        }
        mark(x, false);
        path_.pop_back();
        if (!link) {
            path_owners_.pop_back();
        }
        return ok;
    }

    bool finish() {
        Schedule s;
        s.sed_pair = sed_pair_;
        s.pairs = pairs_;
        for (const auto& path : chosen_) {
            std::vector<QubitId> ids;
            for (size_t q : path) {
                ids.push_back(ids_[q]);
            }
            s.pair_paths.push_back(std::move(ids));
        }
        for (size_t q = 0; q < ids_.size(); ++q) {
            if (!used_[q]) {
                s.ops.push_back(Rewrite::z(ids_[q]));
            }
        }
        std::vector<std::vector<QubitId>> collapsed;
        for (const auto& path : s.pair_paths) {
            std::vector<QubitId> kept{path.front()};
            for (size_t i = 1; i < path.size(); ++i) {
                if (state_.owner(path[i]) == state_.owner(kept.back())) {
                    s.ops.push_back(Rewrite::merge(kept.back(), path[i]));
                } else {
                    kept.push_back(path[i]);
                }
            }
            collapsed.push_back(std::move(kept));
        }
        for (const auto& kept : collapsed) {
            for (size_t i = 1; i + 1 < kept.size(); ++i) {
                s.ops.push_back(Rewrite::x(kept[i], kept.front()));
            }
        }
        try {
            if (!is_task_graph(replay(state_, s), s.pairs)) {
                return false;
            }
        } catch (const std::invalid_argument&) {
            return false;
        }
        result_ = std::move(s);
        return true;
    }

    const QubitGraph& state_;
    std::vector<UserPair> pairs_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::optional<UserPair> sed_pair_;

    std::vector<QubitId> ids_;
    std::unordered_map<QubitId, size_t> index_;
    std::vector<std::vector<size_t>> adj_;
    std::vector<UserId> owner_;
    std::map<UserId, std::vector<size_t>> by_owner_;
    std::vector<bool> used_;

    std::vector<size_t> dist_;
    std::vector<size_t> path_;
    std::vector<UserId> path_owners_;
    std::vector<std::vector<size_t>> chosen_;
    Schedule result_;
};

std::string label(const QubitGraph& state, QubitId q) {
    const UserId u = state.owner(q);
    std::string out = std::to_string(u + 1);
    const auto mine = state.qubits_of(u);
    if (mine.size() > 1) {
        const auto pos = std::find(mine.begin(), mine.end(), q) - mine.begin();
        std::string suffix;
        for (auto i = pos;; i = i / 26 - 1) {
            suffix.insert(suffix.begin(), static_cast<char>('a' + i % 26));
            if (i < 26) {
                break;
            }
        }
        out += "_" + suffix;
    }
    return out;
}

std::string subscript(const std::string& s) {
    return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

std::optional<Schedule> satisfy(const QubitGraph& state, const Task& task,
                                std::optional<UserPair> sed_pair, const CheckOptions& opts) {
    std::vector<UserPair> pairs;
    for (const auto& [p, w] : task.edges()) {
        if (w != 1) {
            throw std::invalid_argument("task pair " + to_string(p) + " requested more than once");
        }
        if (sed_pair != p) {
            pairs.push_back(p);
        }
    }
    if (sed_pair.has_value() && !task.has_edge(*sed_pair)) {
        throw std::invalid_argument("satellite pair " + to_string(*sed_pair) +
                                    " is not part of the task");
    }
    PathSearch search(state, std::move(pairs), opts.node_budget);
    return search.run(sed_pair);
}

QubitGraph replay(const QubitGraph& state, const Schedule& schedule) {
    QubitGraph g = state;
    for (const auto& op : schedule.ops) {
        apply_in_place(g, op);
    }
    return g;
}

bool is_task_graph(const QubitGraph& g, const std::vector<UserPair>& pairs) {
    if (g.size() != 2 * pairs.size() || g.edge_count() != pairs.size()) {
        return false;
    }
    std::multiset<UserPair> want(pairs.begin(), pairs.end());
    for (const auto& [a, b] : g.edges()) {
        const UserId oa = g.owner(a);
        const UserId ob = g.owner(b);
        if (oa == ob) {
            return false;
        }
        auto it = want.find(UserPair(oa, ob));
        if (it == want.end()) {
            return false;
        }
        want.erase(it);
    }
    return want.empty();
}

std::string notation(const QubitGraph& state, const Schedule& schedule) {
    std::set<QubitId> relevant;
    for (const auto& path : schedule.pair_paths) {
        for (QubitId q : path) {
            if (!relevant.contains(q)) {
                const auto comp = state.component(q);
                relevant.insert(comp.begin(), comp.end());
            }
        }
    }
    std::vector<std::string> tokens;
    if (schedule.sed_pair) {
        tokens.push_back("S_{" + std::to_string(schedule.sed_pair->lo + 1) + "," +
                         std::to_string(schedule.sed_pair->hi + 1) + "}");
    }
    for (const auto& op : schedule.ops) {
        if (!relevant.contains(op.target)) {
            continue;
        }
        const std::string t = label(state, op.target);
        if (op.kind == RewriteKind::kMerge) {
            tokens.push_back("M_{" + t + "," + label(state, *op.other) + "}");
        } else {
            tokens.push_back(to_string(op.kind) + "_" + subscript(t));
        }
    }
    std::ostringstream out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        out << (i ? " " : "") << tokens[i];
    }
    return out.str();
}

SuccessReport network_success(const ResourcePlan& plan, const TaskSet& ts,
                              const CheckOptions& opts) {
    if (plan.sed_choice.size() != ts.size()) {
        throw std::invalid_argument("plan was built for " + std::to_string(plan.sed_choice.size()) +
                                    " tasks, got " + std::to_string(ts.size()));
    }
    SuccessReport report;
    for (size_t k = 0; k < ts.size(); ++k) {
        std::optional<Schedule> s;
        if (!plan.infeasible_tasks.contains(k)) {
            s = satisfy(plan.state, ts.tasks[k], plan.sed_choice[k], opts);
        }
        report.satisfied.push_back(s.has_value());
        report.failures += s.has_value() ? 0 : 1;
        report.schedules.push_back(std::move(s));
    }
    return report;
}

ResourcePlan merge_preserving_tasks(const ResourcePlan& plan, const TaskSet& ts,
                                    std::vector<MergeStep>* trace, const CheckOptions& opts) {
    const SuccessReport before = network_success(plan, ts, opts);
    // Qubits each satisfied task currently routes through.
    std::vector<std::optional<std::set<QubitId>>> routed(ts.size());
    auto route_of = [](const Schedule& s) {
        std::set<QubitId> out;
        for (const auto& path : s.pair_paths) {
            out.insert(path.begin(), path.end());
        }
        return out;
    };
    for (size_t k = 0; k < ts.size(); ++k) {
        if (before.schedules[k]) {
            routed[k] = route_of(*before.schedules[k]);
        }
    }
    MergeOptions mo;
    mo.trace = trace;
    mo.accept = [&](const QubitGraph& merged, QubitId kept, QubitId removed) {
        // Tasks routed through either qubit are the likely casualties, so they
        // go first. The rest keep a valid schedule in principle, but the search
        // is budgeted, so they are re-run too: the final state is then one on
        // which every kept task was found.
        std::vector<size_t> order;
        for (size_t k = 0; k < ts.size(); ++k) {
            if (routed[k] && (routed[k]->contains(kept) || routed[k]->contains(removed))) {
                order.push_back(k);
            }
        }
        for (size_t k = 0; k < ts.size(); ++k) {
            if (routed[k] && !routed[k]->contains(kept) && !routed[k]->contains(removed)) {
                order.push_back(k);
            }
        }
        std::vector<std::pair<size_t, std::set<QubitId>>> updates;
        for (size_t k : order) {
            auto s = satisfy(merged, ts.tasks[k], plan.sed_choice[k], opts);
            if (!s) {
                return false;
            }
            updates.emplace_back(k, route_of(*s));
        }
        for (auto& [k, r] : updates) {
            routed[k] = std::move(r);
        }
        return true;
    };
    return merging_algorithm(plan, mo);
}

}  // namespace entplan
