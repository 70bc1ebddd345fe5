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

#include "entplan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "entplan/checker.hpp"

namespace entplan {

namespace {

std::vector<GridPoint> all_cells(const GridNetwork& net) {
    std::vector<GridPoint> cells;
    for (int y = 0; y < net.height(); ++y) {
        for (int x = 0; x < net.width(); ++x) {
            cells.push_back({x, y});
        }
    }
    return cells;
}

size_t users_at_point(const Scenario& sc, size_t sweep_index) {
    if (sc.sweep == SweepKind::kNUsers) {
        return static_cast<size_t>(sc.sweep_values[sweep_index]);
    }
    return sc.net.n_users();
}

size_t tasks_at_point(const Scenario& sc, size_t sweep_index) {
    if (sc.sweep == SweepKind::kNTasks) {
        return static_cast<size_t>(sc.sweep_values[sweep_index]);
    }
    return sc.n_tasks.value_or(users_at_point(sc, sweep_index) - 1);
}

}  // namespace

std::string to_string(SweepKind k) {
    switch (k) {
        case SweepKind::kTaskDraws:
            return "task_draws";
        case SweepKind::kPositions:
            return "positions";
        case SweepKind::kNUsers:
            return "n_users";
        case SweepKind::kNTasks:
            return "n_tasks";
    }
    return "?";
}

SweepKind parse_sweep_kind(std::string_view text) {
    for (SweepKind k :
         {SweepKind::kTaskDraws, SweepKind::kPositions, SweepKind::kNUsers, SweepKind::kNTasks}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown sweep kind '" + std::string(text) + "'");
}

void Scenario::validate() const {
    if (sweep_values.empty()) {
        throw std::invalid_argument("sweep needs at least one value");
    }
    if (trials_per_point == 0) {
        throw std::invalid_argument("trials_per_point must be at least 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("task probability must lie in [0, 1]");
    }
    if (settings.empty()) {
        throw std::invalid_argument("at least one setting is required");
    }
    const uint64_t cells = static_cast<uint64_t>(net.width()) * static_cast<uint64_t>(net.height());
    if (sweep == SweepKind::kNUsers) {
        for (uint64_t n : sweep_values) {
            if (n < 2 || n > cells) {
                throw std::invalid_argument("user count " + std::to_string(n) +
                                            " does not fit the grid");
            }
        }
    }
    if (fixed_tasks.has_value()) {
        if (sweep == SweepKind::kNUsers || sweep == SweepKind::kNTasks) {
            throw std::invalid_argument("a fixed task set cannot be combined with a " +
                                        to_string(sweep) + " sweep");
        }
        if (fixed_tasks->n_users != net.n_users()) {
            throw std::invalid_argument("fixed task set and network disagree on the user count");
        }
        entplan::validate(*fixed_tasks);
    }
}

uint64_t trial_seed(uint64_t master_seed, size_t sweep_index, size_t trial) {
    return derive_seed(master_seed, {sweep_index, trial});
}

GridNetwork network_for_point(const Scenario& sc, size_t sweep_index) {
    const GridNetwork& base = sc.net;
    switch (sc.sweep) {
        case SweepKind::kTaskDraws:
        case SweepKind::kNTasks:
            return base;
        case SweepKind::kPositions: {
            Rng rng(derive_seed(sc.master_seed, {stream_tag("positions"), sweep_index}));
            auto cells = all_cells(base);
            rng.shuffle(std::span<GridPoint>(cells));
            cells.resize(base.n_users());
            return GridNetwork(base.width(), base.height(), base.edge_length_km(), cells,
                               base.threshold());
        }
        case SweepKind::kNUsers: {
            const size_t n = users_at_point(sc, sweep_index);
            std::vector<GridPoint> users = base.users();
            if (n <= users.size()) {
                users.resize(n);
            } else {
                // One fixed order of the free cells, so every larger network
                // extends the smaller ones.
                Rng rng(derive_seed(sc.master_seed, {stream_tag("n_users")}));
                std::vector<GridPoint> free;
                for (const auto& c : all_cells(base)) {
                    if (std::find(users.begin(), users.end(), c) == users.end()) {
                        free.push_back(c);
                    }
                }
                rng.shuffle(std::span<GridPoint>(free));
                users.insert(users.end(), free.begin(),
                             free.begin() + static_cast<std::ptrdiff_t>(n - users.size()));
            }
            return GridNetwork(base.width(), base.height(), base.edge_length_km(), users,
                               base.threshold());
        }
    }
    throw std::invalid_argument("unknown sweep kind");
}

TaskSet tasks_for_trial(const Scenario& sc, size_t sweep_index, size_t trial) {
    if (sc.fixed_tasks.has_value()) {
        return *sc.fixed_tasks;
    }
    Rng rng(derive_seed(trial_seed(sc.master_seed, sweep_index, trial), {stream_tag("tasks")}));
    return generate_tasks(users_at_point(sc, sweep_index), tasks_at_point(sc, sweep_index), sc.p,
                          rng);
}

std::vector<ExperimentRecord> run_trial(const Scenario& sc, size_t sweep_index, size_t trial) {
    const uint64_t seed = trial_seed(sc.master_seed, sweep_index, trial);
    const GridNetwork net = network_for_point(sc, sweep_index);
    const TaskSet ts = tasks_for_trial(sc, sweep_index, trial);
    std::vector<ExperimentRecord> out;
    for (Setting s : sc.settings) {
        // Every setting sees the same plan stream, so SED and SED_EC pick the
        // same satellite pairs.
        Rng rng(derive_seed(seed, {stream_tag("plan")}));
        const ResourcePlan built = build(s, ts, net, rng);
        const ResourcePlan merged = merge_preserving_tasks(built, ts);
        const SuccessReport report = network_success(merged, ts);
        ExperimentRecord r;
        r.sweep_index = sweep_index;
        r.sweep_value = sc.sweep_values[sweep_index];
        r.trial = trial;
        r.setting = s;
        r.q_pre = built.q_pre;
        r.q_post = q_count(merged);
        r.tasks_total = ts.size();
        r.tasks_failed = report.failures;
        r.set_failed = report.failures > 0;
        r.seed = seed;
        out.push_back(r);
    }
    return out;
}

std::vector<ExperimentRecord> run_scenario(const Scenario& sc, unsigned threads) {
    sc.validate();
    const size_t points = sc.sweep_values.size();
    const size_t jobs = points * sc.trials_per_point;
    std::vector<std::vector<ExperimentRecord>> results(jobs);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<size_t>(threads, jobs));

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (size_t j = next++; j < jobs; j = next++) {
            try {
                results[j] = run_trial(sc, j / sc.trials_per_point, j % sc.trials_per_point);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<ExperimentRecord> out;
    out.reserve(jobs * sc.settings.size());
    for (auto& r : results) {
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("cannot summarize an empty record list");
    }
    std::vector<SummaryRow> rows;
    std::map<std::pair<size_t, Setting>, size_t> index;
    for (const auto& r : records) {
        auto [it, fresh] = index.try_emplace({r.sweep_index, r.setting}, rows.size());
        if (fresh) {
            SummaryRow row;
            row.sweep_value = r.sweep_value;
            row.setting = r.setting;
            row.q_post_min = r.q_post;
            row.q_post_max = r.q_post;
            rows.push_back(row);
        }
        SummaryRow& row = rows[it->second];
        ++row.trials;
        row.q_pre_sum += r.q_pre;
        row.q_post_sum += r.q_post;
        row.q_post_min = std::min(row.q_post_min, r.q_post);
        row.q_post_max = std::max(row.q_post_max, r.q_post);
        row.tasks_failed += r.tasks_failed;
        row.sets_failed += r.set_failed ? 1 : 0;
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.sweep_value << ',' << r.trial << ',' << to_string(r.setting) << ',' << r.q_pre
            << ',' << r.q_post << ',' << r.tasks_total << ',' << r.tasks_failed << ','
            << (r.set_failed ? 1 : 0) << ',' << r.seed << '\n';
    }
}

}  // namespace entplan
