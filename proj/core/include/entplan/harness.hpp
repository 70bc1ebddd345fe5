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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "entplan/planner.hpp"
#include "entplan/taskgen.hpp"
#include "entplan/topology.hpp"

namespace entplan {

enum class SweepKind { kTaskDraws, kPositions, kNUsers, kNTasks };

/// "task_draws", "positions", "n_users", "n_tasks".
std::string to_string(SweepKind k);
SweepKind parse_sweep_kind(std::string_view text);

struct Scenario {
    /// Grid, base placement and threshold D. Position sweeps draw fresh
    /// placements; user-count sweeps truncate or extend this one.
    GridNetwork net = GridNetwork::example(2);
    SweepKind sweep = SweepKind::kTaskDraws;
    /// Point labels. For n_users and n_tasks they are the swept quantity.
    std::vector<uint64_t> sweep_values{1};
    size_t trials_per_point = 20;
    double p = 0.8;
    /// Tasks per set; defaults to N - 1. Ignored by the n_tasks sweep.
    std::optional<size_t> n_tasks;
    /// When set, every trial uses these tasks instead of drawing new ones.
    std::optional<TaskSet> fixed_tasks;
    std::vector<Setting> settings{std::begin(kAllSettings), std::end(kAllSettings)};
    uint64_t master_seed = 0;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

struct ExperimentRecord {
    size_t sweep_index = 0;
    uint64_t sweep_value = 0;
    size_t trial = 0;
    Setting setting = Setting::kBM;
    size_t q_pre = 0;
    size_t q_post = 0;
    size_t tasks_total = 0;
    size_t tasks_failed = 0;
    bool set_failed = false;
    uint64_t seed = 0;

    bool operator==(const ExperimentRecord&) const = default;
};

/// Seed of one trial: a hash of the master seed, sweep index and trial index.
uint64_t trial_seed(uint64_t master_seed, size_t sweep_index, size_t trial);

/// Network used at one sweep point.
GridNetwork network_for_point(const Scenario& sc, size_t sweep_index);

/// Task set of one trial at one sweep point.
TaskSet tasks_for_trial(const Scenario& sc, size_t sweep_index, size_t trial);

/// Builds, merges and checks every setting of one trial.
std::vector<ExperimentRecord> run_trial(const Scenario& sc, size_t sweep_index, size_t trial);

/// Runs every (sweep point, trial) on `threads` workers (0 = hardware
/// concurrency). Records come back ordered by sweep index, trial and the
/// scenario's setting order, independent of scheduling.
std::vector<ExperimentRecord> run_scenario(const Scenario& sc, unsigned threads = 1);

struct SummaryRow {
    uint64_t sweep_value = 0;
    Setting setting = Setting::kBM;
    size_t trials = 0;
    uint64_t q_pre_sum = 0;
    uint64_t q_post_sum = 0;
    size_t q_post_min = 0;
    size_t q_post_max = 0;
    uint64_t tasks_failed = 0;
    uint64_t sets_failed = 0;

    double mean_q_pre() const { return static_cast<double>(q_pre_sum) / static_cast<double>(trials); }
    double mean_q_post() const {
        return static_cast<double>(q_post_sum) / static_cast<double>(trials);
    }
};

/// One row per (sweep point, setting) in record order. Throws
/// std::invalid_argument on an empty input.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "sweep,trial,setting,q_pre,q_post,tasks_total,tasks_failed,set_failed,seed";

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace entplan
