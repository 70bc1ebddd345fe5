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
#include <string>
#include <vector>

#include "entplan/graphstate.hpp"
#include "entplan/planner.hpp"
#include "entplan/taskgen.hpp"

namespace entplan {

/// LOCC recipe that turns a resource state into one task.
struct Schedule {
    std::optional<UserPair> sed_pair;
    /// Pairs the resource state must provide (the task minus sed_pair).
    std::vector<UserPair> pairs;
    /// For pairs[i], the qubits used from the first user to the second.
    /// Consecutive qubits are joined by an edge, or share an owner and are
    /// merged.
    std::vector<std::vector<QubitId>> pair_paths;
    std::vector<Rewrite> ops;

    bool operator==(const Schedule&) const = default;
};

struct CheckOptions {
    /// Search nodes explored before giving up on a task (reported unsatisfied).
    uint64_t node_budget = 2'000'000;
};

/// Looks for qubit-disjoint paths, one per required pair, and turns them into
/// Z measurements of every other qubit, merges at intermediate users and X
/// measurements along each path. A candidate is returned only after its
/// replay produces exactly the task graph. std::nullopt means no schedule was
/// found, which is not a proof that none exists.
/// Throws std::invalid_argument if sed_pair is not a pair of the task.
std::optional<Schedule> satisfy(const QubitGraph& state, const Task& task,
                                std::optional<UserPair> sed_pair, const CheckOptions& opts = {});

/// Applies the schedule's ops to a copy of the state.
QubitGraph replay(const QubitGraph& state, const Schedule& schedule);

/// True when the graph has exactly one edge per pair, each between a qubit of
/// each of the pair's users, and no other qubits.
bool is_task_graph(const QubitGraph& g, const std::vector<UserPair>& pairs);

/// Human-readable schedule with 1-based user labels, e.g. "S_{2,4} Z_6".
/// Measurements of qubits that never touch a used path are left out. Users
/// with several qubits get letter suffixes in id order (3_a, 3_b).
std::string notation(const QubitGraph& state, const Schedule& schedule);

struct SuccessReport {
    std::vector<bool> satisfied;
    std::vector<std::optional<Schedule>> schedules;
    size_t failures = 0;

    bool all_satisfied() const { return failures == 0; }
};

/// Checks every task against the plan's state using its recorded satellite
/// pairs. Tasks the plan marked infeasible count as failures.
SuccessReport network_success(const ResourcePlan& plan, const TaskSet& ts,
                              const CheckOptions& opts = {});

/// merging_algorithm with a veto that keeps satisfiable every task the input
/// plan already satisfies. Each candidate merge is accepted only if satisfy
/// still finds a schedule for all of those tasks on the merged state, so
/// network_success on the result reports them satisfied.
ResourcePlan merge_preserving_tasks(const ResourcePlan& plan, const TaskSet& ts,
                                    std::vector<MergeStep>* trace = nullptr,
                                    const CheckOptions& opts = {});

}  // namespace entplan
