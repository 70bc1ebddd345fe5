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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "entplan/graphstate.hpp"
#include "entplan/multigraph.hpp"
#include "entplan/rng.hpp"
#include "entplan/taskgen.hpp"
#include "entplan/topology.hpp"

namespace entplan {

enum class Setting { kBM, kSED, kEC, kSedEc };

inline constexpr Setting kAllSettings[] = {Setting::kBM, Setting::kSED, Setting::kEC,
                                           Setting::kSedEc};

/// "BM", "SED", "EC", "SED_EC".
std::string to_string(Setting s);
/// Case-insensitive inverse of to_string. Throws std::invalid_argument.
Setting parse_setting(std::string_view text);

bool uses_sed(Setting s);
bool uses_ec(Setting s);

struct ResourcePlan {
    size_t n_users = 0;
    Setting setting = Setting::kBM;
    QubitGraph state;
    /// Satellite pair per task; empty for non-SED settings and empty tasks.
    std::vector<std::optional<UserPair>> sed_choice;
    /// Route chosen for every pair longer than D (EC settings only).
    std::map<UserPair, std::vector<UserId>> ec_paths;
    /// Tasks after SED removal and/or path replacement. Infeasible tasks are
    /// left empty so indices still line up with the input task set.
    std::vector<UserGraph> transformed_tasks;
    std::set<size_t> infeasible_tasks;
    /// Qubit count as built, before merging.
    size_t q_pre = 0;

    bool operator==(const ResourcePlan&) const = default;
};

size_t q_count(const QubitGraph& state);
size_t q_count(const ResourcePlan& plan);

/// One EPR pair per unit of U over the task set, each on two fresh qubits.
ResourcePlan build_bm(const TaskSet& ts);

/// Removes a longest pair (by user_distance, random among ties) from every
/// nonempty task and builds the benchmark state of what remains.
ResourcePlan build_sed(const TaskSet& ts, const GridNetwork& net, Rng& rng);

/// Replaces every pair longer than D by a constrained path. The state keeps
/// one chain of EPR pairs per benchmark pair instance, so an intermediate
/// user holds two qubits per chain it relays. Tasks with an unroutable pair
/// are marked infeasible and contribute nothing.
ResourcePlan build_ec(const TaskSet& ts, const GridNetwork& net, Rng& rng);

/// SED removal followed by path replacement of the remaining long pairs.
ResourcePlan build_sed_ec(const TaskSet& ts, const GridNetwork& net, Rng& rng);

ResourcePlan build(Setting setting, const TaskSet& ts, const GridNetwork& net, Rng& rng);

/// Intermediate users summed over all routed pairs (hops minus one per route).
size_t intermediate_slots(const ResourcePlan& plan);

/// Why a merge was accepted.
enum class MergeCriterion { kUnitSimultaneous, kRestrictedSimultaneous };

struct MergeStep {
    UserId user;
    QubitId kept;
    QubitId removed;
    MergeCriterion criterion;
};

struct MergeOptions {
    /// Extra veto consulted after the criteria pass, with the graph as it
    /// would be after the merge. Returning false keeps the two qubits apart.
    std::function<bool(const QubitGraph& merged, QubitId kept, QubitId removed)> accept;
    /// Receives every merge performed, in order.
    std::vector<MergeStep>* trace = nullptr;
};

/// Fuses pairs of qubits held by one user while the simultaneous adjacency
/// criteria allow it. Users are scanned in ascending order and qubit pairs in
/// lexicographic order; the scan restarts after each merge and stops at a
/// pass without merges. Two qubits with a common neighbor are never merged,
/// since that neighbor's edges would cancel.
ResourcePlan merging_algorithm(const ResourcePlan& plan, const MergeOptions& opts = {});

}  // namespace entplan
