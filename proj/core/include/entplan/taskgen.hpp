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
#include <vector>

#include "entplan/multigraph.hpp"
#include "entplan/rng.hpp"

namespace entplan {

/// A task is a UserGraph whose edges form a matching (multiplicity 1, degree <= 1).
using Task = UserGraph;

struct TaskSet {
    size_t n_users = 0;
    std::vector<Task> tasks;

    size_t size() const { return tasks.size(); }
    bool operator==(const TaskSet&) const = default;
};

/// Builds a task from user pairs. Throws std::invalid_argument if the pairs do
/// not form a matching over users < n_users.
Task make_task(size_t n_users, const std::vector<UserPair>& pairs);

/// Throws std::invalid_argument unless every task has n_users users and is a matching.
void validate(const TaskSet& ts);

/// The six-user, four-task set of the worked example (0-based users).
TaskSet example_task_set();

/// Each task's size is Binomial(floor(n/2), p); its pairs are the first 2s
/// users of a random permutation, paired consecutively. Empty tasks are kept.
/// Throws std::invalid_argument if n_users < 2 or p is outside [0, 1].
TaskSet generate_tasks(size_t n_users, size_t n_tasks, double p, Rng& rng);

}  // namespace entplan
