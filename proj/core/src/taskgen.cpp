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

#include "entplan/taskgen.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace entplan {

Task make_task(size_t n_users, const std::vector<UserPair>& pairs) {
    Task t(n_users);
    for (const auto& p : pairs) {
        if (p.hi >= n_users) {
            throw std::invalid_argument("pair " + to_string(p) + " names an unknown user");
        }
        t.add_edge(p);
    }
    if (!t.is_matching()) {
        throw std::invalid_argument("task pairs must form a matching");
    }
    return t;
}

void validate(const TaskSet& ts) {
    for (size_t k = 0; k < ts.tasks.size(); ++k) {
        const auto& t = ts.tasks[k];
        if (t.n_users() != ts.n_users) {
            throw std::invalid_argument("task " + std::to_string(k) + " has " +
                                        std::to_string(t.n_users()) + " users, expected " +
                                        std::to_string(ts.n_users));
        }
        if (!t.is_matching()) {
            throw std::invalid_argument("task " + std::to_string(k) + " is not a matching");
        }
    }
}

TaskSet example_task_set() {
    constexpr size_t n = 6;
    // Labels 1..6 shifted to 0-based indices.
    return TaskSet{n,
                   {
                       make_task(n, {{0, 1}, {2, 5}}),
                       make_task(n, {{0, 4}}),
                       make_task(n, {{1, 3}, {2, 4}}),
                       make_task(n, {{0, 3}, {1, 2}, {4, 5}}),
                   }};
}

TaskSet generate_tasks(size_t n_users, size_t n_tasks, double p, Rng& rng) {
    if (n_users < 2) {
        throw std::invalid_argument("task generation needs at least two users");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("task probability must lie in [0, 1]");
    }
    TaskSet ts{n_users, {}};
    ts.tasks.reserve(n_tasks);
    std::vector<UserId> users(n_users);
    for (size_t k = 0; k < n_tasks; ++k) {
        const unsigned size = rng.binomial(static_cast<unsigned>(n_users / 2), p);
        std::iota(users.begin(), users.end(), UserId{0});
        rng.shuffle(std::span<UserId>(users));
        Task t(n_users);
        for (unsigned s = 0; s < size; ++s) {
            t.add_edge(users[2 * s], users[2 * s + 1]);
        }
        ts.tasks.push_back(std::move(t));
    }
    return ts;
}

}  // namespace entplan
