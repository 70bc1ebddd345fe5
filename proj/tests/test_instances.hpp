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

// Random planning instances shared by the property tests and the acceptance
// suite: N in [4, 10] users on distinct cells of a 5x5 grid, D in [1, 7],
// N - 1 tasks drawn with p = 0.8.

#include <cstdint>
#include <span>
#include <vector>

#include "entplan/rng.hpp"
#include "entplan/taskgen.hpp"
#include "entplan/topology.hpp"

namespace entplan::ref {

struct Instance {
    GridNetwork net;
    TaskSet tasks;
    uint64_t plan_seed;
};

inline Instance random_instance(uint64_t seed) {
    Rng r(seed);
    const size_t n = 4 + r.uniform_index(7);
    const auto d = static_cast<unsigned>(1 + r.uniform_index(7));
    std::vector<GridPoint> cells;
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            cells.push_back({x, y});
        }
    }
    r.shuffle(std::span<GridPoint>(cells));
    cells.resize(n);
    GridNetwork net(5, 5, 200.0, cells, d);
    TaskSet ts = generate_tasks(n, n - 1, 0.8, r);
    return {std::move(net), std::move(ts), derive_seed(seed, {1})};
}

/// N users side by side on a one-row grid with D = 0 and one singleton task
/// per user pair.
inline std::pair<GridNetwork, TaskSet> line_instance(size_t n) {
    std::vector<GridPoint> cells;
    for (size_t i = 0; i < n; ++i) {
        cells.push_back({static_cast<int>(i), 0});
    }
    GridNetwork net(static_cast<int>(n), 1, 200.0, cells, 0);
    TaskSet ts{n, {}};
    for (UserId i = 0; i < n; ++i) {
        for (UserId j = i + 1; j < n; ++j) {
            ts.tasks.push_back(make_task(n, {UserPair(i, j)}));
        }
    }
    return {net, ts};
}

/// Closed form of the line instance's relay count: sum_{i=1}^{N-2} i (N-1-i).
inline size_t line_slots_formula(size_t n) {
    size_t s = 0;
    for (size_t i = 1; i + 2 <= n; ++i) {
        s += i * (n - 1 - i);
    }
    return s;
}

}  // namespace entplan::ref
