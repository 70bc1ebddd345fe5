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

#include <benchmark/benchmark.h>

#include "entplan/checker.hpp"
#include "entplan/planner.hpp"

using namespace entplan;

namespace {

TaskSet tasks(size_t n_users, uint64_t seed) {
    Rng rng(seed);
    return generate_tasks(n_users, n_users - 1, 0.8, rng);
}

GridNetwork network(size_t n_users, unsigned d) {
    std::vector<GridPoint> cells;
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            cells.push_back({x, y});
        }
    }
    Rng rng(1);
    rng.shuffle(std::span<GridPoint>(cells));
    cells.resize(n_users);
    return GridNetwork(5, 5, 200.0, cells, d);
}

void BM_build(benchmark::State& state) {
    const auto setting = static_cast<Setting>(state.range(0));
    const size_t n = static_cast<size_t>(state.range(1));
    const TaskSet ts = tasks(n, 7);
    const GridNetwork net = network(n, 2);
    for (auto _ : state) {
        Rng rng(3);
        benchmark::DoNotOptimize(build(setting, ts, net, rng));
    }
    state.SetLabel(to_string(setting));
}
BENCHMARK(BM_build)->ArgsProduct({{0, 1, 2, 3}, {6, 10}});

void BM_merging_algorithm(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    const TaskSet ts = tasks(n, 7);
    const ResourcePlan plan = build_bm(ts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(merging_algorithm(plan));
    }
}
BENCHMARK(BM_merging_algorithm)->Arg(6)->Arg(10)->Arg(14);

void BM_merge_preserving_tasks(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    const TaskSet ts = tasks(n, 7);
    Rng rng(3);
    const ResourcePlan plan = build_sed_ec(ts, network(n, 2), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(merge_preserving_tasks(plan, ts));
    }
}
BENCHMARK(BM_merge_preserving_tasks)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
