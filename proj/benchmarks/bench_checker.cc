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

void BM_network_success_example(benchmark::State& state) {
    const TaskSet ts = example_task_set();
    const auto setting = static_cast<Setting>(state.range(0));
    Rng rng(0);
    const ResourcePlan plan =
        merge_preserving_tasks(build(setting, ts, GridNetwork::example(4), rng), ts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(network_success(plan, ts));
    }
    state.SetLabel(to_string(setting));
}
BENCHMARK(BM_network_success_example)->DenseRange(0, 3);

void BM_satisfy_random(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    Rng rng(5);
    const TaskSet ts = generate_tasks(n, n - 1, 0.8, rng);
    const ResourcePlan plan = merging_algorithm(build_bm(ts));
    for (auto _ : state) {
        for (const auto& t : ts.tasks) {
            benchmark::DoNotOptimize(satisfy(plan.state, t, std::nullopt));
        }
    }
}
BENCHMARK(BM_satisfy_random)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
