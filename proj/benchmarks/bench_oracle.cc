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

#include "entplan/oracle.hpp"

using namespace entplan;

namespace {

void BM_graph_state_vector(benchmark::State& state) {
    Rng rng(1);
    const QubitGraph g = oracle::random_graph(static_cast<size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::graph_state_vector(g));
    }
}
BENCHMARK(BM_graph_state_vector)->DenseRange(4, 10, 2);

void BM_check_all_rules(benchmark::State& state) {
    Rng rng(2);
    const QubitGraph g = oracle::random_graph(static_cast<size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::check_all_rules(g));
    }
}
BENCHMARK(BM_check_all_rules)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
