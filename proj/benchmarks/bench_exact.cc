// Copyright 2026 The djq Authors
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

#include "djq/analytic.h"

namespace {

void BM_pbar_exact(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const uint64_t k = (uint64_t{1} << n) / 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::pbar(k, n));
    }
}
BENCHMARK(BM_pbar_exact)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_pbar_float(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const uint64_t k = (uint64_t{1} << n) / 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::approx::pbar(k, n));
    }
}
BENCHMARK(BM_pbar_float)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_kstar_exact(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::kstar_exact(n));
    }
}
BENCHMARK(BM_kstar_exact)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_delta_m_exact(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::delta_m(64, 7, 10));
    }
}
BENCHMARK(BM_delta_m_exact);

}  // namespace

BENCHMARK_MAIN();
