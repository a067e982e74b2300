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

#include <vector>

#include "djq/classical_sim.h"
#include "djq/quantum_sim.h"
#include "djq/truth_table.h"

namespace {

void BM_classical_error_mc(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<uint64_t> one = {0};
    const djq::TruthTable tt = djq::make_fm(n, 1, false, one);
    const uint64_t k = (uint64_t{1} << n) / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::classical_error_mc(tt, k, 10000, 0, 1));
    }
}
BENCHMARK(BM_classical_error_mc)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_quantum_error_mc(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<uint64_t> one = {0};
    const djq::TruthTable tt = djq::make_fm(n, 1, false, one);
    for (auto _ : state) {
        benchmark::DoNotOptimize(djq::quantum_error_mc(tt, 8, 10000, 0, 1));
    }
}
BENCHMARK(BM_quantum_error_mc)->Arg(6)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
