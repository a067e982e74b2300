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

#include "djq/quantum_sim.h"
#include "djq/rng.h"
#include "djq/truth_table.h"

namespace {

void BM_dj_output_state(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    djq::Rng rng(1);
    const djq::TruthTable tt = djq::random_function(n, rng);
    for (auto _ : state) {
        djq::Statevector sv = djq::dj_output_state(tt);
        benchmark::DoNotOptimize(sv[0]);
    }
    state.SetComplexityN(int64_t{1} << n);
}
BENCHMARK(BM_dj_output_state)->DenseRange(10, 20, 2)->Unit(benchmark::kMicrosecond);

void BM_walsh_hadamard(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    djq::Statevector sv(n, 0);
    for (auto _ : state) {
        djq::walsh_hadamard(sv.amplitudes());
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_walsh_hadamard)->DenseRange(10, 20, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
