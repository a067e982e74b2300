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

#include "djq/classical_sim.h"

#include <stdexcept>
#include <string>

#include "djq/analytic.h"
#include "djq/sampling.h"

namespace djq {

std::string_view to_string(Verdict v) {
    return v == Verdict::Constant ? "constant" : "not constant";
}

namespace {

void check_budget(const TruthTable &tt, uint64_t k) {
    if (k < 1 || k > tt.size()) {
        throw std::invalid_argument("classical budget k=" + std::to_string(k) + " outside [1, 2^n=" +
                                    std::to_string(tt.size()) + "]");
    }
}

// Returns true iff all draws agree, stopping at the first disagreement.
// `sampler` must be freshly reset.
bool all_equal_run(const TruthTable &tt, uint64_t k, Rng &rng, DistinctSampler &sampler, uint64_t *used,
                   std::vector<Query> *transcript) {
    bool first = false;
    for (uint64_t q = 0; q < k; ++q) {
        const uint64_t x = sampler.next(rng);
        const bool y = tt[x];
        if (used != nullptr) {
            *used = q + 1;
        }
        if (transcript != nullptr) {
            transcript->push_back({x, y});
        }
        if (q == 0) {
            first = y;
        } else if (y != first) {
            return false;
        }
    }
    return true;
}

}  // namespace

DecisionOutcome classical_decide(const TruthTable &tt, uint64_t k, Rng &rng, bool keep_transcript) {
    check_budget(tt, k);
    DistinctSampler sampler(tt.size());
    DecisionOutcome out;
    std::vector<Query> *transcript = keep_transcript ? &out.transcript : nullptr;
    const bool same = all_equal_run(tt, k, rng, sampler, &out.queries_used, transcript);
    out.verdict = same ? Verdict::Constant : Verdict::NotConstant;
    return out;
}

ClassicalError classical_error_exact(const TruthTable &tt, uint64_t k) {
    check_budget(tt, k);
    const FunctionProfile prof = profile(tt);
    if (prof.function_class == FunctionClass::Constant) {
        return {ExactProb::zero(), true};
    }
    return {pm(k, tt.n(), prof.m), false};
}

McEstimate classical_error_mc(const TruthTable &tt, uint64_t k, uint64_t trials, uint64_t seed, unsigned threads) {
    check_budget(tt, k);
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (profile(tt).function_class == FunctionClass::Constant) {
        return make_estimate(0, trials);
    }
    const uint64_t hits = count_hits(trials, threads, [&](uint64_t t) {
        thread_local DistinctSampler sampler(1);
        if (sampler.population() != tt.size()) {
            sampler = DistinctSampler(tt.size());
        } else {
            sampler.reset();
        }
        Rng rng = substream(seed, "classical", t);
        return all_equal_run(tt, k, rng, sampler, nullptr, nullptr);
    });
    return make_estimate(hits, trials);
}

}  // namespace djq
