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

#include "djq/quantum_sim.h"

#include <algorithm>
#include <cmath>

namespace djq {

void check_state_bits(int n, int limit) {
    if (n < 1 || n > limit) {
        throw std::invalid_argument("statevector width n=" + std::to_string(n) + " outside [1, " +
                                    std::to_string(limit) + "] (2^" + std::to_string(limit) +
                                    " amplitudes is the memory guard)");
    }
}

Statevector dj_output_state(const TruthTable &tt) {
    check_state_bits(tt.n());
    // W|0> is the all-ones vector.
    Statevector sv(tt.n(), std::vector<double>(tt.size(), 1.0));
    apply_phase_oracle(sv, tt);
    walsh_hadamard(sv.amplitudes());
    for (double &a : sv.amplitudes()) {
        a = std::ldexp(a, -tt.n());
    }
    return sv;
}

MeasurementDistribution measurement_distribution(const Statevector &sv) {
    MeasurementDistribution d;
    d.probabilities.reserve(sv.size());
    for (double a : sv.amplitudes()) {
        d.probabilities.push_back(std::clamp(a * a, 0.0, 1.0));
    }
    return d;
}

double prob_z_zero(const Statevector &sv) {
    const double norm = sv.norm_squared();
    if (std::fabs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("prob_z_zero: state is not normalized (|psi|^2 = " + std::to_string(norm) + ")");
    }
    return std::clamp(sv[0] * sv[0], 0.0, 1.0);
}

DecisionOutcome quantum_decide_with(double p_zero, uint64_t k, Rng &rng) {
    if (k < 1) {
        throw std::invalid_argument("quantum iterations k must be >= 1");
    }
    DecisionOutcome out;
    for (uint64_t i = 0; i < k; ++i) {
        out.queries_used = i + 1;
        if (!bernoulli(rng, p_zero)) {
            out.verdict = Verdict::NotConstant;
            return out;
        }
    }
    out.verdict = Verdict::Constant;
    return out;
}

DecisionOutcome quantum_decide(const TruthTable &tt, uint64_t k, Rng &rng) {
    if (k < 1) {
        throw std::invalid_argument("quantum iterations k must be >= 1");
    }
    return quantum_decide_with(prob_z_zero(dj_output_state(tt)), k, rng);
}

McEstimate quantum_error_mc(const TruthTable &tt, uint64_t k, uint64_t trials, uint64_t seed, unsigned threads) {
    if (k < 1) {
        throw std::invalid_argument("quantum iterations k must be >= 1");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (profile(tt).function_class == FunctionClass::Constant) {
        return make_estimate(0, trials);
    }
    const double p_zero = prob_z_zero(dj_output_state(tt));
    const uint64_t hits = count_hits(trials, threads, [&](uint64_t t) {
        Rng rng = substream(seed, "quantum", t);
        return quantum_decide_with(p_zero, k, rng).verdict == Verdict::Constant;
    });
    return make_estimate(hits, trials);
}

}  // namespace djq
