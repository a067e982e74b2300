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

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "djq/analytic.h"
#include "oracles.h"

using namespace djq;
using djq::testing::brute_force_classical_constant;

namespace {

TruthTable f1_table(int n) {
    const std::vector<uint64_t> one = {0};
    return make_fm(n, 1, false, one);
}

TruthTable balanced2() {
    return TruthTable::from_bit_string(2, "0110");
}

void expect_outcome_invariants(const TruthTable &tt, uint64_t k, const DecisionOutcome &out) {
    ASSERT_GE(out.queries_used, 1u);
    ASSERT_LE(out.queries_used, k);
    ASSERT_EQ(out.transcript.size(), out.queries_used);
    std::set<uint64_t> seen;
    for (const Query &q : out.transcript) {
        ASSERT_TRUE(seen.insert(q.input).second) << "repeated input " << q.input;
        ASSERT_EQ(q.output, tt[q.input]);
    }
    if (out.queries_used < k) {
        ASSERT_EQ(out.verdict, Verdict::NotConstant);
    }
    if (out.verdict == Verdict::NotConstant) {
        // The last query is the first one that disagrees.
        const bool first = out.transcript.front().output;
        for (size_t i = 0; i + 1 < out.transcript.size(); ++i) {
            ASSERT_EQ(out.transcript[i].output, first);
        }
        ASSERT_NE(out.transcript.back().output, first);
    } else {
        ASSERT_EQ(out.queries_used, k);
        for (const Query &q : out.transcript) {
            ASSERT_EQ(q.output, out.transcript.front().output);
        }
    }
}

}  // namespace

TEST(classical_decide, constant_table_uses_full_budget) {
    for (bool value : {false, true}) {
        const TruthTable tt = TruthTable::constant(4, value);
        for (uint64_t k : {1u, 5u, 16u}) {
            for (uint64_t seed = 0; seed < 20; ++seed) {
                Rng rng(seed);
                const DecisionOutcome out = classical_decide(tt, k, rng);
                ASSERT_EQ(out.verdict, Verdict::Constant);
                ASSERT_EQ(out.queries_used, k);
                expect_outcome_invariants(tt, k, out);
            }
        }
    }
}

TEST(classical_decide, full_budget_is_certain) {
    for (int n = 1; n <= 8; ++n) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const DecisionOutcome out = classical_decide(f1_table(n), size, rng);
            ASSERT_EQ(out.verdict, Verdict::NotConstant);
        }
    }
}

TEST(classical_decide, balanced_pair_frequency) {
    const TruthTable tt = balanced2();
    ASSERT_EQ(brute_force_classical_constant(tt, 2), mpq_class(1, 3));
    ASSERT_EQ(pm(2, 2, 2).value(), mpq_class(1, 3));
    const uint64_t seeds = 60000;
    uint64_t constant = 0;
    for (uint64_t seed = 0; seed < seeds; ++seed) {
        Rng rng = substream(seed, "test", 0);
        constant += classical_decide(tt, 2, rng).verdict == Verdict::Constant;
    }
    const double p = 1.0 / 3.0;
    const double sigma = std::sqrt(p * (1 - p) / seeds);
    EXPECT_LT(std::abs(static_cast<double>(constant) / seeds - p), 4 * sigma);
}

TEST(classical_decide, invariants_on_random_tables) {
    Rng gen(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(gen, 7));
        const TruthTable tt = random_function(n, gen);
        const uint64_t k = 1 + uniform_below(gen, tt.size());
        Rng rng(trial);
        expect_outcome_invariants(tt, k, classical_decide(tt, k, rng));
    }
}

TEST(classical_decide, transcript_can_be_dropped) {
    const TruthTable tt = f1_table(5);
    Rng a(3), b(3);
    const DecisionOutcome with = classical_decide(tt, 20, a, true);
    const DecisionOutcome without = classical_decide(tt, 20, b, false);
    ASSERT_TRUE(without.transcript.empty());
    ASSERT_EQ(with.verdict, without.verdict);
    ASSERT_EQ(with.queries_used, without.queries_used);
}

TEST(classical_decide, budget_errors) {
    Rng rng(0);
    ASSERT_THROW(classical_decide(f1_table(3), 0, rng), std::invalid_argument);
    ASSERT_THROW(classical_decide(f1_table(3), 9, rng), std::invalid_argument);
}

TEST(classical_error_exact, examples) {
    ClassicalError e = classical_error_exact(f1_table(4), 3);
    ASSERT_EQ(e.probability.value(), mpq_class(13, 16));
    ASSERT_FALSE(e.vacuous);
    e = classical_error_exact(balanced2(), 2);
    ASSERT_EQ(e.probability.value(), mpq_class(1, 3));
    e = classical_error_exact(TruthTable::constant(3, true), 4);
    ASSERT_TRUE(e.probability.is_zero());
    ASSERT_TRUE(e.vacuous);
}

TEST(classical_error_exact, matches_enumeration) {
    // Every table for n <= 2 and all budgets; n = 3 on random tables.
    for (int n = 1; n <= 2; ++n) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t code = 0; code < (uint64_t{1} << size); ++code) {
            std::vector<uint8_t> bits(size);
            for (uint64_t x = 0; x < size; ++x) {
                bits[x] = (code >> x) & 1;
            }
            const TruthTable tt = TruthTable::from_bits(n, bits);
            if (profile(tt).m == 0) {
                continue;
            }
            for (uint64_t k = 1; k <= size; ++k) {
                ASSERT_EQ(classical_error_exact(tt, k).probability.value(), brute_force_classical_constant(tt, k));
            }
        }
    }
    Rng gen(5);
    for (int i = 0; i < 12; ++i) {
        const TruthTable tt = random_function(3, gen);
        if (profile(tt).m == 0) {
            continue;
        }
        for (uint64_t k = 1; k <= 8; ++k) {
            ASSERT_EQ(classical_error_exact(tt, k).probability.value(), brute_force_classical_constant(tt, k));
        }
    }
}

TEST(classical_error_mc, f1_within_three_sigma) {
    const McEstimate est = classical_error_mc(f1_table(5), 8, 100000, 0);
    ASSERT_EQ(est.trials, 100000u);
    const double p = 0.75;
    const double sigma = std::sqrt(p * (1 - p) / est.trials);
    EXPECT_LT(std::abs(est.estimate - p), 3 * sigma);
    EXPECT_LE(est.wilson_lo, est.estimate);
    EXPECT_GE(est.wilson_hi, est.estimate);
}

TEST(classical_error_mc, constant_is_zero) {
    const McEstimate est = classical_error_mc(TruthTable::constant(5, false), 7, 1000, 9);
    ASSERT_EQ(est.hits, 0u);
    ASSERT_EQ(est.estimate, 0.0);
}

TEST(classical_error_mc, deterministic_across_threads) {
    Rng place(2);
    const TruthTable tt = make_fm(6, 10, true, place);
    const McEstimate a = classical_error_mc(tt, 5, 20000, 42, 1);
    const McEstimate b = classical_error_mc(tt, 5, 20000, 42, 1);
    const McEstimate c = classical_error_mc(tt, 5, 20000, 42, 4);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, c);
    const McEstimate d = classical_error_mc(tt, 5, 20000, 43, 1);
    ASSERT_NE(a.hits, d.hits);
}

TEST(classical_error_mc, zero_trials_rejected) {
    ASSERT_THROW(classical_error_mc(f1_table(3), 2, 0, 0), std::invalid_argument);
}

TEST(classical_error_mc, four_sigma_grid) {
    for (int n = 2; n <= 6; ++n) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t m : {uint64_t{1}, size / 4, size / 2}) {
            for (uint64_t k : {uint64_t{1}, size / 2, size - 1}) {
                Rng place(n * 100 + m);
                const TruthTable tt = make_fm(n, m, false, place);
                const double p = pm(k, n, m).to_double();
                const McEstimate est = classical_error_mc(tt, k, 100000, n * 1000 + m * 10 + k);
                const double sigma = std::sqrt(p * (1 - p) / est.trials);
                if (sigma == 0.0) {
                    ASSERT_EQ(est.estimate, p) << "n=" << n << " m=" << m << " k=" << k;
                } else {
                    EXPECT_LE(std::abs(est.estimate - p), 4 * sigma) << "n=" << n << " m=" << m << " k=" << k;
                }
            }
        }
    }
}
