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

#include "djq/truth_table.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace djq;

TEST(truth_table, make_fm_constant) {
    TruthTable t = make_fm(2, 0, false, std::span<const uint64_t>{});
    ASSERT_EQ(t.bit_string(), "0000");
    ASSERT_EQ(profile(t).function_class, FunctionClass::Constant);
}

TEST(truth_table, make_fm_explicit_positions) {
    const std::vector<uint64_t> one = {3};
    TruthTable t = make_fm(2, 1, false, one);
    ASSERT_EQ(t.bit_string(), "0001");
    ASSERT_EQ(profile(t).m, 1u);

    const std::vector<uint64_t> half = {0, 1, 2, 3};
    TruthTable b = make_fm(3, 4, false, half);
    ASSERT_EQ(b.bit_string(), "11110000");
    ASSERT_EQ(profile(b).function_class, FunctionClass::Balanced);
}

TEST(truth_table, make_fm_rejects_bad_input) {
    const std::vector<uint64_t> dup = {1, 1};
    const std::vector<uint64_t> big = {4};
    const std::vector<uint64_t> two = {0, 1};
    ASSERT_THROW(make_fm(2, 2, false, dup), std::invalid_argument);
    ASSERT_THROW(make_fm(2, 1, false, big), std::invalid_argument);
    ASSERT_THROW(make_fm(2, 1, false, two), std::invalid_argument);
    ASSERT_THROW(make_fm(2, 5, false, std::span<const uint64_t>{}), std::invalid_argument);
    Rng rng(1);
    ASSERT_THROW(make_fm(2, 5, false, rng), std::invalid_argument);
    ASSERT_THROW(make_fm(kMaxTableBits + 1, 0, false, rng), std::invalid_argument);
    ASSERT_THROW(random_function(kMaxTableBits + 1, rng), std::invalid_argument);
    ASSERT_THROW(random_function(0, rng), std::invalid_argument);
}

TEST(truth_table, make_fm_random_placement_counts) {
    Rng rng(99);
    for (int n = 1; n <= 12; ++n) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t m : {uint64_t{0}, uint64_t{1}, size / 3, size / 2, size - 1, size}) {
            for (bool majority : {false, true}) {
                TruthTable t = make_fm(n, m, majority, rng);
                const uint64_t majority_count = majority ? t.count_ones() : t.count_zeros();
                ASSERT_EQ(majority_count, size - m);
                ASSERT_EQ(t.count_ones() + t.count_zeros(), size);
                // Relabeling majority 0 <-> 1 with m -> 2^n - m gives the same profile m.
                ASSERT_EQ(profile(t).m, std::min(m, size - m));
            }
        }
    }
}

TEST(truth_table, make_fm_handles_max_width) {
    Rng rng(5);
    TruthTable t = make_fm(kMaxTableBits, 3, true, rng);
    ASSERT_EQ(t.count_zeros(), 3u);
}

TEST(truth_table, profile_examples) {
    ASSERT_EQ(profile(TruthTable::from_bit_string(2, "0000")),
              (FunctionProfile{0, 0, FunctionClass::Constant}));
    ASSERT_EQ(profile(TruthTable::from_bit_string(2, "1111")),
              (FunctionProfile{0, 1, FunctionClass::Constant}));
    ASSERT_EQ(profile(TruthTable::from_bit_string(2, "0110")),
              (FunctionProfile{2, 0, FunctionClass::Balanced}));
    ASSERT_EQ(profile(TruthTable::from_bit_string(2, "0001")),
              (FunctionProfile{1, 1, FunctionClass::Unbalanced}));
    ASSERT_EQ(profile(TruthTable::from_bit_string(2, "1101")),
              (FunctionProfile{1, 0, FunctionClass::Unbalanced}));
}

TEST(truth_table, evaluate) {
    TruthTable t = TruthTable::from_bit_string(2, "0101");
    ASSERT_EQ(evaluate(t, 1), true);
    ASSERT_EQ(evaluate(t, 2), false);
    ASSERT_THROW(evaluate(t, 4), std::out_of_range);
}

TEST(truth_table, text_format) {
    TruthTable t = TruthTable::parse("n=3\n01101001\n");
    ASSERT_EQ(t.n(), 3);
    ASSERT_EQ(t.bit_string(), "01101001");
    ASSERT_EQ(TruthTable::parse(t.to_text()), t);
    ASSERT_EQ(TruthTable::parse("n=1\r\n10"), TruthTable::from_bit_string(1, "10"));

    ASSERT_THROW(TruthTable::parse("n=2\n010\n"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("n=2\n01x0\n"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("m=2\n0100\n"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("n=two\n0100\n"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("n=2"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("n=2\n0100\n1111\n"), std::invalid_argument);
    ASSERT_THROW(TruthTable::parse("n=25\n0\n"), std::invalid_argument);
}

TEST(truth_table, text_round_trip_property) {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 10));
        TruthTable t = random_function(n, rng);
        ASSERT_EQ(TruthTable::parse(t.to_text()), t);
    }
}

TEST(truth_table, random_function_deterministic) {
    Rng a(42);
    Rng b(42);
    ASSERT_EQ(random_function(2, a), random_function(2, b));
    Rng c(43);
    Rng d(42);
    // Different seeds may coincide at n=2, so compare a longer prefix.
    ASSERT_NE(random_function(10, c), random_function(10, d));
}

TEST(truth_table, random_function_n1_chi_squared) {
    // 4 tables, 20000 draws; chi-squared with 3 dof, p = 0.001 -> 16.27.
    Rng rng(7);
    std::map<std::string, int> counts;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        counts[random_function(1, rng).bit_string()]++;
    }
    ASSERT_EQ(counts.size(), 4u);
    double chi2 = 0;
    for (const auto &[table, c] : counts) {
        const double e = draws / 4.0;
        chi2 += (c - e) * (c - e) / e;
    }
    EXPECT_LT(chi2, 16.27);
}

TEST(truth_table, random_function_n3_balanced_fraction) {
    Rng rng(11);
    const int draws = 200000;
    int balanced = 0;
    for (int i = 0; i < draws; ++i) {
        balanced += profile(random_function(3, rng)).function_class == FunctionClass::Balanced;
    }
    const double p = 70.0 / 256.0;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    EXPECT_NEAR(balanced / static_cast<double>(draws), p, 3 * sigma);
}

TEST(truth_table, random_function_per_table_frequency) {
    // n = 2: 16 tables; each within 5 sigma of 1/16 over 1e5 draws.
    Rng rng(3);
    const int draws = 100000;
    std::map<std::string, int> counts;
    for (int i = 0; i < draws; ++i) {
        counts[random_function(2, rng).bit_string()]++;
    }
    ASSERT_EQ(counts.size(), 16u);
    const double p = 1.0 / 16;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    for (const auto &[table, c] : counts) {
        EXPECT_NEAR(c / static_cast<double>(draws), p, 5 * sigma) << table;
    }
}
