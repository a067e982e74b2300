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


#include "djq/analysis.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "djq/analytic.h"
#include "djq/rng.h"

using namespace djq;

namespace {

std::vector<SweepRecord> curve(const std::vector<SweepRecord> &all, int n, std::optional<uint64_t> m = {}) {
    std::vector<SweepRecord> out;
    for (const SweepRecord &r : all) {
        if (r.n == n && r.m == m) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace

TEST(sweep_delta1, figure1_shape) {
    const std::vector<SweepRecord> all = figure1_records();
    for (int n = 5; n <= 12; ++n) {
        const std::vector<SweepRecord> c = curve(all, n);
        ASSERT_EQ(c.size(), (uint64_t{1} << n) - 1);
        EXPECT_LE(max_second_difference(c), 1e-14) << "n=" << n;
        // Rises to one interior maximum, then falls through zero.
        const auto peak = std::max_element(c.begin(), c.end(), [](const SweepRecord &a, const SweepRecord &b) {
            return a.delta < b.delta;
        });
        ASSERT_NE(peak, c.begin());
        ASSERT_NE(peak, c.end() - 1);
        ASSERT_TRUE(peak->argmax);
        ASSERT_EQ(std::count_if(c.begin(), c.end(), [](const SweepRecord &r) { return r.argmax; }), 1);
        for (auto it = c.begin(); it + 1 != c.end(); ++it) {
            if (it < peak) {
                ASSERT_LT(*it->delta_exact, *(it + 1)->delta_exact);
            } else {
                ASSERT_GT(*it->delta_exact, *(it + 1)->delta_exact);
            }
        }
        ASSERT_GT(c.front().delta, 0.0);
        ASSERT_LT(delta1(uint64_t{1} << n, n).sign(), 0);
        ASSERT_EQ(peak->k, kstar_exact(n));
    }
}

TEST(sweep_delta1, examples) {
    const std::vector<int> two = {2};
    const std::vector<SweepRecord> r = sweep_delta1(two);
    ASSERT_EQ(r.size(), 3u);
    ASSERT_EQ(r[0].k, 1u);
    ASSERT_EQ(r[0].delta, 0.5);
    ASSERT_TRUE(r[0].argmax);
    ASSERT_EQ(delta1(32, 5).sign(), -1);
    ASSERT_LT(delta1(32, 5).to_double(), 0.0);
    const std::vector<int> none;
    ASSERT_THROW(sweep_delta1(none), std::invalid_argument);
    const std::vector<int> one = {1};
    ASSERT_THROW(sweep_delta1(one), std::invalid_argument);
}

TEST(sweep_delta1, float_mode_matches_exact) {
    const std::vector<int> ns = {6, 9};
    const std::vector<SweepRecord> e = sweep_delta1(ns, 3, EvalMode::Exact);
    const std::vector<SweepRecord> f = sweep_delta1(ns, 3, EvalMode::Float);
    ASSERT_EQ(e.size(), f.size());
    for (size_t i = 0; i < e.size(); ++i) {
        ASSERT_EQ(e[i].k, f[i].k);
        ASSERT_NEAR(e[i].delta, f[i].delta, 1e-12);
        ASSERT_FALSE(f[i].delta_exact.has_value());
        ASSERT_EQ(f[i].mode, EvalMode::Float);
    }
}

TEST(sweep_delta_m, figure2_properties) {
    const std::vector<SweepRecord> all = figure2_records();
    for (uint64_t m : {3u, 10u, 20u, 30u, 40u, 60u}) {
        ASSERT_EQ(curve(all, 7, m).size(), 128u);
    }
    // m = 60 is close to balanced and the advantage collapses quickly.
    const std::vector<SweepRecord> m60 = curve(all, 7, 60);
    for (const SweepRecord &r : m60) {
        if (r.k >= 8) {
            ASSERT_LT(std::abs(r.delta), 1e-2) << "k=" << r.k;
        }
    }
    // The decay is not yet below 1e-2 at k = 6 and 7.
    ASSERT_NEAR(m60[5].delta, 0.0294, 5e-4);
    ASSERT_NEAR(m60[6].delta, 0.0143, 5e-4);
    const std::vector<SweepRecord> m3 = curve(all, 7, 3);
    ASSERT_LT(m3.back().delta_exact->sign(), 0);
    ASSERT_EQ(m3.back().k, 128u);
}

TEST(sweep_delta_m, symmetry) {
    std::vector<uint64_t> ms;
    for (uint64_t m = 1; m < 128; ++m) {
        ms.push_back(m);
    }
    const std::vector<SweepRecord> all = sweep_delta_m(7, ms, {1, 128});
    for (uint64_t m = 1; m < 128; ++m) {
        const std::vector<SweepRecord> a = curve(all, 7, m);
        const std::vector<SweepRecord> b = curve(all, 7, 128 - m);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            ASSERT_EQ(*a[i].delta_exact, *b[i].delta_exact);
            ASSERT_EQ(a[i].delta, b[i].delta);
        }
    }
}

TEST(sweep_delta_m, errors) {
    const std::vector<uint64_t> ok = {1};
    const std::vector<uint64_t> none;
    const std::vector<uint64_t> bad = {0};
    ASSERT_THROW(sweep_delta_m(7, none, {1, 4}), std::invalid_argument);
    ASSERT_THROW(sweep_delta_m(7, bad, {1, 4}), std::invalid_argument);
    ASSERT_THROW(sweep_delta_m(1, ok, {1, 2}), std::invalid_argument);
    ASSERT_THROW(sweep_delta_m(3, ok, {2, 9}), std::invalid_argument);
    ASSERT_THROW(sweep_delta_m(3, ok, {0, 1}), std::invalid_argument);
}

TEST(sweep_delta_bar, figure3_properties) {
    const std::vector<SweepRecord> all = figure3_records();
    for (int n : {3, 6, 7}) {
        const std::vector<SweepRecord> c = curve(all, n);
        ASSERT_EQ(c.size(), (uint64_t{1} << n) - 1);
        EXPECT_TRUE(is_non_increasing(c)) << "n=" << n;
    }
    for (const SweepRecord &r : curve(all, 3)) {
        ASSERT_GE(r.delta_exact->sign(), 0);
    }
    const std::vector<int> one = {1};
    const std::vector<SweepRecord> r1 = sweep_delta_bar(one);
    ASSERT_EQ(r1.size(), 1u);
    ASSERT_EQ(r1[0].delta, 0.5);
}

TEST(find_negative_region, examples) {
    NegativeRegion r = find_negative_region(5, 1);
    ASSERT_TRUE(r.interval.has_value());
    ASSERT_LE(r.interval->lo, 32u);
    ASSERT_EQ(r.interval->hi, 32u);
    ASSERT_EQ(r.mode, EvalMode::Exact);
    r = find_negative_region(7, 64);
    ASSERT_FALSE(r.interval.has_value());
    ASSERT_THROW(find_negative_region(3, 0), std::invalid_argument);
    ASSERT_THROW(find_negative_region(3, 8), std::invalid_argument);
}

TEST(find_negative_region, endpoints_match_exact_scan) {
    for (int n = 2; n <= 8; ++n) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t m = 1; m < size; m += (n < 6 ? 1 : 7)) {
            uint64_t lo = size + 1;
            while (lo > 1 && delta_m(lo - 1, n, m).sign() < 0) {
                --lo;
            }
            const NegativeRegion r = find_negative_region(n, m);
            if (lo == size + 1) {
                ASSERT_FALSE(r.interval.has_value()) << "n=" << n << " m=" << m;
            } else {
                ASSERT_TRUE(r.interval.has_value());
                ASSERT_EQ(r.interval->lo, lo);
                ASSERT_EQ(r.interval->hi, size);
            }
        }
    }
    const NegativeRegion r3 = find_negative_region(3, 1);
    ASSERT_TRUE(r3.interval.has_value());
    ASSERT_LT(delta1(r3.interval->lo, 3).sign(), 0);
    ASSERT_GE(delta1(r3.interval->lo - 1, 3).sign(), 0);
}

TEST(find_negative_region, float_mode_beyond_exact_limit) {
    const NegativeRegion r = find_negative_region(kMaxExactSignBits + 1, 1);
    ASSERT_EQ(r.mode, EvalMode::Float);
    ASSERT_TRUE(r.interval.has_value() || r.indeterminate);
}

TEST(sweep_record, invariants) {
    const std::vector<int> ns = {4, 7};
    for (EvalMode mode : {EvalMode::Exact, EvalMode::Float}) {
        std::vector<SweepRecord> all = sweep_delta1(ns, 1, mode);
        const std::vector<uint64_t> ms = {5, 2};
        for (const SweepRecord &r : sweep_delta_m(5, ms, {1, 32}, mode)) {
            all.push_back(r);
        }
        for (const SweepRecord &r : sweep_delta_bar(ns, mode)) {
            all.push_back(r);
        }
        for (const SweepRecord &r : all) {
            ASSERT_NEAR(r.delta, r.p - r.q, 1e-14);
            ASSERT_FALSE(r.p_mc.has_value());
            ASSERT_FALSE(r.delta_mc().has_value());
            ASSERT_EQ(r.delta_exact.has_value(), mode == EvalMode::Exact);
        }
        std::vector<SweepRecord> sorted = all;
        sort_canonical(sorted);
        std::vector<SweepRecord> twice = sorted;
        std::reverse(twice.begin(), twice.end());
        sort_canonical(twice);
        for (size_t i = 0; i < sorted.size(); ++i) {
            ASSERT_EQ(sorted[i].n, twice[i].n);
            ASSERT_EQ(sorted[i].m, twice[i].m);
            ASSERT_EQ(sorted[i].k, twice[i].k);
        }
    }
}

TEST(sweep_record, sweeps_are_thread_independent) {
    const std::vector<int> ns = {8};
    const std::vector<SweepRecord> a = sweep_delta1(ns, 1, EvalMode::Exact, 1);
    const std::vector<SweepRecord> b = sweep_delta1(ns, 1, EvalMode::Exact, 4);
    std::ostringstream sa, sb;
    write_sweep_csv(sa, a);
    write_sweep_csv(sb, b);
    ASSERT_EQ(sa.str(), sb.str());
}

TEST(write_sweep_csv, format) {
    const std::vector<int> n2 = {2};
    std::ostringstream out;
    write_sweep_csv(out, sweep_delta1(n2));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "n,k,m,p_exact,q_exact,delta,mode");
    std::getline(in, line);
    ASSERT_EQ(line, "2,1,,0.75,0.25,0.5,exact");
    int rows = 1;
    while (std::getline(in, line)) {
        ++rows;
    }
    ASSERT_EQ(rows, 3);
    ASSERT_EQ(format_double(0.1), "0.10000000000000001");
    ASSERT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(reconcile, default_grid_within_four_sigma) {
    const std::vector<GridPoint> grid = default_reconcile_grid();
    ASSERT_FALSE(grid.empty());
    const std::vector<ReconcileReport> reports = reconcile_grid(grid, 100000, kDefaultSeed);
    for (const ReconcileReport &r : reports) {
        ASSERT_FALSE(r.rows.empty());
        for (const ReconcileRow &row : r.rows) {
            EXPECT_LE(std::abs(row.z), kReconcileZLimit)
                << row.procedure << " n=" << r.n << " m=" << r.m << " k=" << r.k;
            EXPECT_FALSE(row.flagged);
        }
        EXPECT_FALSE(r.any_flagged());
    }
}

TEST(reconcile, constant_row_is_zero) {
    const ReconcileReport r = reconcile(4, 0, 3, 1000, 5);
    for (const ReconcileRow &row : r.rows) {
        ASSERT_EQ(row.analytic, 0.0);
        ASSERT_EQ(row.empirical.estimate, 0.0);
        ASSERT_EQ(row.empirical.hits, 0u);
        ASSERT_FALSE(row.flagged);
    }
}

TEST(reconcile, reproducible_bytes) {
    const std::vector<GridPoint> grid = {{3, 1, 2}, {5, 8, 4}, {4, 16, 1}};
    const std::string a = reconcile_to_json(reconcile_grid(grid, 20000, 7, 1));
    const std::string b = reconcile_to_json(reconcile_grid(grid, 20000, 7, 3));
    ASSERT_EQ(a, b);
    ASSERT_EQ(reconcile_to_text(reconcile_grid(grid, 20000, 7)), reconcile_to_text(reconcile_grid(grid, 20000, 7)));
    ASSERT_NE(a, reconcile_to_json(reconcile_grid(grid, 20000, 8)));
}

TEST(reconcile, errors) {
    ASSERT_THROW(reconcile(3, 1, 2, 0, 0), std::invalid_argument);
    ASSERT_THROW(reconcile(3, 9, 2, 10, 0), std::invalid_argument);
    ASSERT_THROW(reconcile(3, 1, 9, 10, 0), std::invalid_argument);
}
