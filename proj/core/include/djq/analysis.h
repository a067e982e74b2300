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

#ifndef DJQ_ANALYSIS_H
#define DJQ_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "djq/exact_prob.h"
#include "djq/monte_carlo.h"

namespace djq {

enum class EvalMode { Exact, Float };

std::string_view to_string(EvalMode mode);

/// One grid point of an efficiency sweep. m is absent for worst-case and
/// average-case sweeps.
struct SweepRecord {
    int n = 0;
    uint64_t k = 0;
    std::optional<uint64_t> m;
    double p = 0.0;
    double q = 0.0;
    double delta = 0.0;
    EvalMode mode = EvalMode::Exact;
    /// Present in exact mode.
    std::optional<EfficiencyValue> delta_exact;
    /// Present only when a Monte Carlo pass ran.
    std::optional<McEstimate> p_mc;
    std::optional<McEstimate> q_mc;
    /// Marks the argmax over k within this record's (n, m) curve.
    bool argmax = false;

    std::optional<double> delta_mc() const {
        if (!p_mc || !q_mc) {
            return std::nullopt;
        }
        return p_mc->estimate - q_mc->estimate;
    }
};

struct KRange {
    uint64_t lo = 1;
    uint64_t hi = 1;
};

/// delta1 over k = 1, 1 + stride, ... <= 2^n - 1 for each n (n >= 2). The
/// argmax k is always included and flagged. Exact mode requires
/// n <= kMaxKstarBits. Throws std::invalid_argument on an empty grid.
std::vector<SweepRecord> sweep_delta1(std::span<const int> n_list, uint64_t k_stride = 1,
                                      EvalMode mode = EvalMode::Exact, unsigned threads = 1);

/// delta_m for each m in m_list over k in [range.lo, range.hi].
/// Requires n >= 2, 1 <= m <= 2^n - 1, 1 <= lo <= hi <= 2^n.
std::vector<SweepRecord> sweep_delta_m(int n, std::span<const uint64_t> m_list, KRange range,
                                       EvalMode mode = EvalMode::Exact, unsigned threads = 1);

/// delta_bar over 1 <= k <= max(1, 2^n - 1) for each n. Exact mode requires
/// n <= kMaxExactAverageBits.
std::vector<SweepRecord> sweep_delta_bar(std::span<const int> n_list, EvalMode mode = EvalMode::Exact,
                                         unsigned threads = 1);

/// Records sorted by (n, m, k); absent m sorts first.
void sort_canonical(std::vector<SweepRecord> &records);

/// Largest second difference delta(k+1) - 2 delta(k) + delta(k-1) over
/// consecutive-k triples within each (n, m) curve. Returns -infinity when
/// no triple exists.
double max_second_difference(std::span<const SweepRecord> records);

/// True if delta never increases along k within each (n, m) curve. Uses
/// exact values when every record carries them.
bool is_non_increasing(std::span<const SweepRecord> records);

/// Figure data: delta1 for n = 5..12; delta_m for n = 7 and
/// m in {3, 10, 20, 30, 40, 60}; delta_bar for n in {3, 6, 7}.
std::vector<SweepRecord> figure1_records(unsigned threads = 1);
std::vector<SweepRecord> figure2_records(unsigned threads = 1);
std::vector<SweepRecord> figure3_records(unsigned threads = 1);

/// Columns n,k,m,p_exact,q_exact,delta,mode; floats with 17 significant
/// digits; m empty when absent.
void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records);
std::string format_double(double v);

struct NegativeRegion {
    /// Inclusive interval [lo, hi] with hi = 2^n, if non-empty.
    std::optional<KRange> interval;
    EvalMode mode = EvalMode::Exact;
    /// Float mode only: the scan stopped at a point within 1e-12 of zero.
    bool indeterminate = false;
};

/// Largest exact-sign evaluation width for find_negative_region.
inline constexpr int kMaxExactSignBits = 14;

/// Maximal suffix of {1, ..., 2^n} on which delta_m < 0, found by scanning
/// down from k = 2^n. Exact for n <= kMaxExactSignBits, otherwise float
/// with a 1e-12 band around zero treated as indeterminate.
NegativeRegion find_negative_region(int n, uint64_t m);

struct ReconcileRow {
    std::string procedure;
    double analytic = 0.0;
    McEstimate empirical;
    /// Binomial standard deviation at the analytic value.
    double sigma = 0.0;
    /// (empirical - analytic) / sigma; infinite when sigma is 0 and the
    /// values differ.
    double z = 0.0;
    bool flagged = false;
};

struct ReconcileReport {
    int n = 0;
    uint64_t m = 0;
    uint64_t k = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::vector<ReconcileRow> rows;

    bool any_flagged() const;
};

/// |z| above this flags a discrepancy.
inline constexpr double kReconcileZLimit = 4.0;

/// Builds an f_m-type table (minority inputs placed with
/// substream(seed, "fm-placement", 0)) and compares classical and quantum
/// Monte Carlo error rates against pm and qm. Constant tables (m = 0 or
/// m = 2^n) have analytic error 0. Requires trials >= 1.
ReconcileReport reconcile(int n, uint64_t m, uint64_t k, uint64_t trials, uint64_t seed, unsigned threads = 0);

struct GridPoint {
    int n = 0;
    uint64_t m = 0;
    uint64_t k = 0;
};

/// n in 2..6, k in {1, 2^(n-1), 2^n - 1}, m in {1, 2^(n-2), 2^(n-1)},
/// duplicates removed, in (n, m, k) order.
std::vector<GridPoint> default_reconcile_grid();

/// Point i uses seed derive_seed(seed, "reconcile-point", i).
std::vector<ReconcileReport> reconcile_grid(std::span<const GridPoint> grid, uint64_t trials, uint64_t seed,
                                            unsigned threads = 0);

/// Deterministic renderings; identical inputs give identical bytes.
std::string reconcile_to_json(std::span<const ReconcileReport> reports);
std::string reconcile_to_text(std::span<const ReconcileReport> reports);

}  // namespace djq

#endif  // DJQ_ANALYSIS_H
