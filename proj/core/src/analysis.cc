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
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "djq/analytic.h"
#include "djq/classical_sim.h"
#include "djq/quantum_sim.h"
#include "djq/rng.h"
#include "djq/truth_table.h"

namespace djq {

std::string_view to_string(EvalMode mode) {
    return mode == EvalMode::Exact ? "exact" : "float";
}

namespace {

uint64_t inputs(int n) {
    return uint64_t{1} << n;
}

SweepRecord exact_record(int n, uint64_t k, std::optional<uint64_t> m, const ExactProb &p, const ExactProb &q) {
    SweepRecord r;
    r.n = n;
    r.k = k;
    r.m = m;
    r.mode = EvalMode::Exact;
    r.p = p.to_double();
    r.q = q.to_double();
    r.delta_exact = EfficiencyValue::difference(p, q);
    r.delta = r.delta_exact->to_double();
    return r;
}

SweepRecord float_record(int n, uint64_t k, std::optional<uint64_t> m, double p, double q) {
    SweepRecord r;
    r.n = n;
    r.k = k;
    r.m = m;
    r.mode = EvalMode::Float;
    r.p = p;
    r.q = q;
    r.delta = p - q;
    return r;
}

bool same_curve(const SweepRecord &a, const SweepRecord &b) {
    return a.n == b.n && a.m == b.m;
}

// Flags the largest delta in each (n, m) curve; ties go to the smallest k.
void flag_argmax(std::vector<SweepRecord> &records) {
    size_t begin = 0;
    while (begin < records.size()) {
        size_t end = begin;
        size_t best = begin;
        while (end < records.size() && same_curve(records[begin], records[end])) {
            const SweepRecord &c = records[end];
            const SweepRecord &b = records[best];
            const bool better = (c.delta_exact && b.delta_exact) ? (*c.delta_exact > *b.delta_exact) : (c.delta > b.delta);
            if (better) {
                best = end;
            }
            ++end;
        }
        records[best].argmax = true;
        begin = end;
    }
}

}  // namespace

void sort_canonical(std::vector<SweepRecord> &records) {
    std::stable_sort(records.begin(), records.end(), [](const SweepRecord &a, const SweepRecord &b) {
        const uint64_t am = a.m.value_or(0);
        const uint64_t bm = b.m.value_or(0);
        return std::tuple(a.n, a.m.has_value(), am, a.k) < std::tuple(b.n, b.m.has_value(), bm, b.k);
    });
}

std::vector<SweepRecord> sweep_delta1(std::span<const int> n_list, uint64_t k_stride, EvalMode mode,
                                      unsigned threads) {
    if (n_list.empty()) {
        throw std::invalid_argument("sweep_delta1: empty n list");
    }
    if (k_stride == 0) {
        throw std::invalid_argument("sweep_delta1: k stride must be >= 1");
    }
    std::vector<SweepRecord> out;
    for (int n : n_list) {
        if (n < 2 || n > (mode == EvalMode::Exact ? kMaxKstarBits : kMaxFloatAverageBits)) {
            throw std::invalid_argument("sweep_delta1: n=" + std::to_string(n) + " outside the supported range for " +
                                        std::string(to_string(mode)) + " mode");
        }
        const uint64_t last = inputs(n) - 1;
        std::vector<uint64_t> ks;
        for (uint64_t k = 1; k <= last; k += k_stride) {
            ks.push_back(k);
        }
        uint64_t best = 0;
        if (mode == EvalMode::Exact) {
            best = argmax_delta1(n);
        } else {
            for (uint64_t k = 1; k <= last; ++k) {
                if (best == 0 || approx::delta1(k, n) > approx::delta1(best, n)) {
                    best = k;
                }
            }
        }
        if (!std::binary_search(ks.begin(), ks.end(), best)) {
            ks.insert(std::upper_bound(ks.begin(), ks.end(), best), best);
        }
        std::vector<SweepRecord> curve(ks.size());
        parallel_for(ks.size(), threads, [&](uint64_t i) {
            const uint64_t k = ks[i];
            curve[i] = mode == EvalMode::Exact ? exact_record(n, k, std::nullopt, p1(k, n), q1(k, n))
                                               : float_record(n, k, std::nullopt, approx::p1(k, n), approx::q1(k, n));
            curve[i].argmax = k == best;
        });
        out.insert(out.end(), curve.begin(), curve.end());
    }
    sort_canonical(out);
    return out;
}

std::vector<SweepRecord> sweep_delta_m(int n, std::span<const uint64_t> m_list, KRange range, EvalMode mode,
                                       unsigned threads) {
    if (m_list.empty()) {
        throw std::invalid_argument("sweep_delta_m: empty m list");
    }
    if (n < 2 || n > kMaxAnalyticBits) {
        throw std::invalid_argument("sweep_delta_m: n=" + std::to_string(n) + " must be >= 2");
    }
    if (range.lo < 1 || range.lo > range.hi || range.hi > inputs(n)) {
        throw std::invalid_argument("sweep_delta_m: k range must satisfy 1 <= lo <= hi <= 2^n");
    }
    struct Point {
        uint64_t m;
        uint64_t k;
    };
    std::vector<Point> points;
    for (uint64_t m : m_list) {
        if (m < 1 || m >= inputs(n)) {
            throw std::invalid_argument("sweep_delta_m: m=" + std::to_string(m) + " outside [1, 2^n - 1]");
        }
        for (uint64_t k = range.lo; k <= range.hi; ++k) {
            points.push_back({m, k});
        }
    }
    std::vector<SweepRecord> out(points.size());
    parallel_for(points.size(), threads, [&](uint64_t i) {
        const auto [m, k] = points[i];
        out[i] = mode == EvalMode::Exact ? exact_record(n, k, m, pm(k, n, m), qm(k, n, m))
                                         : float_record(n, k, m, approx::pm(k, n, m), approx::qm(k, n, m));
    });
    sort_canonical(out);
    flag_argmax(out);
    return out;
}

std::vector<SweepRecord> sweep_delta_bar(std::span<const int> n_list, EvalMode mode, unsigned threads) {
    if (n_list.empty()) {
        throw std::invalid_argument("sweep_delta_bar: empty n list");
    }
    struct Point {
        int n;
        uint64_t k;
    };
    std::vector<Point> points;
    for (int n : n_list) {
        const int limit = mode == EvalMode::Exact ? kMaxExactAverageBits : kMaxFloatAverageBits;
        if (n < 1 || n > limit) {
            throw std::invalid_argument("sweep_delta_bar: n=" + std::to_string(n) + " outside [1, " +
                                        std::to_string(limit) + "] for " + std::string(to_string(mode)) + " mode");
        }
        const uint64_t last = std::max<uint64_t>(1, inputs(n) - 1);
        for (uint64_t k = 1; k <= last; ++k) {
            points.push_back({n, k});
        }
    }
    std::vector<SweepRecord> out(points.size());
    parallel_for(points.size(), threads, [&](uint64_t i) {
        const auto [n, k] = points[i];
        out[i] = mode == EvalMode::Exact ? exact_record(n, k, std::nullopt, pbar(k, n), qbar(k, n))
                                         : float_record(n, k, std::nullopt, approx::pbar(k, n), approx::qbar(k, n));
    });
    sort_canonical(out);
    flag_argmax(out);
    return out;
}

double max_second_difference(std::span<const SweepRecord> records) {
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < records.size(); ++i) {
        const SweepRecord &a = records[i - 1];
        const SweepRecord &b = records[i];
        const SweepRecord &c = records[i + 1];
        if (!same_curve(a, b) || !same_curve(b, c) || b.k != a.k + 1 || c.k != b.k + 1) {
            continue;
        }
        worst = std::max(worst, c.delta - 2 * b.delta + a.delta);
    }
    return worst;
}

bool is_non_increasing(std::span<const SweepRecord> records) {
    const bool exact = std::all_of(records.begin(), records.end(), [](const SweepRecord &r) {
        return r.delta_exact.has_value();
    });
    for (size_t i = 1; i < records.size(); ++i) {
        const SweepRecord &a = records[i - 1];
        const SweepRecord &b = records[i];
        if (!same_curve(a, b)) {
            continue;
        }
        if (exact ? (*b.delta_exact > *a.delta_exact) : (b.delta > a.delta)) {
            return false;
        }
    }
    return true;
}

std::vector<SweepRecord> figure1_records(unsigned threads) {
    const std::vector<int> ns = {5, 6, 7, 8, 9, 10, 11, 12};
    return sweep_delta1(ns, 1, EvalMode::Exact, threads);
}

std::vector<SweepRecord> figure2_records(unsigned threads) {
    const std::vector<uint64_t> ms = {3, 10, 20, 30, 40, 60};
    return sweep_delta_m(7, ms, {1, 128}, EvalMode::Exact, threads);
}

std::vector<SweepRecord> figure3_records(unsigned threads) {
    const std::vector<int> ns = {3, 6, 7};
    return sweep_delta_bar(ns, EvalMode::Exact, threads);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records) {
    out << "n,k,m,p_exact,q_exact,delta,mode\n";
    for (const SweepRecord &r : records) {
        out << r.n << ',' << r.k << ',';
        if (r.m) {
            out << *r.m;
        }
        out << ',' << format_double(r.p) << ',' << format_double(r.q) << ',' << format_double(r.delta) << ','
            << to_string(r.mode) << '\n';
    }
}

NegativeRegion find_negative_region(int n, uint64_t m) {
    if (n < 1 || n > kMaxAnalyticBits) {
        throw std::invalid_argument("find_negative_region: n=" + std::to_string(n) + " out of range");
    }
    if (m < 1 || m >= inputs(n)) {
        throw std::invalid_argument("find_negative_region: m=" + std::to_string(m) + " outside [1, 2^n - 1]");
    }
    NegativeRegion region;
    const uint64_t top = inputs(n);
    uint64_t lo = 0;
    if (n <= kMaxExactSignBits) {
        region.mode = EvalMode::Exact;
        for (uint64_t k = top; k >= 1 && delta_m(k, n, m).sign() < 0; --k) {
            lo = k;
        }
    } else {
        region.mode = EvalMode::Float;
        constexpr double kZeroBand = 1e-12;
        for (uint64_t k = top; k >= 1; --k) {
            const double d = approx::delta_m(k, n, m);
            if (std::fabs(d) <= kZeroBand) {
                region.indeterminate = true;
                break;
            }
            if (d > 0) {
                break;
            }
            lo = k;
        }
    }
    if (lo != 0) {
        region.interval = KRange{lo, top};
    }
    return region;
}

bool ReconcileReport::any_flagged() const {
    return std::any_of(rows.begin(), rows.end(), [](const ReconcileRow &r) { return r.flagged; });
}

namespace {

ReconcileRow compare_row(std::string procedure, double analytic, const McEstimate &e) {
    ReconcileRow row;
    row.procedure = std::move(procedure);
    row.analytic = analytic;
    row.empirical = e;
    row.sigma = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(e.trials));
    const double diff = e.estimate - analytic;
    if (row.sigma > 0) {
        row.z = diff / row.sigma;
    } else {
        row.z = diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    row.flagged = !(std::fabs(row.z) <= kReconcileZLimit);
    return row;
}

}  // namespace

ReconcileReport reconcile(int n, uint64_t m, uint64_t k, uint64_t trials, uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw std::invalid_argument("reconcile: trials must be >= 1");
    }
    check_table_bits(n);
    if (m > inputs(n)) {
        throw std::invalid_argument("reconcile: m=" + std::to_string(m) + " outside [0, 2^n]");
    }
    if (k < 1 || k > inputs(n)) {
        throw std::invalid_argument("reconcile: k=" + std::to_string(k) + " outside [1, 2^n]");
    }
    Rng placement = substream(seed, "fm-placement", 0);
    const TruthTable tt = make_fm(n, m, false, placement);
    const bool constant = m == 0 || m == inputs(n);

    ReconcileReport report{n, m, k, trials, seed, {}};
    const double p = constant ? 0.0 : pm(k, n, m).to_double();
    const double q = constant ? 0.0 : qm(k, n, m).to_double();
    report.rows.push_back(compare_row("classical", p, classical_error_mc(tt, k, trials, seed, threads)));
    report.rows.push_back(compare_row("quantum", q, quantum_error_mc(tt, k, trials, seed, threads)));
    return report;
}

std::vector<GridPoint> default_reconcile_grid() {
    std::vector<GridPoint> grid;
    for (int n = 2; n <= 6; ++n) {
        const uint64_t size = inputs(n);
        std::vector<uint64_t> ms = {1, size / 4, size / 2};
        std::vector<uint64_t> ks = {1, size / 2, size - 1};
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        for (uint64_t m : ms) {
            for (uint64_t k : ks) {
                grid.push_back({n, m, k});
            }
        }
    }
    return grid;
}

std::vector<ReconcileReport> reconcile_grid(std::span<const GridPoint> grid, uint64_t trials, uint64_t seed,
                                            unsigned threads) {
    std::vector<ReconcileReport> out;
    out.reserve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const GridPoint &g = grid[i];
        out.push_back(reconcile(g.n, g.m, g.k, trials, derive_seed(seed, "reconcile-point", i), threads));
    }
    return out;
}

std::string reconcile_to_json(std::span<const ReconcileReport> reports) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["reports"] = ordered_json::array();
    bool flagged = false;
    for (const ReconcileReport &r : reports) {
        ordered_json j;
        j["n"] = r.n;
        j["m"] = r.m;
        j["k"] = r.k;
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        j["rows"] = ordered_json::array();
        for (const ReconcileRow &row : r.rows) {
            ordered_json jr;
            jr["procedure"] = row.procedure;
            jr["analytic"] = row.analytic;
            jr["estimate"] = row.empirical.estimate;
            jr["hits"] = row.empirical.hits;
            jr["std_error"] = row.empirical.std_error;
            jr["wilson_lo"] = row.empirical.wilson_lo;
            jr["wilson_hi"] = row.empirical.wilson_hi;
            jr["sigma"] = row.sigma;
            jr["z"] = std::isfinite(row.z) ? ordered_json(row.z) : ordered_json(nullptr);
            jr["flagged"] = row.flagged;
            j["rows"].push_back(std::move(jr));
        }
        flagged = flagged || r.any_flagged();
        doc["reports"].push_back(std::move(j));
    }
    doc["any_flagged"] = flagged;
    return doc.dump(2) + "\n";
}

std::string reconcile_to_text(std::span<const ReconcileReport> reports) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%3s %6s %6s  %-9s %12s %12s %10s %9s  %s\n", "n", "m", "k", "procedure",
                  "analytic", "empirical", "std_err", "z", "flag");
    os << line;
    size_t flagged = 0;
    for (const ReconcileReport &r : reports) {
        for (const ReconcileRow &row : r.rows) {
            std::snprintf(line, sizeof(line), "%3d %6llu %6llu  %-9s %12.6g %12.6g %10.3g %9.3f  %s\n", r.n,
                          static_cast<unsigned long long>(r.m), static_cast<unsigned long long>(r.k),
                          row.procedure.c_str(), row.analytic, row.empirical.estimate, row.empirical.std_error, row.z,
                          row.flagged ? "DISCREPANCY" : "ok");
            os << line;
            flagged += row.flagged ? 1 : 0;
        }
    }
    os << (flagged == 0 ? "all estimates within 4 sigma\n" : std::to_string(flagged) + " discrepancies\n");
    return os.str();
}

}  // namespace djq
