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

#include "djq/analytic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace djq {

namespace {

[[noreturn]] void range_error(const std::string &what) {
    throw std::invalid_argument(what);
}

void check_n(int n, int lo, int hi, const char *fn) {
    if (n < lo || n > hi) {
        range_error(std::string(fn) + ": n=" + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
    }
}

uint64_t inputs(int n) {
    return uint64_t{1} << n;
}

void check_k_budget(uint64_t k, int n, const char *fn) {
    if (k < 1 || k > inputs(n)) {
        range_error(std::string(fn) + ": k=" + std::to_string(k) + " outside [1, 2^n=" + std::to_string(inputs(n)) +
                    "]");
    }
}

void check_k_positive(uint64_t k, const char *fn) {
    if (k < 1) {
        range_error(std::string(fn) + ": k must be >= 1");
    }
}

void check_m(uint64_t m, int n, const char *fn) {
    if (m > inputs(n)) {
        range_error(std::string(fn) + ": m=" + std::to_string(m) + " outside [0, 2^n=" + std::to_string(inputs(n)) +
                    "]");
    }
}

void check_exact_size(uint64_t bits, const char *fn) {
    if (bits > kMaxExactBits) {
        range_error(std::string(fn) + ": exact result needs about " + std::to_string(bits) +
                    " bits (limit " + std::to_string(kMaxExactBits) + "); use float mode");
    }
}

mpz_class pow2(uint64_t e) {
    mpz_class r = 1;
    r <<= e;
    return r;
}

mpz_class to_mpz(uint64_t v) {
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

// (1 - m/2^(n-1))^(2k) = (2^(n-1) - m)^(2k) / 2^((n-1) 2k)
ExactProb quantum_power(uint64_t k, int n, uint64_t m) {
    mpz_class base = to_mpz(inputs(n) / 2) - to_mpz(m);
    return ExactProb(pow_over_pow2(base, 2 * k, static_cast<uint64_t>(n - 1) * 2 * k));
}

}  // namespace

ExactProb p1(uint64_t k, int n) {
    check_n(n, 1, kMaxAnalyticBits, "p1");
    check_k_budget(k, n, "p1");
    return ExactProb(to_mpz(inputs(n) - k), to_mpz(inputs(n)));
}

ExactProb p1_product(uint64_t k, int n) {
    check_n(n, 1, kMaxAnalyticBits, "p1_product");
    check_k_budget(k, n, "p1_product");
    check_exact_size(k * static_cast<uint64_t>(n), "p1_product");
    mpz_class num = 1;
    mpz_class den = 1;
    mpz_class size = to_mpz(inputs(n));
    for (uint64_t j = 1; j <= k; ++j) {
        num *= size - j;
        den *= size - (j - 1);
    }
    return ExactProb(num, den);
}

ExactProb q1(uint64_t k, int n) {
    check_n(n, 2, kMaxAnalyticBits, "q1");
    check_k_positive(k, "q1");
    check_exact_size(2 * k * static_cast<uint64_t>(n), "q1");
    return quantum_power(k, n, 1);
}

EfficiencyValue delta1(uint64_t k, int n) {
    ExactProb p = p1(k, n);
    return EfficiencyValue::difference(p, q1(k, n));
}

ExactProb pm(uint64_t k, int n, uint64_t m) {
    check_n(n, 1, kMaxAnalyticBits, "pm");
    check_m(m, n, "pm");
    check_k_budget(k, n, "pm");
    check_exact_size(k * static_cast<uint64_t>(n), "pm");
    mpz_class size = to_mpz(inputs(n));
    mpz_class mm = to_mpz(m);
    // Numerators first: a zero Pochhammer factor stands for a binomial
    // whose lower index exceeds the upper one.
    mpz_class num = pochhammer(mpz_class(mm - size), k) + pochhammer(mpz_class(-mm), k);
    mpz_class den = pochhammer(mpz_class(-size), k);
    return ExactProb(num, den);
}

ExactProb qm(uint64_t k, int n, uint64_t m) {
    check_n(n, 1, kMaxAnalyticBits, "qm");
    check_m(m, n, "qm");
    check_k_positive(k, "qm");
    check_exact_size(2 * k * static_cast<uint64_t>(n), "qm");
    return quantum_power(k, n, m);
}

ExactProb qm_base(int n, uint64_t m) {
    check_n(n, 1, kMaxAnalyticBits, "qm_base");
    check_m(m, n, "qm_base");
    return quantum_power(1, n, m);
}

EfficiencyValue delta_m(uint64_t k, int n, uint64_t m) {
    ExactProb p = pm(k, n, m);
    return EfficiencyValue::difference(p, qm(k, n, m));
}

ExactProb pbar(uint64_t k, int n) {
    check_n(n, 1, kMaxExactAverageBits, "pbar (exact)");
    check_k_budget(k, n, "pbar");
    const uint64_t size = inputs(n);
    const uint64_t half = size / 2;
    const auto s = static_cast<int64_t>(size);
    // Common denominator 2^(2^n) (-2^n)_k; accumulate integer numerators.
    mpz_class sum;
    for (uint64_t m = 1; m < half; ++m) {
        const auto mi = static_cast<int64_t>(m);
        sum += binomial(size, m) * (pochhammer(mi - s, k) + pochhammer(-mi, k));
    }
    sum *= 2;
    sum += binomial(size, half) * 2 * pochhammer(-static_cast<int64_t>(half), k);
    mpz_class den = pow2(size) * pochhammer(-s, k);
    return ExactProb(sum, den);
}

ExactProb qbar(uint64_t k, int n) {
    check_n(n, 1, kMaxExactAverageBits, "qbar (exact)");
    check_k_budget(k, n, "qbar");
    const uint64_t size = inputs(n);
    const auto half = static_cast<long>(size / 2);
    mpz_class sum;
    mpz_class term;
    for (uint64_t m = 1; m < size; ++m) {
        mpz_class base = half - static_cast<long>(m);
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), 2 * k);
        sum += binomial(size, m) * term;
    }
    mpz_class den = pow2(size + static_cast<uint64_t>(n - 1) * 2 * k);
    return ExactProb(sum, den);
}

EfficiencyValue delta_bar(uint64_t k, int n) {
    ExactProb p = pbar(k, n);
    return EfficiencyValue::difference(p, qbar(k, n));
}

double kstar_closed_form(int n) {
    check_n(n, 3, kMaxAnalyticBits, "kstar_closed_form");
    const double l = std::log1p(-std::ldexp(1.0, 1 - n));
    return 0.5 * std::log(-std::ldexp(1.0, -1 - n) / l) / l;
}

uint64_t argmax_delta1(int n) {
    check_n(n, 2, kMaxKstarBits, "argmax_delta1");
    // delta1(k) = A_k / 2^(e_k) with e_k = 2k(n-1),
    // A_k = (2^n - k) 2^(e_k - n) - (2^(n-1) - 1)^(2k).
    const uint64_t size = inputs(n);
    const uint64_t c = size / 2 - 1;
    const uint64_t step = static_cast<uint64_t>(n - 1) * 2;
    mpz_class qpow = 1;
    mpz_class best_a;
    uint64_t best_e = 0;
    uint64_t best_k = 0;
    mpz_class a;
    mpz_class lhs;
    mpz_class rhs;
    for (uint64_t k = 1; k < size; ++k) {
        qpow *= c;
        qpow *= c;
        const uint64_t e = step * k;
        a = to_mpz(size - k);
        a <<= e - static_cast<uint64_t>(n);
        a -= qpow;
        if (best_k == 0) {
            best_a = a;
            best_e = e;
            best_k = k;
            continue;
        }
        // a / 2^e > best_a / 2^best_e  <=>  a > best_a 2^(e - best_e)
        rhs = best_a;
        rhs <<= e - best_e;
        if (cmp(a, rhs) > 0) {
            best_a = a;
            best_e = e;
            best_k = k;
        }
    }
    return best_k;
}

uint64_t kstar_exact(int n) {
    check_n(n, 3, kMaxKstarBits, "kstar_exact");
    return argmax_delta1(n);
}

namespace approx {

namespace {

// Pairwise summation with a fixed split, independent of input order
// beyond the order of `v` itself.
long double pairwise_sum(const long double *v, size_t len) {
    if (len <= 8) {
        long double s = 0.0L;
        for (size_t i = 0; i < len; ++i) {
            s += v[i];
        }
        return s;
    }
    size_t mid = len / 2;
    return pairwise_sum(v, mid) + pairwise_sum(v + mid, len - mid);
}

// log(sum exp(l_i)); -inf entries are ignored. Returns -inf if all are.
long double log_sum_exp(std::vector<long double> logs) {
    long double hi = -INFINITY;
    for (long double l : logs) {
        hi = std::max(hi, l);
    }
    if (std::isinf(hi)) {
        return -INFINITY;
    }
    for (auto &l : logs) {
        l = std::isinf(l) ? 0.0L : std::exp(l - hi);
    }
    return hi + std::log(pairwise_sum(logs.data(), logs.size()));
}

long double log_binomial_weight(uint64_t size, uint64_t m) {
    const auto s = static_cast<long double>(size);
    const auto mm = static_cast<long double>(m);
    return std::lgamma(s + 1) - std::lgamma(mm + 1) - std::lgamma(s - mm + 1) - s * std::numbers::ln2_v<long double>;
}

// log(x(x-1)...(x-k+1) / N(N-1)...(N-k+1)); -inf when k > x.
long double log_falling_ratio(uint64_t x, uint64_t size, uint64_t k) {
    if (k > x) {
        return -INFINITY;
    }
    if (x == size) {
        return 0.0L;
    }
    const long double gap = static_cast<long double>(size - x);
    if (k <= 4096) {
        long double acc = 0.0L;
        for (uint64_t j = 0; j < k; ++j) {
            acc += std::log1p(-gap / static_cast<long double>(size - j));
        }
        return acc;
    }
    const auto xs = static_cast<long double>(x);
    const auto s = static_cast<long double>(size);
    const auto kk = static_cast<long double>(k);
    return (std::lgamma(xs + 1) - std::lgamma(xs - kk + 1)) - (std::lgamma(s + 1) - std::lgamma(s - kk + 1));
}

// 2k log|1 - m/2^(n-1)|, -inf at the balanced point.
long double log_quantum_power(uint64_t k, int n, uint64_t m) {
    const long double half = std::ldexp(1.0L, n - 1);
    const long double base = std::fabs(1.0L - static_cast<long double>(m) / half);
    if (base == 0.0L) {
        return -INFINITY;
    }
    return 2.0L * static_cast<long double>(k) * std::log(base);
}

}  // namespace

double p1(uint64_t k, int n) {
    check_n(n, 1, kMaxAnalyticBits, "p1");
    check_k_budget(k, n, "p1");
    return static_cast<double>(static_cast<long double>(inputs(n) - k) / std::ldexp(1.0L, n));
}

double q1(uint64_t k, int n) {
    check_n(n, 2, kMaxAnalyticBits, "q1");
    check_k_positive(k, "q1");
    const long double l = std::log1p(-std::ldexp(1.0L, 1 - n));
    return static_cast<double>(std::exp(2.0L * static_cast<long double>(k) * l));
}

double delta1(uint64_t k, int n) {
    return p1(k, n) - q1(k, n);
}

double pm(uint64_t k, int n, uint64_t m) {
    check_n(n, 1, kMaxAnalyticBits, "pm");
    check_m(m, n, "pm");
    check_k_budget(k, n, "pm");
    const uint64_t size = inputs(n);
    long double a = std::exp(log_falling_ratio(size - m, size, k));
    long double b = std::exp(log_falling_ratio(m, size, k));
    return static_cast<double>(a + b);
}

double qm(uint64_t k, int n, uint64_t m) {
    check_n(n, 1, kMaxAnalyticBits, "qm");
    check_m(m, n, "qm");
    check_k_positive(k, "qm");
    return static_cast<double>(std::exp(log_quantum_power(k, n, m)));
}

double delta_m(uint64_t k, int n, uint64_t m) {
    return pm(k, n, m) - qm(k, n, m);
}

double pbar(uint64_t k, int n) {
    check_n(n, 1, kMaxFloatAverageBits, "pbar (float)");
    check_k_budget(k, n, "pbar");
    const uint64_t size = inputs(n);
    const uint64_t half = size / 2;
    std::vector<long double> logs;
    logs.reserve(2 * half + 2);
    const long double ln2 = std::numbers::ln2_v<long double>;
    for (uint64_t m = 1; m < half; ++m) {
        const long double w = log_binomial_weight(size, m) + ln2;  // folded factor 2
        logs.push_back(w + log_falling_ratio(size - m, size, k));
        logs.push_back(w + log_falling_ratio(m, size, k));
    }
    logs.push_back(log_binomial_weight(size, half) + ln2 + log_falling_ratio(half, size, k));
    return static_cast<double>(std::exp(log_sum_exp(std::move(logs))));
}

double qbar(uint64_t k, int n) {
    check_n(n, 1, kMaxFloatAverageBits, "qbar (float)");
    check_k_budget(k, n, "qbar");
    const uint64_t size = inputs(n);
    std::vector<long double> logs;
    logs.reserve(size);
    for (uint64_t m = 1; m < size; ++m) {
        logs.push_back(log_binomial_weight(size, m) + log_quantum_power(k, n, m));
    }
    return static_cast<double>(std::exp(log_sum_exp(std::move(logs))));
}

double delta_bar(uint64_t k, int n) {
    return pbar(k, n) - qbar(k, n);
}

}  // namespace approx

}  // namespace djq
