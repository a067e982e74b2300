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

#include "djq/exact_prob.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace djq {

namespace {

// mpz_get_d_2exp gives mantissa in [0.5, 1), so log|z| = log(d) + e log 2.
double log_abs(const mpz_class &z) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * std::numbers::ln2;
}

}  // namespace

ExactProb::ExactProb(const mpz_class &num, const mpz_class &den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("ExactProb: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
    if (sgn(value_) < 0 || cmp(value_, 1) > 0) {
        throw std::invalid_argument("ExactProb: value " + value_.get_str() + " outside [0, 1]");
    }
}

ExactProb::ExactProb(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) < 0 || cmp(value_, 1) > 0) {
        throw std::invalid_argument("ExactProb: value " + value_.get_str() + " outside [0, 1]");
    }
}

double ExactProb::to_double() const {
    return mpq_get_d(value_.get_mpq_t());
}

LogValue ExactProb::log() const {
    if (is_zero()) {
        return {};
    }
    return {false, log_abs(value_.get_num()) - log_abs(value_.get_den())};
}

std::string ExactProb::to_string() const {
    return value_.get_str(10);
}

double EfficiencyValue::to_double() const {
    return mpq_get_d(value_.get_mpq_t());
}

std::string EfficiencyValue::to_string() const {
    return value_.get_str(10);
}

mpz_class pochhammer(const mpz_class &a, uint64_t k) {
    mpz_class result = 1;
    if (k == 0) {
        return result;
    }
    // A nonpositive start whose run reaches zero gives a zero factor.
    if (sgn(a) <= 0 && cmp(mpz_class(-a), k - 1) <= 0) {
        return 0;
    }
    if (sgn(a) > 0 && a.fits_ulong_p()) {
        // (a)_k = (a+k-1)! / (a-1)! = C(a+k-1, k) k!
        mpz_class top = a + k - 1;
        if (top.fits_ulong_p()) {
            mpz_class fac;
            mpz_bin_uiui(result.get_mpz_t(), top.get_ui(), k);
            mpz_fac_ui(fac.get_mpz_t(), k);
            return result * fac;
        }
    }
    if (sgn(a) < 0 && mpz_class(-a).fits_ulong_p()) {
        // (a)_k = (-1)^k (-a)(-a-1)...(-a-k+1) = (-1)^k C(-a, k) k!
        mpz_class fac;
        mpz_bin_uiui(result.get_mpz_t(), mpz_class(-a).get_ui(), k);
        mpz_fac_ui(fac.get_mpz_t(), k);
        result *= fac;
        return (k & 1) ? mpz_class(-result) : result;
    }
    mpz_class factor = a;
    for (uint64_t i = 0; i < k; ++i, ++factor) {
        result *= factor;
    }
    return result;
}

mpz_class pochhammer(int64_t a, uint64_t k) {
    return pochhammer(mpz_class(static_cast<long>(a)), k);
}

mpz_class binomial(uint64_t top, uint64_t k) {
    mpz_class r;
    if (k > top) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), top, k);
    return r;
}

mpq_class pow_over_pow2(const mpz_class &a, uint64_t e, uint64_t shift) {
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), e);
    mpz_class den = 1;
    den <<= shift;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace djq
