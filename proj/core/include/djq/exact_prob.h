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

#ifndef DJQ_EXACT_PROB_H
#define DJQ_EXACT_PROB_H

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace djq {

/// A value in log space. log_value is the natural log and is only
/// meaningful when is_zero is false.
struct LogValue {
    bool is_zero = true;
    double log_value = 0.0;
};

/// Exact rational probability in [0, 1], always in lowest terms.
class ExactProb {
   public:
    ExactProb() = default;

    /// Throws std::invalid_argument if den == 0 or num/den is outside [0, 1].
    ExactProb(const mpz_class &num, const mpz_class &den);
    explicit ExactProb(mpq_class value);

    static ExactProb zero() {
        return ExactProb();
    }
    static ExactProb one() {
        return ExactProb(mpq_class(1));
    }

    const mpq_class &value() const {
        return value_;
    }
    mpz_class num() const {
        return value_.get_num();
    }
    mpz_class den() const {
        return value_.get_den();
    }
    bool is_zero() const {
        return sgn(value_) == 0;
    }

    /// Nearest-below double (truncation, under 1 ulp from the exact value).
    double to_double() const;
    LogValue log() const;

    /// "num/den" in base 10, or just "num" when den == 1.
    std::string to_string() const;

    friend bool operator==(const ExactProb &a, const ExactProb &b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExactProb &a, const ExactProb &b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class value_;
};

/// Signed exact rational: a difference of two probabilities.
class EfficiencyValue {
   public:
    EfficiencyValue() = default;
    explicit EfficiencyValue(mpq_class value) : value_(std::move(value)) {
        value_.canonicalize();
    }

    static EfficiencyValue difference(const ExactProb &p, const ExactProb &q) {
        return EfficiencyValue(mpq_class(p.value() - q.value()));
    }

    const mpq_class &value() const {
        return value_;
    }
    /// -1, 0 or +1.
    int sign() const {
        return sgn(value_);
    }
    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const EfficiencyValue &a, const EfficiencyValue &b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const EfficiencyValue &a, const EfficiencyValue &b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class value_;
};

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
mpz_class pochhammer(const mpz_class &a, uint64_t k);
mpz_class pochhammer(int64_t a, uint64_t k);

/// Binomial coefficient C(top, k), zero when k > top.
mpz_class binomial(uint64_t top, uint64_t k);

/// a^e / 2^shift as an exact rational.
mpq_class pow_over_pow2(const mpz_class &a, uint64_t e, uint64_t shift);

}  // namespace djq

#endif  // DJQ_EXACT_PROB_H
