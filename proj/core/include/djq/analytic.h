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

#ifndef DJQ_ANALYTIC_H
#define DJQ_ANALYTIC_H

#include <cstdint>

#include "djq/exact_prob.h"

/// Closed-form error probabilities of the classical and iterated
/// Deutsch-Jozsa constancy tests, and their differences (efficiencies).
///
/// Notation: n is the bit-width, N = 2^n the number of inputs, k the query
/// budget, and m the number of inputs on which an f_m-type function takes
/// its minority value. Exact functions return reduced rationals; the
/// functions in `approx` evaluate the same expressions in floating point
/// (log space where the terms under- or overflow) for sizes where exact
/// arithmetic is impractical.
///
/// Range violations throw std::invalid_argument with a message naming the
/// bound.
namespace djq {

/// Largest n for which pbar/qbar/delta_bar are evaluated exactly.
inline constexpr int kMaxExactAverageBits = 10;
/// Largest n accepted by the float average-case evaluators.
inline constexpr int kMaxFloatAverageBits = 16;
/// Largest n accepted anywhere (k must fit in 64 bits).
inline constexpr int kMaxAnalyticBits = 62;
/// Largest n for which kstar_exact scans the full grid.
inline constexpr int kMaxKstarBits = 16;
/// Size cap for any single exact intermediate, in bits.
inline constexpr uint64_t kMaxExactBits = uint64_t{1} << 28;

/// Classical worst case: 1 - k/2^n. Requires n >= 1, 1 <= k <= 2^n.
ExactProb p1(uint64_t k, int n);

/// Same value as p1 built from the product of conditional probabilities
/// prod_{j=1..k} (2^n - j) / (2^n - j + 1).
ExactProb p1_product(uint64_t k, int n);

/// Quantum worst case: (1 - 2^(1-n))^(2k). Requires n >= 2, k >= 1.
ExactProb q1(uint64_t k, int n);

EfficiencyValue delta1(uint64_t k, int n);

/// Classical error on an f_m-type function:
/// [(m - 2^n)_k + (-m)_k] / (-2^n)_k. Requires 0 <= m <= 2^n, 1 <= k <= 2^n.
ExactProb pm(uint64_t k, int n, uint64_t m);

/// Quantum error on an f_m-type function: (1 - m/2^(n-1))^(2k).
/// Requires 0 <= m <= 2^n, k >= 1.
ExactProb qm(uint64_t k, int n, uint64_t m);

EfficiencyValue delta_m(uint64_t k, int n, uint64_t m);

/// The single-iteration probability of measuring z = 0 for an f_m-type
/// function, (1 - m/2^(n-1))^2.
ExactProb qm_base(int n, uint64_t m);

/// Average classical error over a uniformly random n-bit function. The m
/// and 2^n - m terms are folded (factor 2) and the balanced term is kept
/// separate; constants contribute nothing. Requires n <= kMaxExactAverageBits.
ExactProb pbar(uint64_t k, int n);

/// Average quantum error, summing m = 1 .. 2^n - 1 with weights
/// C(2^n, m) / 2^(2^n). Constants carry zero error and are not summed.
ExactProb qbar(uint64_t k, int n);

EfficiencyValue delta_bar(uint64_t k, int n);

/// Floating evaluation of the approximate maximizer of delta1(., n).
/// Requires n >= 3.
double kstar_closed_form(int n);

/// argmax of delta1(k, n) over 1 <= k <= 2^n - 1, smallest k on ties.
/// Requires 3 <= n <= kMaxKstarBits.
uint64_t kstar_exact(int n);

/// As kstar_exact but also accepts n = 2.
uint64_t argmax_delta1(int n);

namespace approx {

double p1(uint64_t k, int n);
double q1(uint64_t k, int n);
double delta1(uint64_t k, int n);
double pm(uint64_t k, int n, uint64_t m);
double qm(uint64_t k, int n, uint64_t m);
double delta_m(uint64_t k, int n, uint64_t m);

/// Log-sum-exp over long-double log terms with a fixed pairwise
/// partition, so the result does not depend on evaluation order. The
/// absolute error stays below 1e-12 up to n = kMaxFloatAverageBits, beyond
/// which lgamma cancellation would dominate; larger n is rejected.
double pbar(uint64_t k, int n);
double qbar(uint64_t k, int n);
double delta_bar(uint64_t k, int n);

}  // namespace approx

}  // namespace djq

#endif  // DJQ_ANALYTIC_H
