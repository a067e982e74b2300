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

#ifndef DJQ_QUANTUM_SIM_H
#define DJQ_QUANTUM_SIM_H

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "djq/decision.h"
#include "djq/monte_carlo.h"
#include "djq/rng.h"
#include "djq/truth_table.h"

namespace djq {

/// Largest register width simulated (2^24 doubles = 128 MiB).
inline constexpr int kMaxStateBits = 24;

/// Throws std::invalid_argument unless 1 <= n <= limit.
void check_state_bits(int n, int limit = kMaxStateBits);

/// Dense pure state on n qubits. Basis index bit j is qubit j.
template <typename Amp>
class BasicStatevector {
   public:
    using value_type = Amp;

    /// The basis state |index>.
    BasicStatevector(int n, uint64_t index, int limit = kMaxStateBits) : n_(n) {
        check_state_bits(n, limit);
        amps_.assign(size_t{1} << n, Amp{});
        if (index >= amps_.size()) {
            throw std::out_of_range("basis index " + std::to_string(index) + " outside register");
        }
        amps_[index] = Amp{1};
    }

    BasicStatevector(int n, std::vector<Amp> amps, int limit = kMaxStateBits) : n_(n), amps_(std::move(amps)) {
        check_state_bits(n, limit);
        if (amps_.size() != (size_t{1} << n)) {
            throw std::invalid_argument("amplitude vector must have 2^n entries");
        }
    }

    int n() const {
        return n_;
    }
    uint64_t size() const {
        return amps_.size();
    }
    const Amp &operator[](uint64_t z) const {
        return amps_[z];
    }
    Amp &operator[](uint64_t z) {
        return amps_[z];
    }
    std::span<const Amp> amplitudes() const {
        return amps_;
    }
    std::span<Amp> amplitudes() {
        return amps_;
    }

    double norm_squared() const {
        double s = 0.0;
        for (const Amp &a : amps_) {
            s += std::norm(a);
        }
        return s;
    }

   private:
    int n_;
    std::vector<Amp> amps_;
};

/// Real amplitudes suffice for Deutsch-Jozsa states.
using Statevector = BasicStatevector<double>;
using ComplexStatevector = BasicStatevector<std::complex<double>>;

/// In-place unnormalized Walsh-Hadamard transform (butterflies a+b, a-b),
/// fixed butterfly order. v.size() must be a power of two.
template <typename Amp>
void walsh_hadamard(std::span<Amp> v) {
    const size_t len = v.size();
    for (size_t h = 1; h < len; h <<= 1) {
        for (size_t i = 0; i < len; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                const Amp a = v[j];
                const Amp b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

/// H on a single qubit.
template <typename Amp>
void apply_hadamard(BasicStatevector<Amp> &sv, int qubit) {
    if (qubit < 0 || qubit >= sv.n()) {
        throw std::out_of_range("qubit index outside register");
    }
    constexpr double r = 0.70710678118654752440;
    const uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t z = 0; z < sv.size(); ++z) {
        if (z & bit) {
            continue;
        }
        const Amp a = sv[z];
        const Amp b = sv[z | bit];
        sv[z] = (a + b) * r;
        sv[z | bit] = (a - b) * r;
    }
}

/// H on every qubit: unnormalized transform scaled once by 2^(-n/2).
template <typename Amp>
void apply_hadamard_layer(BasicStatevector<Amp> &sv) {
    walsh_hadamard(sv.amplitudes());
    double scale = std::ldexp(1.0, -(sv.n() / 2));
    if (sv.n() % 2 != 0) {
        scale *= 0.70710678118654752440;
    }
    for (Amp &a : sv.amplitudes()) {
        a *= scale;
    }
}

/// Diagonal oracle |x> -> (-1)^f(x) |x>, i.e. U_f with its target qubit in
/// (|0> - |1>)/sqrt(2) traced out.
template <typename Amp>
void apply_phase_oracle(BasicStatevector<Amp> &sv, const TruthTable &tt) {
    if (tt.n() != sv.n()) {
        throw std::invalid_argument("oracle width differs from register width");
    }
    for (uint64_t x = 0; x < sv.size(); ++x) {
        if (tt[x]) {
            sv[x] = -sv[x];
        }
    }
}

/// Output of H^n, phase oracle, H^n applied to |0...0>.
///
/// Both layers are run as unnormalized transforms and the combined factor
/// 2^-n is applied at the end, so every amplitude is the exact dyadic
/// (sum_x (-1)^(z.x + f(x))) / 2^n for n <= 24.
Statevector dj_output_state(const TruthTable &tt);

struct MeasurementDistribution {
    std::vector<double> probabilities;

    double p_zero() const {
        return probabilities.empty() ? 0.0 : probabilities.front();
    }
};

/// Computational-basis outcome probabilities, each clamped to [0, 1].
MeasurementDistribution measurement_distribution(const Statevector &sv);

/// |amp(0)|^2. Throws std::invalid_argument if |norm^2 - 1| > 1e-9.
double prob_z_zero(const Statevector &sv);

/// Runs the circuit up to k times, stopping at the first z != 0. Each
/// iteration is a Bernoulli draw with the exact z = 0 probability.
DecisionOutcome quantum_decide(const TruthTable &tt, uint64_t k, Rng &rng);

/// As quantum_decide, from a precomputed per-iteration p(z = 0).
DecisionOutcome quantum_decide_with(double p_zero, uint64_t k, Rng &rng);

/// Fraction of trials answering Constant on a non-constant table; trial t
/// draws from substream(seed, "quantum", t).
McEstimate quantum_error_mc(const TruthTable &tt, uint64_t k, uint64_t trials, uint64_t seed, unsigned threads = 0);

}  // namespace djq

#endif  // DJQ_QUANTUM_SIM_H
