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

#ifndef DJQ_RNG_H
#define DJQ_RNG_H

#include <cstdint>
#include <limits>
#include <string_view>

namespace djq {

/// SplitMix64 generator. Satisfies UniformRandomBitGenerator.
///
/// Cheap to construct, so every Monte Carlo trial can own a fresh stream
/// derived from (seed, label, index) without sharing state across trials.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    result_type operator()() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

   private:
    uint64_t state_;
};

using Rng = SplitMix64;

/// Default seed used by every entry point that takes an optional seed.
inline constexpr uint64_t kDefaultSeed = 0;

/// Bijective 64-bit finalizer (the SplitMix64 output function).
uint64_t mix64(uint64_t x);

/// Seed for the sub-stream identified by (seed, label, index).
///
/// The label is hashed with FNV-1a, then the three components are folded
/// through mix64. Distinct labels or indices give unrelated streams.
uint64_t derive_seed(uint64_t seed, std::string_view label, uint64_t index);

inline Rng substream(uint64_t seed, std::string_view label, uint64_t index) {
    return Rng(derive_seed(seed, label, index));
}

/// Uniform integer in [0, bound). bound must be nonzero.
uint64_t uniform_below(Rng &rng, uint64_t bound);

/// Bernoulli draw with success probability p (clamped to [0, 1]).
/// p == 0 never succeeds and p == 1 always succeeds.
bool bernoulli(Rng &rng, double p);

}  // namespace djq

#endif  // DJQ_RNG_H
