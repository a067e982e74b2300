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

#include "djq/rng.h"

#include <random>

namespace djq {

uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, std::string_view label, uint64_t index) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    uint64_t s = mix64(seed + 0x9E3779B97F4A7C15ULL);
    s = mix64(s ^ h);
    s = mix64(s + 0x9E3779B97F4A7C15ULL * (index + 1));
    return s;
}

uint64_t uniform_below(Rng &rng, uint64_t bound) {
    std::uniform_int_distribution<uint64_t> dist(0, bound - 1);
    return dist(rng);
}

bool bernoulli(Rng &rng, double p) {
    if (!(p > 0.0)) {
        return false;
    }
    if (p >= 1.0) {
        return true;
    }
    // 53 random mantissa bits; u is uniform on [0, 1).
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

}  // namespace djq
