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

#include "djq/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace djq {

McEstimate make_estimate(uint64_t hits, uint64_t trials) {
    McEstimate e;
    e.trials = trials;
    e.hits = hits;
    if (trials == 0) {
        return e;
    }
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / t;
    e.estimate = p;
    e.std_error = std::sqrt(p * (1.0 - p) / t);
    constexpr double z = 1.959963984540054;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * t)) / (1 + z2 / t);
    const double half = z / (1 + z2 / t) * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t));
    e.wilson_lo = std::max(0.0, centre - half);
    e.wilson_hi = std::min(1.0, centre + half);
    return e;
}

unsigned default_threads() {
    return std::max(1u, std::thread::hardware_concurrency());
}

uint64_t count_hits(uint64_t trials, unsigned threads, const std::function<bool(uint64_t)> &hit) {
    if (threads == 0) {
        threads = default_threads();
    }
    const uint64_t workers = std::min<uint64_t>(threads, std::max<uint64_t>(1, trials / 1024));
    if (workers <= 1) {
        uint64_t c = 0;
        for (uint64_t t = 0; t < trials; ++t) {
            c += hit(t) ? 1 : 0;
        }
        return c;
    }
    std::vector<uint64_t> counts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const uint64_t lo = trials * w / workers;
            const uint64_t hi = trials * (w + 1) / workers;
            uint64_t c = 0;
            for (uint64_t t = lo; t < hi; ++t) {
                c += hit(t) ? 1 : 0;
            }
            counts[w] = c;
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    uint64_t total = 0;
    for (uint64_t c : counts) {
        total += c;
    }
    return total;
}

void parallel_for(uint64_t count, unsigned threads, const std::function<void(uint64_t)> &body) {
    if (threads == 0) {
        threads = default_threads();
    }
    const uint64_t workers = std::min<uint64_t>(threads, count);
    if (workers <= 1) {
        for (uint64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (uint64_t i = count * w / workers; i < count * (w + 1) / workers; ++i) {
                body(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

}  // namespace djq
