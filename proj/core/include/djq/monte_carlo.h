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

#ifndef DJQ_MONTE_CARLO_H
#define DJQ_MONTE_CARLO_H

#include <cstdint>
#include <functional>

namespace djq {

/// A binomial proportion estimated from Monte Carlo trials.
struct McEstimate {
    uint64_t trials = 0;
    uint64_t hits = 0;
    double estimate = 0.0;
    /// sqrt(p(1-p)/trials) at the estimate.
    double std_error = 0.0;
    /// Wilson score interval at 95% confidence.
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;

    bool operator==(const McEstimate &) const = default;
};

McEstimate make_estimate(uint64_t hits, uint64_t trials);

/// Number of worker threads used when a caller passes threads == 0.
unsigned default_threads();

/// Counts the trials t in [0, trials) for which hit(t) is true. Trials are
/// partitioned into contiguous blocks across `threads` workers; since each
/// trial depends only on its index, the count is the same for any thread
/// count.
uint64_t count_hits(uint64_t trials, unsigned threads, const std::function<bool(uint64_t)> &hit);

/// Calls body(i) for every i in [0, count), spread over `threads` workers
/// in contiguous blocks. body must only write state owned by index i.
void parallel_for(uint64_t count, unsigned threads, const std::function<void(uint64_t)> &body);

}  // namespace djq

#endif  // DJQ_MONTE_CARLO_H
