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

#ifndef DJQ_SAMPLING_H
#define DJQ_SAMPLING_H

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "djq/rng.h"

namespace djq {

/// Draws distinct values from {0, ..., population - 1} one at a time,
/// uniformly among those not yet drawn (a lazily evaluated Fisher-Yates
/// shuffle). Small populations use a dense permutation; large ones keep
/// only the displaced entries in a hash map, so a draw of k values costs
/// O(k) regardless of the population size.
class DistinctSampler {
   public:
    explicit DistinctSampler(uint64_t population);

    uint64_t population() const {
        return population_;
    }
    uint64_t drawn() const {
        return drawn_;
    }
    uint64_t remaining() const {
        return population_ - drawn_;
    }

    /// Precondition: remaining() > 0.
    uint64_t next(Rng &rng);

    /// Starts a fresh shuffle over the same population.
    void reset();

   private:
    static constexpr uint64_t kDenseLimit = 1u << 12;

    uint64_t at(uint64_t i) const;
    void put(uint64_t i, uint64_t v);

    uint64_t population_;
    uint64_t drawn_ = 0;
    bool dense_;
    std::vector<uint64_t> perm_;
    std::unordered_map<uint64_t, uint64_t> displaced_;
};

}  // namespace djq

#endif  // DJQ_SAMPLING_H
