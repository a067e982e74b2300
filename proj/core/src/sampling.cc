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

#include "djq/sampling.h"

#include <numeric>
#include <stdexcept>

namespace djq {

DistinctSampler::DistinctSampler(uint64_t population)
    : population_(population), dense_(population <= kDenseLimit) {
    if (dense_) {
        perm_.resize(population_);
        std::iota(perm_.begin(), perm_.end(), uint64_t{0});
    }
}

uint64_t DistinctSampler::at(uint64_t i) const {
    if (dense_) {
        return perm_[i];
    }
    auto it = displaced_.find(i);
    return it == displaced_.end() ? i : it->second;
}

void DistinctSampler::put(uint64_t i, uint64_t v) {
    if (dense_) {
        perm_[i] = v;
    } else {
        displaced_[i] = v;
    }
}

uint64_t DistinctSampler::next(Rng &rng) {
    if (drawn_ >= population_) {
        throw std::out_of_range("DistinctSampler: population exhausted");
    }
    uint64_t j = drawn_ + uniform_below(rng, population_ - drawn_);
    uint64_t picked = at(j);
    put(j, at(drawn_));
    put(drawn_, picked);
    ++drawn_;
    return picked;
}

void DistinctSampler::reset() {
    if (dense_) {
        std::iota(perm_.begin(), perm_.end(), uint64_t{0});
    } else {
        displaced_.clear();
    }
    drawn_ = 0;
}

}  // namespace djq
