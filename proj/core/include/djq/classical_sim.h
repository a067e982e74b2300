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

#ifndef DJQ_CLASSICAL_SIM_H
#define DJQ_CLASSICAL_SIM_H

#include <cstdint>

#include "djq/decision.h"
#include "djq/exact_prob.h"
#include "djq/monte_carlo.h"
#include "djq/rng.h"
#include "djq/truth_table.h"

namespace djq {

/// Queries distinct inputs, drawn uniformly without replacement, until k
/// queries have been made or two outputs differ. The verdict is Constant
/// iff every observed output was equal. Requires 1 <= k <= 2^n.
DecisionOutcome classical_decide(const TruthTable &tt, uint64_t k, Rng &rng, bool keep_transcript = true);

struct ClassicalError {
    ExactProb probability;
    /// Set for constant tables, where declaring "constant" is never wrong.
    bool vacuous = false;
};

/// Exact probability that classical_decide wrongly answers Constant.
ClassicalError classical_error_exact(const TruthTable &tt, uint64_t k);

/// Fraction of `trials` runs answering Constant on a non-constant table
/// (0 for constant tables). Trial t draws from substream(seed,
/// "classical", t). Throws std::invalid_argument if trials == 0.
McEstimate classical_error_mc(const TruthTable &tt, uint64_t k, uint64_t trials, uint64_t seed,
                              unsigned threads = 0);

}  // namespace djq

#endif  // DJQ_CLASSICAL_SIM_H
