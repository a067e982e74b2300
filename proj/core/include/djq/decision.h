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

#ifndef DJQ_DECISION_H
#define DJQ_DECISION_H

#include <cstdint>
#include <string_view>
#include <vector>

namespace djq {

enum class Verdict { Constant, NotConstant };

std::string_view to_string(Verdict v);

/// One classical oracle query and its answer.
struct Query {
    uint64_t input = 0;
    bool output = false;

    bool operator==(const Query &) const = default;
};

/// Result of one run of a constancy test.
struct DecisionOutcome {
    Verdict verdict = Verdict::Constant;
    /// Oracle queries (classical) or circuit iterations (quantum) consumed.
    uint64_t queries_used = 0;
    /// Classical runs only, and only when transcripts are requested.
    std::vector<Query> transcript;
};

}  // namespace djq

#endif  // DJQ_DECISION_H
