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

#ifndef DJQ_TRUTH_TABLE_H
#define DJQ_TRUTH_TABLE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "djq/rng.h"

namespace djq {

/// Largest bit-width for which a truth table is materialized (2^24 bits).
inline constexpr int kMaxTableBits = 24;

enum class FunctionClass { Constant, Balanced, Unbalanced };

std::string_view to_string(FunctionClass c);

/// Summary of a truth table by its minority count.
struct FunctionProfile {
    /// min(#zeros, #ones), so 0 <= m <= 2^(n-1).
    uint64_t m = 0;
    /// The bit that occurs m times. For a constant table this is the single
    /// output value; for a balanced table it is 0.
    int minority_bit = 0;
    FunctionClass function_class = FunctionClass::Constant;

    bool operator==(const FunctionProfile &) const = default;
};

/// Complete specification of an n-bit Boolean function as 2^n packed bits,
/// indexed by the integer encoding of the input. Immutable once built.
class TruthTable {
   public:
    /// Table of n bits, all equal to `value`.
    static TruthTable constant(int n, bool value);

    /// Builds a table from one 0/1 entry per input.
    static TruthTable from_bits(int n, std::span<const uint8_t> bits);

    /// Builds a table from 2^n characters '0'/'1' in index order.
    static TruthTable from_bit_string(int n, std::string_view bits);

    /// Parses the text format: `n=<int>` on the first line, then 2^n
    /// characters of 0/1 on the second.
    static TruthTable parse(std::string_view text);

    int n() const {
        return n_;
    }
    uint64_t size() const {
        return uint64_t{1} << n_;
    }

    /// f(x). Throws std::out_of_range unless x < 2^n.
    bool evaluate(uint64_t x) const;

    /// f(x) without the bounds check.
    bool operator[](uint64_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }

    uint64_t count_ones() const;
    uint64_t count_zeros() const {
        return size() - count_ones();
    }

    std::span<const uint64_t> words() const {
        return words_;
    }

    /// The 2^n output characters in index order.
    std::string bit_string() const;

    /// Inverse of parse(); ends with a newline.
    std::string to_text() const;

    bool operator==(const TruthTable &) const = default;

   private:
    friend class TruthTableBuilder;
    explicit TruthTable(int n);

    int n_;
    std::vector<uint64_t> words_;
};

/// Throws std::invalid_argument unless 1 <= n <= kMaxTableBits.
void check_table_bits(int n);

/// A table equal to `majority_bit` everywhere except at `minority_positions`.
/// Requires |minority_positions| == m, all distinct and < 2^n.
TruthTable make_fm(int n, uint64_t m, bool majority_bit, std::span<const uint64_t> minority_positions);

/// As above, with the m minority positions drawn uniformly without
/// replacement from `rng`.
TruthTable make_fm(int n, uint64_t m, bool majority_bit, Rng &rng);

/// A uniformly random element of the 2^(2^n) n-bit Boolean functions.
TruthTable random_function(int n, Rng &rng);

FunctionProfile profile(const TruthTable &tt);

inline bool evaluate(const TruthTable &tt, uint64_t x) {
    return tt.evaluate(x);
}

}  // namespace djq

#endif  // DJQ_TRUTH_TABLE_H
