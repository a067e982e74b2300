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

#include "djq/truth_table.h"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "djq/sampling.h"

namespace djq {

namespace {

size_t word_count(int n) {
    return n >= 6 ? (size_t{1} << (n - 6)) : 1;
}

uint64_t tail_mask(int n) {
    return n >= 6 ? ~uint64_t{0} : ((uint64_t{1} << (uint64_t{1} << n)) - 1);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

class TruthTableBuilder {
   public:
    explicit TruthTableBuilder(int n, bool fill) : table_(n) {
        if (fill) {
            for (auto &w : table_.words_) {
                w = ~uint64_t{0};
            }
            table_.words_.back() &= tail_mask(n);
        }
    }

    void set(uint64_t x, bool v) {
        uint64_t bit = uint64_t{1} << (x & 63);
        if (v) {
            table_.words_[x >> 6] |= bit;
        } else {
            table_.words_[x >> 6] &= ~bit;
        }
    }

    std::vector<uint64_t> &words() {
        return table_.words_;
    }

    TruthTable finish() && {
        table_.words_.back() &= tail_mask(table_.n_);
        return std::move(table_);
    }

   private:
    TruthTable table_;
};

std::string_view to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::Constant:
            return "constant";
        case FunctionClass::Balanced:
            return "balanced";
        case FunctionClass::Unbalanced:
            return "unbalanced";
    }
    return "?";
}

void check_table_bits(int n) {
    if (n < 1 || n > kMaxTableBits) {
        throw std::invalid_argument("truth table bit-width n=" + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxTableBits) + "]");
    }
}

TruthTable::TruthTable(int n) : n_(n) {
    check_table_bits(n);
    words_.assign(word_count(n), 0);
}

TruthTable TruthTable::constant(int n, bool value) {
    return TruthTableBuilder(n, value).finish();
}

TruthTable TruthTable::from_bits(int n, std::span<const uint8_t> bits) {
    TruthTableBuilder b(n, false);
    if (bits.size() != (uint64_t{1} << n)) {
        throw std::invalid_argument("truth table needs exactly 2^n = " + std::to_string(uint64_t{1} << n) +
                                    " entries, got " + std::to_string(bits.size()));
    }
    for (uint64_t x = 0; x < bits.size(); ++x) {
        if (bits[x] > 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
        b.set(x, bits[x] != 0);
    }
    return std::move(b).finish();
}

TruthTable TruthTable::from_bit_string(int n, std::string_view bits) {
    TruthTableBuilder b(n, false);
    if (bits.size() != (uint64_t{1} << n)) {
        throw std::invalid_argument("truth table needs exactly 2^n = " + std::to_string(uint64_t{1} << n) +
                                    " characters, got " + std::to_string(bits.size()));
    }
    for (uint64_t x = 0; x < bits.size(); ++x) {
        char c = bits[x];
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid truth table character '") + c + "'");
        }
        b.set(x, c == '1');
    }
    return std::move(b).finish();
}

TruthTable TruthTable::parse(std::string_view text) {
    size_t eol = text.find('\n');
    if (eol == std::string_view::npos) {
        throw std::invalid_argument("function file: expected 'n=<int>' line followed by a bit line");
    }
    std::string_view header = trim(text.substr(0, eol));
    std::string_view body = trim(text.substr(eol + 1));
    if (header.substr(0, 2) != "n=") {
        throw std::invalid_argument("function file: first line must be 'n=<int>'");
    }
    header.remove_prefix(2);
    int n = 0;
    auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (ec != std::errc() || ptr != header.data() + header.size()) {
        throw std::invalid_argument("function file: malformed bit-width '" + std::string(header) + "'");
    }
    check_table_bits(n);
    if (body.find_first_of("\n\r \t") != std::string_view::npos) {
        throw std::invalid_argument("function file: trailing content after the bit line");
    }
    return from_bit_string(n, body);
}

bool TruthTable::evaluate(uint64_t x) const {
    if (x >= size()) {
        throw std::out_of_range("oracle input " + std::to_string(x) + " outside [0, 2^" + std::to_string(n_) + ")");
    }
    return (*this)[x];
}

uint64_t TruthTable::count_ones() const {
    uint64_t c = 0;
    for (uint64_t w : words_) {
        c += static_cast<uint64_t>(std::popcount(w));
    }
    return c;
}

std::string TruthTable::bit_string() const {
    std::string s(size(), '0');
    for (uint64_t x = 0; x < size(); ++x) {
        if ((*this)[x]) {
            s[x] = '1';
        }
    }
    return s;
}

std::string TruthTable::to_text() const {
    return "n=" + std::to_string(n_) + "\n" + bit_string() + "\n";
}

TruthTable make_fm(int n, uint64_t m, bool majority_bit, std::span<const uint64_t> minority_positions) {
    check_table_bits(n);
    uint64_t size = uint64_t{1} << n;
    if (m > size) {
        throw std::invalid_argument("make_fm: m=" + std::to_string(m) + " exceeds 2^n=" + std::to_string(size));
    }
    if (minority_positions.size() != m) {
        throw std::invalid_argument("make_fm: expected " + std::to_string(m) + " minority positions, got " +
                                    std::to_string(minority_positions.size()));
    }
    TruthTableBuilder b(n, majority_bit);
    std::vector<bool> seen(size, false);
    for (uint64_t x : minority_positions) {
        if (x >= size) {
            throw std::invalid_argument("make_fm: position " + std::to_string(x) + " outside [0, 2^n)");
        }
        if (seen[x]) {
            throw std::invalid_argument("make_fm: duplicate position " + std::to_string(x));
        }
        seen[x] = true;
        b.set(x, !majority_bit);
    }
    return std::move(b).finish();
}

TruthTable make_fm(int n, uint64_t m, bool majority_bit, Rng &rng) {
    check_table_bits(n);
    uint64_t size = uint64_t{1} << n;
    if (m > size) {
        throw std::invalid_argument("make_fm: m=" + std::to_string(m) + " exceeds 2^n=" + std::to_string(size));
    }
    TruthTableBuilder b(n, majority_bit);
    DistinctSampler sampler(size);
    for (uint64_t i = 0; i < m; ++i) {
        b.set(sampler.next(rng), !majority_bit);
    }
    return std::move(b).finish();
}

TruthTable random_function(int n, Rng &rng) {
    check_table_bits(n);
    TruthTableBuilder b(n, false);
    for (auto &w : b.words()) {
        w = rng();
    }
    return std::move(b).finish();
}

FunctionProfile profile(const TruthTable &tt) {
    uint64_t ones = tt.count_ones();
    uint64_t zeros = tt.size() - ones;
    FunctionProfile p;
    p.m = std::min(ones, zeros);
    if (p.m == 0) {
        p.function_class = FunctionClass::Constant;
        p.minority_bit = ones > 0 ? 1 : 0;
    } else if (ones == zeros) {
        p.function_class = FunctionClass::Balanced;
        p.minority_bit = 0;
    } else {
        p.function_class = FunctionClass::Unbalanced;
        p.minority_bit = ones < zeros ? 1 : 0;
    }
    return p;
}

}  // namespace djq
