/*
Copyright 2026 the xbwt authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xbwt {

using Byte = std::uint8_t;

// A word is a finite byte sequence. Positions are 1-based in every public
// contract of this library; only internal loops use 0-based offsets.
using Bytes = std::vector<Byte>;

// 1-based position inside a word or a sorted conjugate list.
using Pos = std::uint32_t;

Bytes to_bytes(std::string_view s);
std::string to_string(const Bytes& w);

// A total order on the 256 byte values, given as a rank table. Every
// comparison in the library is parameterized by one of these; the default is
// plain numeric byte order. The rank table form (rather than a comparator)
// keeps the order serializable into container headers.
class AlphabetOrder {
public:
    AlphabetOrder();  // identity order

    static AlphabetOrder identity() { return AlphabetOrder(); }

    // Throws std::invalid_argument unless `rank` is a bijection on 0..255.
    static AlphabetOrder from_rank_table(const std::array<Byte, 256>& rank);

    Byte rank(Byte b) const { return rank_[b]; }
    const std::array<Byte, 256>& rank_table() const { return rank_; }

    bool less(Byte a, Byte b) const { return rank_[a] < rank_[b]; }
    bool is_identity() const;

private:
    std::array<Byte, 256> rank_;
};

// Lexicographic comparison of u and v under ord. EQ iff the sequences are
// identical.
std::strong_ordering compare_lex(const Bytes& u, const Bytes& v,
                                 const AlphabetOrder& ord);

// Compares the infinite powers u^w and v^w lexicographically. EQ iff u and v
// are powers of a common primitive root; at most |u| + |v| symbols are
// examined (further agreement forces a common period). Throws on empty input.
std::strong_ordering compare_omega(const Bytes& u, const Bytes& v,
                                   const AlphabetOrder& ord);

// i-fold right shift: one application moves the last letter to the front.
// Throws on empty input.
Bytes right_shift(const Bytes& w, std::size_t i);

// The ordered conjugacy class (w, r(w), r^2(w), ..., r^{n-1}(w)).
// Throws on empty input.
std::vector<Bytes> conjugacy_class(const Bytes& w);

// The first k letters of w^w, i.e. of the cycle of w. Throws if w is empty
// and k > 0.
Bytes context_of_order(const Bytes& w, std::size_t k);

Bytes reversal(const Bytes& w);

}  // namespace xbwt
