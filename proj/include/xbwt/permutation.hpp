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

#include <cstddef>
#include <vector>

#include "xbwt/words.hpp"

namespace xbwt {

// Permutation of {1, ..., n}. Positions are 1-based throughout.
class Permutation {
public:
    Permutation() = default;

    // images[i - 1] is the image of position i. Throws std::invalid_argument
    // unless the images form a bijection on {1, ..., n}.
    explicit Permutation(std::vector<Pos> images);

    static Permutation identity(Pos n);

    Pos size() const { return static_cast<Pos>(images_.size()); }

    // Image of i. Throws std::out_of_range unless 1 <= i <= size().
    Pos apply(Pos i) const;

    Permutation inverse() const;

    const std::vector<Pos>& images() const { return images_; }

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<Pos> images_;
};

// Cycles of a permutation in canonical form: each cycle is rotated so that
// its smallest element comes first, and cycles are listed in increasing
// order of those smallest elements.
struct CycleDecomposition {
    std::vector<std::vector<Pos>> cycles;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

// Stable sort of the positions 1..n of w by letter: position i precedes j
// when w[i] < w[j] under ord, or when the letters are equal and i < j. The
// resulting permutation maps sorted rank to position.
Permutation standard_permutation(const Bytes& w, const AlphabetOrder& ord);

// Generalization to a list of words V = (a_1, ..., a_n): entry i is sorted
// by the k-order context of a_i within the cyclic structure it came from,
// which for a bare word list is the k-symbol prefix of a_i read cyclically.
// Entries with equal contexts keep their ordinal order. Maps sorted rank to
// entry ordinal. Every element of V must be non-empty.
Permutation k_order_standard_permutation(const std::vector<Bytes>& V,
                                         std::size_t k,
                                         const AlphabetOrder& ord);

namespace detail {

// One rotation of a backing word. Symbol t (0-based) of the rotation is
// word[(start + t) % word.size()].
struct RotationRef {
    Pos word;
    Pos start;
};

// Maps w through ord so that plain byte comparison realizes the order.
Bytes ranked_copy(const Bytes& w, const AlphabetOrder& ord);

// Stable sort of rotation entries by k-order context, ordinal as final
// tie-break. `ranked` holds the backing words already mapped through
// ranked_copy. Returns 0-based entry ordinals in sorted order: element r is
// the entry occupying row r + 1.
std::vector<Pos> sort_rotations_by_context(const std::vector<Bytes>& ranked,
                                           const std::vector<RotationRef>& entries,
                                           std::size_t k);

}  // namespace detail

}  // namespace xbwt
