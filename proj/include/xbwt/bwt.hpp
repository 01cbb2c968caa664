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

// Output of the indexed transforms (BWT and the order-k sort transform):
// the last column of the sorted rotation list plus the 1-based row holding
// the input word.
struct IndexedTransform {
    Bytes last_column;
    Pos index = 0;

    bool operator==(const IndexedTransform& other) const = default;
};

// Last letters of the lexicographically sorted rotations (right-shift
// convention) and the row of w. When w is non-primitive several rows equal
// w; the smallest is reported. Throws std::invalid_argument on empty input.
IndexedTransform bwt_forward(const Bytes& w, const AlphabetOrder& ord);

// Reconstructs the word whose transform is t by iterating the standard
// permutation of the last column forward from t.index. Throws
// std::out_of_range when the index does not lie in 1..n. Pairs outside the
// transform's image are not detected; they decode to garbage.
Bytes bwt_inverse(const IndexedTransform& t, const AlphabetOrder& ord);

// Same word, computed right to left with the inverse permutation. Agrees
// with bwt_inverse on every valid transform pair.
Bytes bwt_inverse_right_to_left(const IndexedTransform& t, const AlphabetOrder& ord);

// Element i (1-based) is the k-order context of row i of any context-sorted
// conjugate list whose last column is L, recovered by walking the standard
// permutation k steps from each row. Throws std::invalid_argument when L is
// empty and k > 0.
std::vector<Bytes> reconstruct_contexts(const Bytes& L, std::size_t k,
                                        const AlphabetOrder& ord);

}  // namespace xbwt
