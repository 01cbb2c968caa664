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

// One pooled rotation: word = right_shift(factor, shift) where factor is
// the source_factor-th Lyndon factor in increasing order (1 = smallest,
// the rightmost in the text).
struct OmegaConjugateEntry {
    Bytes word;
    Pos source_factor = 0;
    std::size_t shift = 0;

    bool operator==(const OmegaConjugateEntry& other) const = default;
};

// All rotations of all Lyndon factors of the input, sorted by the omega
// order. Entries comparing equal (rotations sharing a primitive root, which
// here means coming from repeated factors) are ordered by (source_factor,
// shift); their last letters coincide, so the output word does not depend
// on that choice.
struct OmegaSortedConjugates {
    std::vector<OmegaConjugateEntry> entries;
};

// Materializes the sorted conjugate list. Intended for inspection and
// tests; cost is quadratic in the factor lengths.
OmegaSortedConjugates omega_sorted_conjugates(const Bytes& w, const AlphabetOrder& ord);

// Bijective transform: last letters of the omega-sorted rotations of the
// Lyndon factors. Index-free; ε maps to ε.
Bytes bwts_forward(const Bytes& w, const AlphabetOrder& ord);

// Total inverse: decomposes the standard permutation of L into cycles, reads
// one Lyndon factor per cycle, and concatenates the factors largest-first.
// Every byte string is a valid image.
Bytes bwts_inverse(const Bytes& L, const AlphabetOrder& ord);

}  // namespace xbwt
