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

#include "xbwt/bwt.hpp"
#include "xbwt/words.hpp"

namespace xbwt {

// Order-k sort transform: rotations (right-shift convention) are sorted
// stably by k-order context with the rotation number as tie-break; returns
// the last column and the input's row. k = 0 degenerates to string reversal
// with index 1; k at or above the word length coincides with the BWT on
// primitive words. Any k is accepted; sorting is capped internally where
// contexts become periodic. Throws std::invalid_argument on empty input.
IndexedTransform st_forward(const Bytes& w, std::size_t k, const AlphabetOrder& ord);

// Inverse chase: rebuilds the k-order context graph from the last column,
// starts at the context of row t.index and takes n smallest-label steps;
// the word is the reversed emission. Throws std::out_of_range when the
// index does not lie in 1..n and std::runtime_error("invalid ST image")
// when the chase dead-ends, which only happens for inputs outside the
// transform's image.
Bytes st_inverse(const IndexedTransform& t, std::size_t k, const AlphabetOrder& ord);

}  // namespace xbwt
