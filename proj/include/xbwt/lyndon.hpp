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

#include "xbwt/words.hpp"

namespace xbwt {

// The unique factorization of a word into a lexicographically non-increasing
// product of Lyndon words. Factors are stored in text order (leftmost factor
// first), so the stored sequence is non-increasing and concatenating it in
// order reproduces the input. The bijective transforms consume the factors
// smallest-first, i.e. in reverse of this storage order.
struct LyndonFactorization {
    std::vector<Bytes> factors;
    std::size_t total_length = 0;
};

// True iff w is strictly smaller than every nontrivial rotation of itself.
// Throws on empty input.
bool is_lyndon(const Bytes& w, const AlphabetOrder& ord);

// Duval's algorithm: linear time, constant auxiliary space beyond the output.
// The empty word yields an empty factor list.
LyndonFactorization lyndon_factorization(const Bytes& w, const AlphabetOrder& ord);

}  // namespace xbwt
