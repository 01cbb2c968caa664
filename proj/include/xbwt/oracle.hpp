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

// Slow reference implementations, written for obviousness rather than speed.
// They live in a separate library target that only the tests link; nothing
// in the fast paths or the CLI may depend on this header.

#include <cstddef>
#include <vector>

#include "xbwt/words.hpp"

namespace xbwt::oracle {

enum class MatrixMode { lex, context_k };

struct NaiveMatrixTransform {
    std::vector<Bytes> matrix;  // all n rotations, sorted
    Bytes last_column;
    Pos index = 0;  // 1-based row of the input word (smallest such row)
};

// Materializes every rotation of w and sorts the full matrix: fully
// lexicographically for MatrixMode::lex (k ignored), or stably by the
// length-k prefix of the doubled rotation for MatrixMode::context_k.
NaiveMatrixTransform naive_matrix_transform(const Bytes& w, MatrixMode mode,
                                            std::size_t k, const AlphabetOrder& ord);

// Greedy factorization: repeatedly strips the longest prefix that is
// strictly smaller than all of its nontrivial rotations.
std::vector<Bytes> naive_lyndon_factorization(const Bytes& w, const AlphabetOrder& ord);

enum class BijectiveVariant { bwts, lst };

// Pools all rotations of all Lyndon factors (smallest factor's class first)
// and sorts by materialized power prefixes: long enough to decide the omega
// order for bwts, length k for lst. Returns the last letters.
Bytes naive_bijective_transform(const Bytes& w, BijectiveVariant variant,
                                std::size_t k, const AlphabetOrder& ord);

// Exhaustive preimage search: tries every word of length |L| over the
// distinct bytes of L. Throws std::invalid_argument when |L| > 12 or L has
// more than 3 distinct bytes, and std::runtime_error unless exactly one
// preimage exists.
Bytes invert_by_search(const Bytes& L, BijectiveVariant variant, std::size_t k,
                       const AlphabetOrder& ord);

}  // namespace xbwt::oracle
