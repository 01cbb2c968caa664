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

#include "xbwt/words.hpp"

namespace xbwt {

// Bijective order-k sort transform: pools the rotations of all Lyndon
// factors with the smallest factor's class first, sorts stably by k-order
// context with the pool position as tie-break, and returns the last
// letters. Index-free; ε maps to ε. Unlike the bijective BWT, repeated
// factors must keep their individual pool positions, so no class
// deduplication happens here.
Bytes lst_forward(const Bytes& w, std::size_t k, const AlphabetOrder& ord);

// Total inverse: rebuilds the k-order context graph from L, starts at the
// context of row 1 and repeatedly consumes the smallest-label unused edge
// at the current context, jumping to the globally smallest unused edge
// whenever the current context has none left, until every edge is
// consumed; the word is the reversed emission. Every byte string is a
// valid image for every k.
Bytes lst_inverse(const Bytes& L, std::size_t k, const AlphabetOrder& ord);

}  // namespace xbwt
