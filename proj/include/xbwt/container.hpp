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
#include <cstdint>
#include <iosfwd>

#include "xbwt/words.hpp"

namespace xbwt {

// Container layout, all integers big-endian:
//   magic "BWTX" | version 0x01 | transform id | order k (2 bytes) |
//   flags (bit 0: a 256-byte rank table follows) | [rank table] | blocks...
// Each block: payload length (4 bytes) | row index (4 bytes, only for the
// indexed transforms, stored zero-based) | payload. The bijective
// transforms carry no index, which is their point.
enum class TransformId : std::uint8_t { bwt = 0, bwts = 1, st = 2, lst = 3 };

inline constexpr std::size_t kDefaultBlockSize = 262144;
inline constexpr std::size_t kHeaderSize = 9;

bool transform_is_indexed(TransformId t);

// Splits the input into block_size chunks, transforms each and writes the
// framed stream. Throws std::invalid_argument for block_size = 0, k > 65535
// (the wire width), or nonzero k with the order-0 transforms (BWT, BWTS);
// std::ios_base::failure on I/O errors.
void encode_stream(std::istream& in, std::ostream& out, TransformId transform,
                   std::size_t k, std::size_t block_size, const AlphabetOrder& ord);

// Inverse-transforms a framed stream back to the original bytes. Throws
// std::runtime_error on malformed input: bad magic or version, unknown
// transform or flags, invalid rank table, truncated block, out-of-range row
// index, or a dead-ended chase ("corrupt block"). A stream ending cleanly
// at a block boundary is a valid prefix.
void decode_stream(std::istream& in, std::ostream& out);

}  // namespace xbwt
