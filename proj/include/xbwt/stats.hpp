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
#include <iosfwd>
#include <string>
#include <vector>

#include "xbwt/container.hpp"
#include "xbwt/words.hpp"

namespace xbwt {

// Number of maximal runs of equal adjacent bytes; 0 for the empty word.
std::size_t run_count(const Bytes& w);

// Move-to-front recoding over the byte alphabet, table initially 0..255.
Bytes mtf_encode(const Bytes& w);

// Order-0 entropy of the byte histogram, in bits per symbol; 0 when empty.
double order0_entropy(const Bytes& w);

// Compression-proxy numbers for one transformed block (or for the whole
// stream in `total`): run counts before and after the transform, and the
// zero fraction and order-0 entropy of the move-to-front recoded output.
// MTF state is per block; totals pool the histograms, and total run counts
// are taken over the concatenated streams.
struct BlockStats {
    std::size_t length = 0;
    std::size_t input_runs = 0;
    std::size_t output_runs = 0;
    double mtf_zero_fraction = 0.0;
    double mtf_entropy = 0.0;
};

struct StatsReport {
    TransformId transform = TransformId::bwt;
    std::size_t order_k = 0;
    std::size_t block_size = 0;
    std::vector<BlockStats> blocks;
    BlockStats total;
    std::size_t index_bytes_avoided = 0;  // 4 per block for the bijective transforms
};

// Transforms the input block-wise (identity alphabet order) and collects
// the report. Parameter validation as in encode_stream.
StatsReport stats(std::istream& in, TransformId transform, std::size_t k,
                  std::size_t block_size);

// Deterministic tab-separated rendering, one line per block plus totals.
std::string format_stats(const StatsReport& report);

}  // namespace xbwt
