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

#include "xbwt/stats.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <stdexcept>

#include "xbwt/bwt.hpp"
#include "xbwt/bwts.hpp"
#include "xbwt/lst.hpp"
#include "xbwt/st.hpp"

namespace xbwt {

std::size_t run_count(const Bytes& w) {
    if (w.empty()) return 0;
    std::size_t runs = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[i - 1]) ++runs;
    return runs;
}

Bytes mtf_encode(const Bytes& w) {
    std::array<Byte, 256> table;
    std::iota(table.begin(), table.end(), 0);
    Bytes out;
    out.reserve(w.size());
    for (Byte b : w) {
        std::size_t pos = 0;
        while (table[pos] != b) ++pos;
        out.push_back(static_cast<Byte>(pos));
        for (; pos > 0; --pos) table[pos] = table[pos - 1];
        table[0] = b;
    }
    return out;
}

namespace {

double entropy_of_histogram(const std::array<std::size_t, 256>& hist, std::size_t n) {
    if (n == 0) return 0.0;
    double h = 0.0;
    for (std::size_t c : hist) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(n);
        h -= p * std::log2(p);
    }
    return h;
}

const char* transform_name(TransformId t) {
    switch (t) {
        case TransformId::bwt: return "bwt";
        case TransformId::bwts: return "bwts";
        case TransformId::st: return "st";
        case TransformId::lst: return "lst";
    }
    return "?";
}

}  // namespace

double order0_entropy(const Bytes& w) {
    std::array<std::size_t, 256> hist = {};
    for (Byte b : w) ++hist[b];
    return entropy_of_histogram(hist, w.size());
}

StatsReport stats(std::istream& in, TransformId transform, std::size_t k,
                  std::size_t block_size) {
    if (block_size == 0 || block_size > 0xffffffffu)
        throw std::invalid_argument("block size must lie in 1..2^32-1");
    if (k > 0xffff) throw std::invalid_argument("order k exceeds the 16-bit wire field");
    if (k != 0 && (transform == TransformId::bwt || transform == TransformId::bwts))
        throw std::invalid_argument("order k must be 0 for BWT and BWTS");
    const AlphabetOrder ord = AlphabetOrder::identity();

    StatsReport report;
    report.transform = transform;
    report.order_k = k;
    report.block_size = block_size;

    std::array<std::size_t, 256> total_hist = {};
    std::size_t total_zeros = 0;
    Byte prev_in_last = 0, prev_out_last = 0;
    bool have_prev = false;

    Bytes chunk(block_size);
    for (;;) {
        in.read(reinterpret_cast<char*>(chunk.data()),
                static_cast<std::streamsize>(block_size));
        const std::size_t got = static_cast<std::size_t>(in.gcount());
        if (got == 0) break;
        const Bytes block(chunk.begin(), chunk.begin() + got);

        Bytes output;
        switch (transform) {
            case TransformId::bwt: output = bwt_forward(block, ord).last_column; break;
            case TransformId::bwts: output = bwts_forward(block, ord); break;
            case TransformId::st: output = st_forward(block, k, ord).last_column; break;
            case TransformId::lst: output = lst_forward(block, k, ord); break;
        }
        const Bytes mtf = mtf_encode(output);

        BlockStats bs;
        bs.length = got;
        bs.input_runs = run_count(block);
        bs.output_runs = run_count(output);
        std::size_t zeros = 0;
        for (Byte b : mtf) {
            ++total_hist[b];
            if (b == 0) ++zeros;
        }
        bs.mtf_zero_fraction = static_cast<double>(zeros) / static_cast<double>(got);
        bs.mtf_entropy = order0_entropy(mtf);
        total_zeros += zeros;

        // Concatenated-stream run totals: adjacent blocks merge a run when
        // the byte at the boundary repeats.
        report.total.input_runs += bs.input_runs;
        report.total.output_runs += bs.output_runs;
        if (have_prev) {
            if (prev_in_last == block.front()) --report.total.input_runs;
            if (prev_out_last == output.front()) --report.total.output_runs;
        }
        prev_in_last = block.back();
        prev_out_last = output.back();
        have_prev = true;

        report.total.length += got;
        report.blocks.push_back(bs);
        if (got < block_size) break;
    }

    if (report.total.length > 0) {
        report.total.mtf_zero_fraction = static_cast<double>(total_zeros) /
                                         static_cast<double>(report.total.length);
        report.total.mtf_entropy = entropy_of_histogram(total_hist, report.total.length);
    }
    if (transform == TransformId::bwts || transform == TransformId::lst)
        report.index_bytes_avoided = 4 * report.blocks.size();
    return report;
}

std::string format_stats(const StatsReport& report) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf, "transform\t%s\tk\t%zu\tblock_size\t%zu\n",
                  transform_name(report.transform), report.order_k, report.block_size);
    out += buf;

    auto line = [&](const char* label, std::size_t number, const BlockStats& bs) {
        std::snprintf(buf, sizeof buf,
                      "%s\t%zu\tlength\t%zu\truns_in\t%zu\truns_out\t%zu"
                      "\tmtf_zeros\t%.6f\tmtf_entropy\t%.4f\n",
                      label, number, bs.length, bs.input_runs, bs.output_runs,
                      bs.mtf_zero_fraction, bs.mtf_entropy);
        out += buf;
    };
    for (std::size_t i = 0; i < report.blocks.size(); ++i)
        line("block", i + 1, report.blocks[i]);
    line("total", report.blocks.size(), report.total);
    std::snprintf(buf, sizeof buf, "index_bytes_avoided\t%zu\n", report.index_bytes_avoided);
    out += buf;
    return out;
}

}  // namespace xbwt
