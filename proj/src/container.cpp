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

#include "xbwt/container.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "xbwt/bwt.hpp"
#include "xbwt/bwts.hpp"
#include "xbwt/lst.hpp"
#include "xbwt/st.hpp"

namespace xbwt {

namespace {

constexpr Byte kMagic[4] = {0x42, 0x57, 0x54, 0x58};  // "BWTX"
constexpr Byte kVersion = 0x01;
constexpr Byte kFlagCustomOrder = 0x01;

void write_u32_be(std::ostream& out, std::uint32_t v) {
    const char buf[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16),
                         static_cast<char>(v >> 8), static_cast<char>(v)};
    out.write(buf, 4);
}

// Reads exactly n bytes; false on clean EOF before the first byte, throws
// when the stream breaks off mid-way.
bool read_exact(std::istream& in, Byte* buf, std::size_t n, const char* what) {
    in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(n));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got == n) return true;
    if (got == 0 && in.eof()) return false;
    throw std::runtime_error(what);
}

std::uint32_t read_u32_be(std::istream& in, const char* what) {
    Byte buf[4];
    if (!read_exact(in, buf, 4, what)) throw std::runtime_error(what);
    return (std::uint32_t{buf[0]} << 24) | (std::uint32_t{buf[1]} << 16) |
           (std::uint32_t{buf[2]} << 8) | std::uint32_t{buf[3]};
}

}  // namespace

bool transform_is_indexed(TransformId t) {
    return t == TransformId::bwt || t == TransformId::st;
}

void encode_stream(std::istream& in, std::ostream& out, TransformId transform,
                   std::size_t k, std::size_t block_size, const AlphabetOrder& ord) {
    if (block_size == 0 || block_size > 0xffffffffu)
        throw std::invalid_argument("block size must lie in 1..2^32-1");
    if (k > 0xffff) throw std::invalid_argument("order k exceeds the 16-bit wire field");
    if (k != 0 && (transform == TransformId::bwt || transform == TransformId::bwts))
        throw std::invalid_argument("order k must be 0 for BWT and BWTS");

    const bool custom = !ord.is_identity();
    out.write(reinterpret_cast<const char*>(kMagic), 4);
    out.put(static_cast<char>(kVersion));
    out.put(static_cast<char>(transform));
    out.put(static_cast<char>(k >> 8));
    out.put(static_cast<char>(k & 0xff));
    out.put(static_cast<char>(custom ? kFlagCustomOrder : 0));
    if (custom)
        out.write(reinterpret_cast<const char*>(ord.rank_table().data()), 256);

    Bytes chunk(block_size);
    for (;;) {
        in.read(reinterpret_cast<char*>(chunk.data()),
                static_cast<std::streamsize>(block_size));
        const std::size_t got = static_cast<std::size_t>(in.gcount());
        if (got == 0) break;
        const Bytes block(chunk.begin(), chunk.begin() + got);

        Bytes payload;
        std::uint32_t row = 0;
        switch (transform) {
            case TransformId::bwt: {
                IndexedTransform t = bwt_forward(block, ord);
                payload = std::move(t.last_column);
                row = t.index - 1;
                break;
            }
            case TransformId::bwts:
                payload = bwts_forward(block, ord);
                break;
            case TransformId::st: {
                IndexedTransform t = st_forward(block, k, ord);
                payload = std::move(t.last_column);
                row = t.index - 1;
                break;
            }
            case TransformId::lst:
                payload = lst_forward(block, k, ord);
                break;
        }

        write_u32_be(out, static_cast<std::uint32_t>(payload.size()));
        if (transform_is_indexed(transform)) write_u32_be(out, row);
        out.write(reinterpret_cast<const char*>(payload.data()),
                  static_cast<std::streamsize>(payload.size()));
        if (got < block_size) break;
    }
    if (!out) throw std::ios_base::failure("write failed");
}

void decode_stream(std::istream& in, std::ostream& out) {
    Byte header[kHeaderSize];
    if (!read_exact(in, header, kHeaderSize, "truncated header"))
        throw std::runtime_error("truncated header");
    if (header[0] != kMagic[0] || header[1] != kMagic[1] || header[2] != kMagic[2] ||
        header[3] != kMagic[3])
        throw std::runtime_error("bad magic");
    if (header[4] != kVersion) throw std::runtime_error("unsupported version");
    if (header[5] > 3) throw std::runtime_error("unknown transform id");
    const TransformId transform = static_cast<TransformId>(header[5]);
    const std::size_t k = (std::size_t{header[6]} << 8) | header[7];
    if (k != 0 && (transform == TransformId::bwt || transform == TransformId::bwts))
        throw std::runtime_error("nonzero order with an order-0 transform");
    if (header[8] & ~kFlagCustomOrder) throw std::runtime_error("unknown flags");

    AlphabetOrder ord = AlphabetOrder::identity();
    if (header[8] & kFlagCustomOrder) {
        std::array<Byte, 256> table;
        if (!read_exact(in, table.data(), 256, "truncated order table"))
            throw std::runtime_error("truncated order table");
        try {
            ord = AlphabetOrder::from_rank_table(table);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("invalid order table");
        }
    }

    for (;;) {
        Byte len_buf[4];
        if (!read_exact(in, len_buf, 4, "truncated block")) break;
        const std::uint32_t len = (std::uint32_t{len_buf[0]} << 24) |
                                  (std::uint32_t{len_buf[1]} << 16) |
                                  (std::uint32_t{len_buf[2]} << 8) | std::uint32_t{len_buf[3]};
        std::uint32_t row = 0;
        if (transform_is_indexed(transform)) row = read_u32_be(in, "truncated block");

        // Reads in bounded slices so a forged length field cannot force a
        // huge upfront allocation before the truncation is noticed.
        Bytes payload;
        for (std::size_t remaining = len; remaining > 0;) {
            const std::size_t chunk = std::min<std::size_t>(remaining, std::size_t{1} << 20);
            const std::size_t old = payload.size();
            payload.resize(old + chunk);
            if (!read_exact(in, payload.data() + old, chunk, "truncated block"))
                throw std::runtime_error("truncated block");
            remaining -= chunk;
        }

        if (transform_is_indexed(transform)) {
            if (len == 0 ? row != 0 : row >= len)
                throw std::runtime_error("row index out of range");
        }
        if (len == 0) continue;

        Bytes decoded;
        try {
            switch (transform) {
                case TransformId::bwt:
                    decoded = bwt_inverse({std::move(payload), row + 1}, ord);
                    break;
                case TransformId::bwts:
                    decoded = bwts_inverse(payload, ord);
                    break;
                case TransformId::st:
                    decoded = st_inverse({std::move(payload), row + 1}, k, ord);
                    break;
                case TransformId::lst:
                    decoded = lst_inverse(payload, k, ord);
                    break;
            }
        } catch (const std::runtime_error&) {
            throw std::runtime_error("corrupt block");
        }
        out.write(reinterpret_cast<const char*>(decoded.data()),
                  static_cast<std::streamsize>(decoded.size()));
    }
    if (!out) throw std::ios_base::failure("write failed");
}

}  // namespace xbwt
