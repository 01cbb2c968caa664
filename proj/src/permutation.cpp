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

#include "xbwt/permutation.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "xbwt/checks.hpp"

namespace xbwt {

Permutation::Permutation(std::vector<Pos> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    std::vector<char> seen(n, 0);
    for (Pos v : images_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("permutation images must be a bijection on 1..n");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(Pos n) {
    std::vector<Pos> images(n);
    std::iota(images.begin(), images.end(), Pos{1});
    return Permutation(std::move(images));
}

Pos Permutation::apply(Pos i) const {
    if (i < 1 || i > images_.size())
        throw std::out_of_range("permutation argument out of range");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<Pos> inv(images_.size());
    for (Pos i = 1; i <= images_.size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    const Pos n = p.size();
    std::vector<char> visited(n, 0);
    CycleDecomposition dec;
    // Scanning starts in increasing order, so the first unvisited element of
    // a cycle is its minimum; each cycle comes out rotated to start there.
    for (Pos i = 1; i <= n; ++i) {
        if (visited[i - 1]) continue;
        std::vector<Pos> cycle;
        Pos j = i;
        do {
            visited[j - 1] = 1;
            cycle.push_back(j);
            j = p.apply(j);
        } while (j != i);
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

Permutation standard_permutation(const Bytes& w, const AlphabetOrder& ord) {
    const std::size_t n = w.size();
    std::size_t count[256] = {0};
    for (Byte b : w) ++count[ord.rank(b)];
    std::size_t offset[256];
    std::size_t sum = 0;
    for (int r = 0; r < 256; ++r) {
        offset[r] = sum;
        sum += count[r];
    }
    std::vector<Pos> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[offset[ord.rank(w[i])]++] = static_cast<Pos>(i + 1);
    return Permutation(std::move(images));
}

namespace detail {

Bytes ranked_copy(const Bytes& w, const AlphabetOrder& ord) {
    Bytes out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = ord.rank(w[i]);
    return out;
}

namespace {

// Compares the k-order contexts of two rotations. Both contexts are
// eventually periodic with the originating word lengths as periods, so any
// difference shows up within la + lb symbols; the walk stops there.
int compare_contexts(const std::vector<Bytes>& ranked,
                     const RotationRef& a, const RotationRef& b,
                     std::size_t k) {
    const Bytes& wa = ranked[a.word];
    const Bytes& wb = ranked[b.word];
    const std::size_t la = wa.size(), lb = wb.size();
    const std::size_t cap = std::min(k, la + lb);
    std::size_t ia = a.start, ib = b.start;
    for (std::size_t t = 0; t < cap; ++t) {
        const Byte ca = wa[ia], cb = wb[ib];
        if (ca != cb) return ca < cb ? -1 : 1;
        if (++ia == la) ia = 0;
        if (++ib == lb) ib = 0;
    }
    return 0;
}

}  // namespace

std::vector<Pos> sort_rotations_by_context(const std::vector<Bytes>& ranked,
                                           const std::vector<RotationRef>& entries,
                                           std::size_t k) {
    const std::size_t m = entries.size();
    std::vector<Pos> order(m);
    std::iota(order.begin(), order.end(), Pos{0});
    if (k == 0 || m < 2) return order;

    std::size_t maxlen = 0;
    for (const RotationRef& e : entries) {
        XBWT_CHECK(e.word < ranked.size() && !ranked[e.word].empty() &&
                       e.start < ranked[e.word].size(),
                   "rotation entry out of range");
        maxlen = std::max(maxlen, ranked[e.word].size());
    }
    const std::size_t k_cap = std::min(k, 2 * maxlen);

    if (k_cap <= 32) {
        // Short effective contexts: materialize fixed-width keys once and
        // sort with memcmp.
        std::vector<Byte> keys(m * k_cap);
        for (std::size_t e = 0; e < m; ++e) {
            const Bytes& w = ranked[entries[e].word];
            const std::size_t l = w.size();
            std::size_t p = entries[e].start;
            for (std::size_t t = 0; t < k_cap; ++t) {
                keys[e * k_cap + t] = w[p];
                if (++p == l) p = 0;
            }
        }
        std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
            const int c = std::memcmp(&keys[a * k_cap], &keys[b * k_cap], k_cap);
            return c != 0 ? c < 0 : a < b;
        });
    } else {
        std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
            const int c = compare_contexts(ranked, entries[a], entries[b], k);
            return c != 0 ? c < 0 : a < b;
        });
    }

#ifndef XBWT_NO_INVARIANT_CHECKS
    if (m <= 64) {
        for (std::size_t r = 1; r < m; ++r) {
            XBWT_CHECK(compare_contexts(ranked, entries[order[r - 1]],
                                        entries[order[r]], k) <= 0,
                       "contexts not non-decreasing after sort");
        }
    }
#endif
    return order;
}

}  // namespace detail

Permutation k_order_standard_permutation(const std::vector<Bytes>& V,
                                         std::size_t k,
                                         const AlphabetOrder& ord) {
    std::vector<Bytes> ranked;
    ranked.reserve(V.size());
    std::vector<detail::RotationRef> entries;
    entries.reserve(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) {
        if (V[i].empty())
            throw std::invalid_argument("word list elements must be non-empty");
        ranked.push_back(detail::ranked_copy(V[i], ord));
        entries.push_back({static_cast<Pos>(i), 0});
    }
    const std::vector<Pos> sorted = detail::sort_rotations_by_context(ranked, entries, k);
    std::vector<Pos> images(sorted.size());
    for (std::size_t r = 0; r < sorted.size(); ++r) images[r] = sorted[r] + 1;
    return Permutation(std::move(images));
}

}  // namespace xbwt
