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

#include "xbwt/bwt.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "xbwt/permutation.hpp"

namespace xbwt {

IndexedTransform bwt_forward(const Bytes& w, const AlphabetOrder& ord) {
    if (w.empty()) throw std::invalid_argument("transform undefined on empty word");
    const std::size_t n = w.size();

    // Rotation i (1-based) is the length-n window of the doubled rank-mapped
    // word starting at (n - (i - 1)) % n, so one memcmp compares two
    // rotations in full.
    Bytes doubled = detail::ranked_copy(w, ord);
    doubled.insert(doubled.end(), doubled.begin(), doubled.end());

    std::vector<Pos> rotations(n);
    std::iota(rotations.begin(), rotations.end(), Pos{1});
    std::sort(rotations.begin(), rotations.end(), [&](Pos a, Pos b) {
        const int c = std::memcmp(doubled.data() + (n - (a - 1)) % n,
                                  doubled.data() + (n - (b - 1)) % n, n);
        return c != 0 ? c < 0 : a < b;
    });

    IndexedTransform out;
    out.last_column.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Pos i = rotations[r];
        out.last_column[r] = w[(n - i) % n];
        if (i == 1) out.index = static_cast<Pos>(r + 1);
    }
    return out;
}

Bytes bwt_inverse(const IndexedTransform& t, const AlphabetOrder& ord) {
    const std::size_t n = t.last_column.size();
    if (t.index < 1 || t.index > n) throw std::out_of_range("transform index out of range");
    const Permutation p = standard_permutation(t.last_column, ord);
    const std::vector<Pos>& pi = p.images();
    Bytes out;
    out.reserve(n);
    Pos j = t.index;
    for (std::size_t step = 0; step < n; ++step) {
        j = pi[j - 1];
        out.push_back(t.last_column[j - 1]);
    }
    return out;
}

Bytes bwt_inverse_right_to_left(const IndexedTransform& t, const AlphabetOrder& ord) {
    const std::size_t n = t.last_column.size();
    if (t.index < 1 || t.index > n) throw std::out_of_range("transform index out of range");
    const Permutation p = standard_permutation(t.last_column, ord).inverse();
    const std::vector<Pos>& inv = p.images();
    // Row t.index is the input word itself, so its last letter closes the
    // word; stepping through the inverse permutation walks right to left.
    Bytes out(n);
    Pos j = t.index;
    for (std::size_t step = n; step > 0; --step) {
        out[step - 1] = t.last_column[j - 1];
        j = inv[j - 1];
    }
    return out;
}

std::vector<Bytes> reconstruct_contexts(const Bytes& L, std::size_t k,
                                        const AlphabetOrder& ord) {
    if (L.empty() && k > 0)
        throw std::invalid_argument("contexts undefined on empty last column");
    const std::size_t n = L.size();
    std::vector<Bytes> contexts(n);
    if (k == 0 || n == 0) return contexts;
    const Permutation p = standard_permutation(L, ord);
    const std::vector<Pos>& pi = p.images();
    for (Pos i = 1; i <= n; ++i) {
        Bytes& c = contexts[i - 1];
        c.reserve(k);
        Pos j = i;
        for (std::size_t t = 0; t < k; ++t) {
            j = pi[j - 1];
            c.push_back(L[j - 1]);
        }
    }
    return contexts;
}

}  // namespace xbwt
