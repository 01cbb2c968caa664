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

#include "xbwt/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xbwt::oracle {

namespace {

// Rotation i (1-based) of w under the right-shift convention: applying the
// shift i-1 times moves the last i-1 letters to the front.
Bytes rotation(const Bytes& w, std::size_t i) {
    const std::size_t n = w.size();
    Bytes out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = w[(t + n - (i - 1) % n) % n];
    return out;
}

Bytes mapped(const Bytes& w, const AlphabetOrder& ord) {
    Bytes out(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) out[t] = ord.rank(w[t]);
    return out;
}

// Prefix of length len of u repeated forever.
Bytes power_prefix(const Bytes& u, std::size_t len) {
    Bytes out(len);
    for (std::size_t t = 0; t < len; ++t) out[t] = u[t % u.size()];
    return out;
}

bool naive_is_lyndon(const Bytes& w, const AlphabetOrder& ord) {
    const Bytes self = mapped(w, ord);
    for (std::size_t i = 2; i <= w.size(); ++i) {
        if (!(self < mapped(rotation(w, i), ord))) return false;
    }
    return true;
}

}  // namespace

NaiveMatrixTransform naive_matrix_transform(const Bytes& w, MatrixMode mode,
                                            std::size_t k, const AlphabetOrder& ord) {
    if (w.empty()) throw std::invalid_argument("matrix transform undefined on empty word");
    const std::size_t n = w.size();

    std::vector<Bytes> rows;
    std::vector<Bytes> keys;
    for (std::size_t i = 1; i <= n; ++i) {
        rows.push_back(rotation(w, i));
        const Bytes m = mapped(rows.back(), ord);
        keys.push_back(mode == MatrixMode::lex ? m
                                               : power_prefix(m, std::min(k, 2 * n)));
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    NaiveMatrixTransform out;
    for (std::size_t r = 0; r < n; ++r) {
        out.matrix.push_back(rows[order[r]]);
        out.last_column.push_back(rows[order[r]].back());
        if (order[r] == 0) out.index = static_cast<Pos>(r + 1);
    }
    return out;
}

std::vector<Bytes> naive_lyndon_factorization(const Bytes& w, const AlphabetOrder& ord) {
    std::vector<Bytes> factors;
    std::size_t pos = 0;
    while (pos < w.size()) {
        std::size_t best = 1;
        for (std::size_t len = w.size() - pos; len >= 1; --len) {
            const Bytes prefix(w.begin() + pos, w.begin() + pos + len);
            if (naive_is_lyndon(prefix, ord)) {
                best = len;
                break;
            }
        }
        factors.emplace_back(w.begin() + pos, w.begin() + pos + best);
        pos += best;
    }
    return factors;
}

Bytes naive_bijective_transform(const Bytes& w, BijectiveVariant variant,
                                std::size_t k, const AlphabetOrder& ord) {
    if (w.empty()) return {};
    std::vector<Bytes> factors = naive_lyndon_factorization(w, ord);
    std::reverse(factors.begin(), factors.end());  // increasing order, v_1 first

    std::size_t maxlen = 0;
    for (const Bytes& v : factors) maxlen = std::max(maxlen, v.size());
    const std::size_t key_len =
        variant == BijectiveVariant::bwts ? 2 * maxlen : std::min(k, 2 * maxlen);

    std::vector<Bytes> pool;
    std::vector<Bytes> keys;
    for (const Bytes& v : factors) {
        for (std::size_t i = 1; i <= v.size(); ++i) {
            pool.push_back(rotation(v, i));
            keys.push_back(power_prefix(mapped(pool.back(), ord), key_len));
        }
    }

    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    Bytes out;
    for (std::size_t e : order) out.push_back(pool[e].back());
    return out;
}

Bytes invert_by_search(const Bytes& L, BijectiveVariant variant, std::size_t k,
                       const AlphabetOrder& ord) {
    if (L.size() > 12) throw std::invalid_argument("preimage search limited to |L| <= 12");
    const std::set<Byte> alphabet(L.begin(), L.end());
    if (alphabet.size() > 3)
        throw std::invalid_argument("preimage search limited to 3 distinct bytes");
    if (L.empty()) return {};

    const std::vector<Byte> letters(alphabet.begin(), alphabet.end());
    const std::size_t n = L.size();
    std::vector<std::size_t> digits(n, 0);
    std::vector<Bytes> preimages;
    for (;;) {
        Bytes candidate(n);
        for (std::size_t t = 0; t < n; ++t) candidate[t] = letters[digits[t]];
        if (naive_bijective_transform(candidate, variant, k, ord) == L)
            preimages.push_back(candidate);

        std::size_t t = 0;
        while (t < n && ++digits[t] == letters.size()) digits[t++] = 0;
        if (t == n) break;
    }
    if (preimages.empty()) throw std::runtime_error("no preimage found");
    if (preimages.size() > 1) throw std::runtime_error("multiple preimages found");
    return preimages.front();
}

}  // namespace xbwt::oracle
