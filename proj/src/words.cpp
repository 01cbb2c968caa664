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

#include "xbwt/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace xbwt {

Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_string(const Bytes& w) {
    return std::string(w.begin(), w.end());
}

AlphabetOrder::AlphabetOrder() {
    for (unsigned b = 0; b < 256; ++b) rank_[b] = static_cast<Byte>(b);
}

AlphabetOrder AlphabetOrder::from_rank_table(const std::array<Byte, 256>& rank) {
    std::array<bool, 256> seen{};
    for (unsigned b = 0; b < 256; ++b) {
        if (seen[rank[b]])
            throw std::invalid_argument("alphabet order: rank table is not a bijection");
        seen[rank[b]] = true;
    }
    AlphabetOrder ord;
    ord.rank_ = rank;
    return ord;
}

bool AlphabetOrder::is_identity() const {
    for (unsigned b = 0; b < 256; ++b)
        if (rank_[b] != b) return false;
    return true;
}

std::strong_ordering compare_lex(const Bytes& u, const Bytes& v,
                                 const AlphabetOrder& ord) {
    const std::size_t m = std::min(u.size(), v.size());
    for (std::size_t t = 0; t < m; ++t) {
        const Byte ru = ord.rank(u[t]);
        const Byte rv = ord.rank(v[t]);
        if (ru != rv) return ru <=> rv;
    }
    return u.size() <=> v.size();
}

std::strong_ordering compare_omega(const Bytes& u, const Bytes& v,
                                   const AlphabetOrder& ord) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("omega order undefined on empty word");
    // |u| + |v| symbols suffice: agreement that far forces a common period.
    const std::size_t limit = u.size() + v.size();
    std::size_t iu = 0, iv = 0;
    for (std::size_t t = 0; t < limit; ++t) {
        const Byte ru = ord.rank(u[iu]);
        const Byte rv = ord.rank(v[iv]);
        if (ru != rv) return ru <=> rv;
        if (++iu == u.size()) iu = 0;
        if (++iv == v.size()) iv = 0;
    }
    return std::strong_ordering::equal;
}

Bytes right_shift(const Bytes& w, std::size_t i) {
    if (w.empty()) throw std::invalid_argument("right shift undefined on empty word");
    const std::size_t n = w.size();
    const std::size_t j = i % n;
    Bytes out;
    out.reserve(n);
    out.insert(out.end(), w.end() - static_cast<std::ptrdiff_t>(j), w.end());
    out.insert(out.end(), w.begin(), w.end() - static_cast<std::ptrdiff_t>(j));
    return out;
}

std::vector<Bytes> conjugacy_class(const Bytes& w) {
    if (w.empty()) throw std::invalid_argument("conjugacy class undefined on empty word");
    std::vector<Bytes> cls;
    cls.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cls.push_back(right_shift(w, i));
    return cls;
}

Bytes context_of_order(const Bytes& w, std::size_t k) {
    if (w.empty()) {
        if (k > 0)
            throw std::invalid_argument("context of positive order undefined on empty word");
        return {};
    }
    Bytes out;
    out.reserve(k);
    std::size_t i = 0;
    for (std::size_t t = 0; t < k; ++t) {
        out.push_back(w[i]);
        if (++i == w.size()) i = 0;
    }
    return out;
}

Bytes reversal(const Bytes& w) {
    return Bytes(w.rbegin(), w.rend());
}

}  // namespace xbwt
