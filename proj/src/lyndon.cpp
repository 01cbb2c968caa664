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

#include "xbwt/lyndon.hpp"

#include <stdexcept>

namespace xbwt {

LyndonFactorization lyndon_factorization(const Bytes& w, const AlphabetOrder& ord) {
    LyndonFactorization out;
    out.total_length = w.size();
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        std::size_t p = i;  // candidate period start
        while (j < n && ord.rank(w[p]) <= ord.rank(w[j])) {
            if (ord.rank(w[p]) < ord.rank(w[j]))
                p = i;
            else
                ++p;
            ++j;
        }
        const std::size_t period = j - p;
        while (i <= p) {
            out.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                                     w.begin() + static_cast<std::ptrdiff_t>(i + period));
            i += period;
        }
    }
    return out;
}

bool is_lyndon(const Bytes& w, const AlphabetOrder& ord) {
    if (w.empty()) throw std::invalid_argument("is_lyndon undefined on empty word");
    // w is Lyndon iff its factorization is the single factor w.
    const LyndonFactorization f = lyndon_factorization(w, ord);
    return f.factors.size() == 1 && f.factors.front().size() == w.size();
}

}  // namespace xbwt
