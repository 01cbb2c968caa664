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

#include "xbwt/lst.hpp"

#include <algorithm>

#include "xbwt/checks.hpp"
#include "xbwt/context_graph.hpp"
#include "xbwt/lyndon.hpp"
#include "xbwt/permutation.hpp"

namespace xbwt {

Bytes lst_forward(const Bytes& w, std::size_t k, const AlphabetOrder& ord) {
    if (w.empty()) return {};
    std::vector<Bytes> factors = lyndon_factorization(w, ord).factors;
    std::reverse(factors.begin(), factors.end());  // increasing, v_1 first

    // The tie-break must be the global position in the concatenated class
    // list [v_1], [v_2], ..., which is exactly the pool order below; the
    // within-class shift alone would break the inverse.
    std::vector<Bytes> ranked;
    ranked.reserve(factors.size());
    std::vector<detail::RotationRef> refs;
    refs.reserve(w.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        XBWT_CHECK(f == 0 || compare_lex(factors[f - 1], factors[f], ord) !=
                                 std::strong_ordering::greater,
                   "factor classes must be pooled in increasing order");
        const std::size_t len = factors[f].size();
        ranked.push_back(detail::ranked_copy(factors[f], ord));
        for (std::size_t shift = 0; shift < len; ++shift)
            refs.push_back({static_cast<Pos>(f), static_cast<Pos>((len - shift) % len)});
    }

    const std::vector<Pos> order = detail::sort_rotations_by_context(ranked, refs, k);

    Bytes out;
    out.reserve(w.size());
    for (Pos e : order) {
        const detail::RotationRef& ref = refs[e];
        const Bytes& v = factors[ref.word];
        out.push_back(v[(ref.start + v.size() - 1) % v.size()]);
    }
    return out;
}

Bytes lst_inverse(const Bytes& L, std::size_t k, const AlphabetOrder& ord) {
    if (L.empty()) return {};
    const ContextGraph g(L, k, ord);
    Configuration conf = initial_configuration(g, g.context_of_label(1));

    Bytes emission;
    emission.reserve(L.size());
    for (;;) {
        std::optional<EdgeStep> e = smallest_edge_step(g, conf);
        if (!e) e = global_smallest_edge_step(g, conf);
        if (!e) break;  // exhausted
        emission.push_back(e->letter);
    }
    XBWT_CHECK(emission.size() == L.size(), "chase must consume every edge exactly once");
    return reversal(emission);
}

}  // namespace xbwt
