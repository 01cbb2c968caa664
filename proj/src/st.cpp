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

#include "xbwt/st.hpp"

#include <algorithm>
#include <stdexcept>

#include "xbwt/context_graph.hpp"
#include "xbwt/permutation.hpp"

namespace xbwt {

IndexedTransform st_forward(const Bytes& w, std::size_t k, const AlphabetOrder& ord) {
    if (w.empty()) throw std::invalid_argument("transform undefined on empty word");
    const std::size_t n = w.size();

    // Two distinct rotations of one word differ within n symbols, so
    // contexts longer than n never change the order.
    const std::size_t k_eff = std::min(k, n);

    std::vector<Bytes> ranked;
    ranked.push_back(detail::ranked_copy(w, ord));
    std::vector<detail::RotationRef> refs;
    refs.reserve(n);
    for (Pos i = 1; i <= n; ++i)
        refs.push_back({0, static_cast<Pos>((n - (i - 1)) % n)});

    const std::vector<Pos> order = detail::sort_rotations_by_context(ranked, refs, k_eff);

    IndexedTransform out;
    out.last_column.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Pos i = order[r] + 1;  // rotation number
        out.last_column[r] = w[(n - i) % n];
        if (i == 1) out.index = static_cast<Pos>(r + 1);
    }
    return out;
}

Bytes st_inverse(const IndexedTransform& t, std::size_t k, const AlphabetOrder& ord) {
    const std::size_t n = t.last_column.size();
    if (t.index < 1 || t.index > n) throw std::out_of_range("transform index out of range");

    const ContextGraph g(t.last_column, k, ord);
    Configuration conf = initial_configuration(g, g.context_of_label(t.index));
    Bytes emission;
    emission.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        const std::optional<EdgeStep> e = smallest_edge_step(g, conf);
        if (!e) throw std::runtime_error("invalid ST image");
        emission.push_back(e->letter);
    }
    return reversal(emission);
}

}  // namespace xbwt
