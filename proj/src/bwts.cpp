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

#include "xbwt/bwts.hpp"

#include <algorithm>
#include <limits>

#include "xbwt/checks.hpp"
#include "xbwt/lyndon.hpp"
#include "xbwt/permutation.hpp"

namespace xbwt {

namespace {

// Lyndon factors in increasing order (v_1 first, i.e. the text reversed).
std::vector<Bytes> increasing_factors(const Bytes& w, const AlphabetOrder& ord) {
    std::vector<Bytes> factors = lyndon_factorization(w, ord).factors;
    std::reverse(factors.begin(), factors.end());
    return factors;
}

// Cyclic start offset of rotation r^shift(v) inside v.
std::size_t rotation_start(std::size_t len, std::size_t shift) {
    return (len - shift % len) % len;
}

}  // namespace

OmegaSortedConjugates omega_sorted_conjugates(const Bytes& w, const AlphabetOrder& ord) {
    const std::vector<Bytes> factors = increasing_factors(w, ord);

    std::vector<Bytes> ranked;
    std::vector<detail::RotationRef> refs;
    std::vector<OmegaConjugateEntry> pool;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        ranked.push_back(detail::ranked_copy(factors[f], ord));
        for (std::size_t shift = 0; shift < factors[f].size(); ++shift) {
            refs.push_back({static_cast<Pos>(f),
                            static_cast<Pos>(rotation_start(factors[f].size(), shift))});
            pool.push_back({right_shift(factors[f], shift),
                            static_cast<Pos>(f + 1), shift});
        }
    }

    // A key long enough to decide the omega order for every pair; the engine
    // caps it at twice the longest element anyway.
    const std::vector<Pos> order = detail::sort_rotations_by_context(
        ranked, refs, std::numeric_limits<std::size_t>::max());

    OmegaSortedConjugates out;
    out.entries.reserve(pool.size());
    for (Pos e : order) out.entries.push_back(pool[e]);

#ifndef XBWT_NO_INVARIANT_CHECKS
    for (std::size_t r = 1; r < out.entries.size(); ++r) {
        const OmegaConjugateEntry& prev = out.entries[r - 1];
        const OmegaConjugateEntry& cur = out.entries[r];
        if (compare_omega(prev.word, cur.word, ord) == std::strong_ordering::equal)
            XBWT_CHECK(prev.word.back() == cur.word.back(),
                       "omega-equal entries must share a last letter");
    }
#endif
    return out;
}

Bytes bwts_forward(const Bytes& w, const AlphabetOrder& ord) {
    if (w.empty()) return {};
    const std::vector<Bytes> factors = increasing_factors(w, ord);

    // Repeated factors contribute identical rotation sets whose omega
    // comparisons never terminate early, so collapse them to one class with
    // a multiplicity. Equal factors are adjacent because the increasing
    // list is sorted.
    std::vector<Bytes> classes;
    std::vector<std::size_t> multiplicity;
    for (const Bytes& v : factors) {
        if (!classes.empty() && classes.back() == v) {
            ++multiplicity.back();
        } else {
            classes.push_back(v);
            multiplicity.push_back(1);
        }
    }

    std::vector<Bytes> ranked;
    std::vector<detail::RotationRef> refs;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        ranked.push_back(detail::ranked_copy(classes[c], ord));
        for (std::size_t shift = 0; shift < classes[c].size(); ++shift)
            refs.push_back({static_cast<Pos>(c),
                            static_cast<Pos>(rotation_start(classes[c].size(), shift))});
    }

    const std::vector<Pos> order = detail::sort_rotations_by_context(
        ranked, refs, std::numeric_limits<std::size_t>::max());

    // Expanding a class entry into `multiplicity` copies reproduces the
    // canonical (source factor, shift) tie order: the duplicates of one
    // rotation are exactly the omega-equal entries that sort together.
    Bytes out;
    out.reserve(w.size());
    for (Pos e : order) {
        const detail::RotationRef& ref = refs[e];
        const Bytes& v = classes[ref.word];
        const Byte last = v[(ref.start + v.size() - 1) % v.size()];
        out.insert(out.end(), multiplicity[ref.word], last);
    }
    XBWT_CHECK(out.size() == w.size(), "output length must match input length");
    return out;
}

Bytes bwts_inverse(const Bytes& L, const AlphabetOrder& ord) {
    if (L.empty()) return {};
    const CycleDecomposition dec =
        cycle_decomposition(standard_permutation(L, ord));

    // Cycle j (by increasing minimal element i_j) spells factor v_j when read
    // from the second element onward and closed with the first; the word is
    // the factors concatenated largest first.
    Bytes out;
    out.reserve(L.size());
    for (std::size_t j = dec.cycles.size(); j > 0; --j) {
        const std::vector<Pos>& cycle = dec.cycles[j - 1];
        for (std::size_t t = 1; t < cycle.size(); ++t) out.push_back(L[cycle[t] - 1]);
        out.push_back(L[cycle[0] - 1]);
    }
    return out;
}

}  // namespace xbwt
