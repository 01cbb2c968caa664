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

#include "xbwt/context_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "xbwt/checks.hpp"
#include "xbwt/permutation.hpp"

namespace xbwt {

namespace {

// Equality of the k-contexts of rows i and j, read by walking the standard
// permutation in lockstep. Exits on the first differing letter, when the
// pair of walk positions returns to its start (the letter streams are then
// periodic and known equal), or after min(k, 2n) letters: contexts of a
// valid conjugate list have periods summing to at most 2n, so agreement
// that far implies agreement everywhere.
bool contexts_equal(const Bytes& L, const std::vector<Pos>& pi, Pos i, Pos j,
                    std::size_t k) {
    const std::size_t cap = std::min(k, 2 * L.size());
    Pos x = pi[i - 1], y = pi[j - 1];
    const Pos x0 = x, y0 = y;
    for (std::size_t t = 0; t < cap; ++t) {
        if (L[x - 1] != L[y - 1]) return false;
        x = pi[x - 1];
        y = pi[y - 1];
        if (x == x0 && y == y0) return true;
    }
    return true;
}

}  // namespace

ContextGraph::ContextGraph(const Bytes& L, std::size_t k, const AlphabetOrder& ord)
    : k_(k), letters_(L), ord_(ord) {
    if (L.empty()) throw std::invalid_argument("context graph undefined on empty last column");
    const std::size_t n = L.size();
    pi_ = standard_permutation(L, ord).images();

    // Rows of a context-sorted list with equal contexts are adjacent, so
    // grouping reduces to comparing neighbours. This is also what makes the
    // per-context label ranges contiguous.
    row_context_.resize(n);
    row_context_[0] = 0;
    first_label_.push_back(1);
    for (Pos i = 2; i <= n; ++i) {
        if (!contexts_equal(letters_, pi_, i - 1, i, k_))
            first_label_.push_back(i);
        row_context_[i - 1] = static_cast<Pos>(first_label_.size()) - 1;
    }
    first_label_.push_back(static_cast<Pos>(n) + 1);

    // The context of row pi^{-1}(m) starts with letter m and continues with
    // the context of row m, which is exactly edge m's target.
    target_.resize(n);
    for (Pos j = 1; j <= n; ++j) target_[pi_[j - 1] - 1] = row_context_[j - 1];
}

ContextGraph build_context_graph(const Bytes& L, std::size_t k, const AlphabetOrder& ord) {
    return ContextGraph(L, k, ord);
}

Bytes ContextGraph::context_bytes(Pos context_id) const {
    if (context_id >= context_count())
        throw std::out_of_range("context id out of range");
    Bytes out;
    out.reserve(k_);
    Pos j = first_label_[context_id];
    for (std::size_t t = 0; t < k_; ++t) {
        j = pi_[j - 1];
        out.push_back(letters_[j - 1]);
    }
    return out;
}

std::optional<Pos> ContextGraph::find_context(const Bytes& context) const {
    if (context.size() != k_) return std::nullopt;
    Pos lo = 0, hi = context_count();
    while (lo < hi) {
        const Pos mid = lo + (hi - lo) / 2;
        const std::strong_ordering c = compare_lex(context_bytes(mid), context, ord_);
        if (c == std::strong_ordering::equal) return mid;
        if (c == std::strong_ordering::less)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::string ContextGraph::debug_dump() const {
    std::vector<Bytes> ctx;
    ctx.reserve(context_count());
    for (Pos c = 0; c < context_count(); ++c) ctx.push_back(context_bytes(c));

    std::string out;
    for (Pos label = 1; label <= edge_count(); ++label) {
        out += std::to_string(label);
        out += '\t';
        out += to_string(ctx[context_of_label(label)]);
        out += '\t';
        out += to_string(ctx[target_of_label(label)]);
        out += '\t';
        out += static_cast<char>(letter_of_label(label));
        out += '\n';
    }
    return out;
}

Configuration initial_configuration(const ContextGraph& g, Pos start_context_id) {
    if (start_context_id >= g.context_count())
        throw std::out_of_range("start context id out of range");
    Configuration conf;
    conf.context_cursor.resize(g.context_count());
    for (Pos c = 0; c < g.context_count(); ++c) conf.context_cursor[c] = g.first_label(c);
    conf.global_cursor = 1;
    conf.current = start_context_id;
    return conf;
}

std::optional<EdgeStep> smallest_edge_step(const ContextGraph& g, Configuration& conf) {
    const Pos c = conf.current;
    const Pos label = conf.context_cursor[c];
    if (label >= g.first_label(c + 1)) return std::nullopt;
    conf.context_cursor[c] = label + 1;
    conf.current = g.target_of_label(label);
    return EdgeStep{g.letter_of_label(label), label};
}

std::optional<EdgeStep> global_smallest_edge_step(const ContextGraph& g, Configuration& conf) {
    const Pos n = g.edge_count();
    // Within each context labels are consumed in ascending order, so a label
    // is used exactly when it lies below its context's cursor; the global
    // cursor sweep is amortized O(n) over a whole traversal.
    Pos label = conf.global_cursor;
    while (label <= n && conf.context_cursor[g.context_of_label(label)] > label) ++label;
    if (label > n) {
        conf.global_cursor = label;
        return std::nullopt;
    }
    XBWT_CHECK(conf.context_cursor[g.context_of_label(label)] == label,
               "globally smallest unused edge must head its context's range");
    conf.context_cursor[g.context_of_label(label)] = label + 1;
    conf.global_cursor = label + 1;
    conf.current = g.target_of_label(label);
    return EdgeStep{g.letter_of_label(label), label};
}

Bytes chase(const ContextGraph& g, const Bytes& start_context, std::size_t steps) {
    const std::optional<Pos> start = g.find_context(start_context);
    if (!start) throw std::invalid_argument("start context is not a vertex");
    Configuration conf = initial_configuration(g, *start);
    Bytes out;
    out.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        const std::optional<EdgeStep> step = smallest_edge_step(g, conf);
        if (!step) throw std::runtime_error("premature dead end");
        out.push_back(step->letter);
    }
    return out;
}

}  // namespace xbwt
