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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xbwt/words.hpp"

namespace xbwt {

// The k-order context graph of a context-sorted conjugate list, rebuilt
// from its last column L alone: one vertex per distinct k-context, one edge
// per row. Edge i leaves the context of row i, carries label i and letter
// L[i], and enters the context obtained by prepending that letter.
//
// Contexts are kept as integer ids in sorted order; the byte strings are
// reconstructed on demand by walking the standard permutation. Because the
// list is context-sorted, the labels of each context form one contiguous
// ascending range, which is what makes cursor-based traversal work.
class ContextGraph {
public:
    // Throws std::invalid_argument on empty L. For an L that is not a valid
    // context-sorted last column the graph is still built; chases over it
    // then dead-end or emit garbage, mirroring the inverse-transform
    // contracts.
    ContextGraph(const Bytes& L, std::size_t k, const AlphabetOrder& ord);

    Pos edge_count() const { return static_cast<Pos>(letters_.size()); }
    Pos context_count() const { return static_cast<Pos>(first_label_.size()) - 1; }
    std::size_t order() const { return k_; }

    // Context ids are 0-based; edge labels are 1-based.
    Pos context_of_label(Pos label) const { return row_context_[label - 1]; }
    Pos target_of_label(Pos label) const { return target_[label - 1]; }
    Byte letter_of_label(Pos label) const { return letters_[label - 1]; }

    // Labels leaving context c form the range [first_label(c), first_label(c+1)).
    Pos first_label(Pos context_id) const { return first_label_[context_id]; }

    // The context's k bytes, rebuilt in O(k).
    Bytes context_bytes(Pos context_id) const;

    // Id of the context equal to the given bytes, if it is a vertex.
    std::optional<Pos> find_context(const Bytes& context) const;

    // One line per edge, labels ascending: label, source context, target
    // context and letter, tab separated.
    std::string debug_dump() const;

private:
    std::size_t k_ = 0;
    Bytes letters_;                // letters_[i-1] = L[i]
    std::vector<Pos> row_context_; // context id of row i
    std::vector<Pos> target_;      // target context id of edge i
    std::vector<Pos> first_label_; // per context: first label; sentinel n+1
    std::vector<Pos> pi_;          // standard permutation images, for context_bytes
    AlphabetOrder ord_;
};

ContextGraph build_context_graph(const Bytes& L, std::size_t k, const AlphabetOrder& ord);

// Traversal state: the unused-edge set compressed into one ascending cursor
// per context (exploiting label contiguity) plus a global ascending cursor,
// and the current context.
struct Configuration {
    std::vector<Pos> context_cursor;
    Pos global_cursor = 1;
    Pos current = 0;
};

Configuration initial_configuration(const ContextGraph& g, Pos start_context_id);

struct EdgeStep {
    Byte letter = 0;
    Pos label = 0;
};

// Consumes the smallest-label unused edge leaving conf.current and moves to
// its target. Empty result means no unused edge leaves the current context.
std::optional<EdgeStep> smallest_edge_step(const ContextGraph& g, Configuration& conf);

// Consumes the globally smallest unused edge regardless of the current
// context. Empty result means every edge has been consumed.
std::optional<EdgeStep> global_smallest_edge_step(const ContextGraph& g, Configuration& conf);

// Runs `steps` smallest-edge steps from the given start vertex and returns
// the emitted letters. Throws std::invalid_argument when start_context is
// not a vertex and std::runtime_error("premature dead end") when an edge is
// missing before `steps` transitions.
Bytes chase(const ContextGraph& g, const Bytes& start_context, std::size_t steps);

}  // namespace xbwt
