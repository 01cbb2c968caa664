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

#include "xbwt/selftest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "xbwt/bwt.hpp"
#include "xbwt/bwts.hpp"
#include "xbwt/container.hpp"
#include "xbwt/context_graph.hpp"
#include "xbwt/lst.hpp"
#include "xbwt/lyndon.hpp"
#include "xbwt/permutation.hpp"
#include "xbwt/st.hpp"
#include "xbwt/words.hpp"

namespace xbwt {

namespace {

struct Checker {
    SelftestResult result;

    void check(const std::string& name, bool ok) {
        result.report += ok ? "ok   " : "FAIL ";
        result.report += name;
        result.report += '\n';
        result.passed = result.passed && ok;
    }
};

std::vector<std::string> from_words(const std::vector<Bytes>& words) {
    std::vector<std::string> out;
    for (const Bytes& w : words) out.push_back(to_string(w));
    return out;
}

Bytes stream_bytes(const std::ostringstream& os) {
    const std::string s = os.str();
    return Bytes(s.begin(), s.end());
}

// The running example: one word whose published worked transforms cover
// every operation.
const char* const kW = "bcbccbcbcabbaaba";
const char* const kBwtL = "bacbbaaccacbbcbb";
const char* const kBwtsL = "abababaccccbbcbb";
const char* const kStL = "bbacabaacccbbcbb";

void run_fixtures(Checker& c) {
    const AlphabetOrder ord = AlphabetOrder::identity();
    const Bytes w = to_bytes(kW);

    c.check("compare_lex b < ba",
            compare_lex(to_bytes("b"), to_bytes("ba"), ord) == std::strong_ordering::less);
    c.check("compare_omega ba < b",
            compare_omega(to_bytes("ba"), to_bytes("b"), ord) == std::strong_ordering::less);

    const std::vector<std::string> rotations = {
        "bcbccbcbcabbaaba", "abcbccbcbcabbaab", "babcbccbcbcabbaa", "ababcbccbcbcabba",
        "aababcbccbcbcabb", "baababcbccbcbcab", "bbaababcbccbcbca", "abbaababcbccbcbc",
        "cabbaababcbccbcb", "bcabbaababcbccbc", "cbcabbaababcbccb", "bcbcabbaababcbcc",
        "cbcbcabbaababcbc", "ccbcbcabbaababcb", "bccbcbcabbaababc", "cbccbcbcabbaabab"};
    c.check("conjugacy class rows", from_words(conjugacy_class(w)) == rotations);

    c.check("order-7 context of bcbcc",
            context_of_order(to_bytes("bcbcc"), 7) == to_bytes("bcbccbc"));
    c.check("order-7 context of bc",
            context_of_order(to_bytes("bc"), 7) == to_bytes("bcbcbcb"));
    c.check("reversal", reversal(w) == to_bytes("abaabbacbcbccbcb"));

    c.check("lyndon factorization",
            from_words(lyndon_factorization(w, ord).factors) ==
                std::vector<std::string>({"bcbcc", "bc", "bc", "abb", "aab", "a"}));

    c.check("standard permutation of w",
            standard_permutation(w, ord).images() ==
                std::vector<Pos>({10, 13, 14, 16, 1, 3, 6, 8, 11, 12, 15, 2, 4, 5, 7, 9}));
    c.check("standard permutation of the BWT image",
            standard_permutation(to_bytes(kBwtL), ord).images() ==
                std::vector<Pos>({2, 6, 7, 10, 1, 4, 5, 12, 13, 15, 16, 3, 8, 9, 11, 14}));

    c.check("cycles of the bijective image",
            cycle_decomposition(standard_permutation(to_bytes(kBwtsL), ord)).cycles ==
                std::vector<std::vector<Pos>>({{1},
                                               {2, 3, 5},
                                               {4, 7, 6},
                                               {8, 12},
                                               {9, 13},
                                               {10, 15, 11, 16, 14}}));
    c.check("cycles of the order-2 image",
            cycle_decomposition(standard_permutation(to_bytes(kStL), ord)).cycles ==
                std::vector<std::vector<Pos>>(
                    {{1, 3, 7, 6, 2, 5}, {4, 8, 12}, {9, 13}, {10, 15, 11, 16, 14}}));

    c.check("order-2 standard permutation of the rotation list",
            k_order_standard_permutation(conjugacy_class(w), 2, ord).images() ==
                std::vector<Pos>({5, 2, 4, 8, 3, 6, 7, 1, 10, 12, 15, 9, 11, 13, 16, 14}));

    const IndexedTransform bwt = bwt_forward(w, ord);
    c.check("bwt forward", bwt.last_column == to_bytes(kBwtL) && bwt.index == 10);
    c.check("bwt inverse", bwt_inverse(bwt, ord) == w);

    // Full sorted-matrix semantics, rebuilt from the rotation list.
    {
        std::vector<Bytes> rows = conjugacy_class(w);
        std::stable_sort(rows.begin(), rows.end(), [&](const Bytes& a, const Bytes& b) {
            return compare_lex(a, b, ord) == std::strong_ordering::less;
        });
        bool ok = true;
        const std::vector<Pos> labels = {5, 4, 8, 2, 6, 3, 7, 10, 12, 1, 15, 9, 11, 13, 16, 14};
        for (std::size_t r = 0; r < rows.size(); ++r)
            ok = ok && to_string(rows[r]) == rotations[labels[r] - 1];
        c.check("lexicographically sorted matrix rows", ok);
    }
    {
        std::vector<Bytes> rows = conjugacy_class(w);
        std::stable_sort(rows.begin(), rows.end(), [&](const Bytes& a, const Bytes& b) {
            return compare_lex(context_of_order(a, 2), context_of_order(b, 2), ord) ==
                   std::strong_ordering::less;
        });
        bool ok = true;
        const std::vector<Pos> labels = {5, 2, 4, 8, 3, 6, 7, 1, 10, 12, 15, 9, 11, 13, 16, 14};
        for (std::size_t r = 0; r < rows.size(); ++r)
            ok = ok && to_string(rows[r]) == rotations[labels[r] - 1];
        c.check("context-sorted matrix rows", ok);
    }

    c.check("contexts of the order-2 image",
            from_words(reconstruct_contexts(to_bytes(kStL), 2, ord)) ==
                std::vector<std::string>({"aa", "ab", "ab", "ab", "ba", "ba", "bb", "bc",
                                          "bc", "bc", "bc", "ca", "cb", "cb", "cb", "cc"}));
    c.check("contexts of the bijective image",
            from_words(reconstruct_contexts(to_bytes(kBwtsL), 2, ord)) ==
                std::vector<std::string>({"aa", "aa", "ab", "ab", "ba", "ba", "bb", "bc",
                                          "bc", "bc", "bc", "cb", "cb", "cb", "cb", "cc"}));

    c.check("bijective forward", bwts_forward(w, ord) == to_bytes(kBwtsL));
    c.check("bijective inverse", bwts_inverse(to_bytes(kBwtsL), ord) == w);

    const ContextGraph g4(to_bytes(kStL), 2, ord);
    c.check("order-2 graph of the indexed image",
            g4.debug_dump() ==
                "1\taa\tba\tb\n2\tab\tba\tb\n3\tab\taa\ta\n4\tab\tca\tc\n"
                "5\tba\tab\ta\n6\tba\tbb\tb\n7\tbb\tab\ta\n8\tbc\tab\ta\n"
                "9\tbc\tcb\tc\n10\tbc\tcb\tc\n11\tbc\tcb\tc\n12\tca\tbc\tb\n"
                "13\tcb\tbc\tb\n14\tcb\tcc\tc\n15\tcb\tbc\tb\n16\tcc\tbc\tb\n");

    const ContextGraph g5(to_bytes(kBwtsL), 2, ord);
    c.check("order-2 graph of the bijective image",
            g5.debug_dump() ==
                "1\taa\taa\ta\n2\taa\tba\tb\n3\tab\taa\ta\n4\tab\tba\tb\n"
                "5\tba\tab\ta\n6\tba\tbb\tb\n7\tbb\tab\ta\n8\tbc\tcb\tc\n"
                "9\tbc\tcb\tc\n10\tbc\tcb\tc\n11\tbc\tcb\tc\n12\tcb\tbc\tb\n"
                "13\tcb\tbc\tb\n14\tcb\tcc\tc\n15\tcb\tbc\tb\n16\tcc\tbc\tb\n");

    c.check("chase emission", chase(g4, to_bytes("bc"), 16) == to_bytes("abaabbacbcbccbcb"));
    c.check("single chase step", chase(g4, to_bytes("bc"), 1) == to_bytes("a"));

    {
        Configuration conf = initial_configuration(g4, *g4.find_context(to_bytes("bc")));
        std::vector<Pos> labels;
        for (int t = 0; t < 16; ++t) {
            const std::optional<EdgeStep> e = smallest_edge_step(g4, conf);
            if (!e) break;
            labels.push_back(e->label);
        }
        c.check("indexed chase label sequence",
                labels == std::vector<Pos>(
                              {8, 2, 5, 3, 1, 6, 7, 4, 12, 9, 13, 10, 14, 16, 11, 15}));
        bool no_edges = true;
        for (Pos ctx = 0; ctx < g4.context_count(); ++ctx) {
            conf.current = ctx;
            no_edges = no_edges && !smallest_edge_step(g4, conf);
        }
        c.check("no edge left after the full chase", no_edges);
    }

    {
        Configuration conf = initial_configuration(g5, *g5.find_context(to_bytes("aa")));
        std::vector<Pos> labels;
        for (int t = 0; t < 4; ++t) {
            const std::optional<EdgeStep> e = smallest_edge_step(g5, conf);
            labels.push_back(e ? e->label : 0);
        }
        const bool local_exhausted = !smallest_edge_step(g5, conf);
        const std::optional<EdgeStep> jump = global_smallest_edge_step(g5, conf);
        c.check("global fallback step",
                labels == std::vector<Pos>({1, 2, 5, 3}) && local_exhausted && jump &&
                    jump->label == 4 && jump->letter == Byte{'b'} &&
                    conf.current == *g5.find_context(to_bytes("ba")));
    }

    const IndexedTransform st = st_forward(w, 2, ord);
    c.check("order-2 forward", st.last_column == to_bytes(kStL) && st.index == 8);
    c.check("order-2 inverse", st_inverse(st, 2, ord) == w);

    c.check("bijective order-2 forward", lst_forward(w, 2, ord) == to_bytes(kBwtsL));
    c.check("bijective order-2 inverse", lst_inverse(to_bytes(kBwtsL), 2, ord) == w);

    {
        Configuration conf = initial_configuration(g5, g5.context_of_label(1));
        std::vector<Pos> labels;
        for (;;) {
            std::optional<EdgeStep> e = smallest_edge_step(g5, conf);
            if (!e) e = global_smallest_edge_step(g5, conf);
            if (!e) break;
            labels.push_back(e->label);
        }
        c.check("bijective chase label sequence",
                labels == std::vector<Pos>(
                              {1, 2, 5, 3, 4, 6, 7, 8, 12, 9, 13, 10, 14, 16, 11, 15}));
    }

    {
        std::istringstream in(kW);
        std::ostringstream out;
        encode_stream(in, out, TransformId::lst, 2, kDefaultBlockSize, ord);
        Bytes expected = {0x42, 0x57, 0x54, 0x58, 0x01, 0x03, 0x00, 0x02, 0x00,
                          0x00, 0x00, 0x00, 0x10};
        const Bytes payload = to_bytes(kBwtsL);
        expected.insert(expected.end(), payload.begin(), payload.end());
        c.check("bijective order-2 container bytes", stream_bytes(out) == expected);

        std::istringstream back(out.str());
        std::ostringstream decoded;
        decode_stream(back, decoded);
        c.check("bijective order-2 container round-trip", decoded.str() == kW);
    }
    {
        std::istringstream in(kW);
        std::ostringstream out;
        encode_stream(in, out, TransformId::st, 2, kDefaultBlockSize, ord);
        Bytes expected = {0x42, 0x57, 0x54, 0x58, 0x01, 0x02, 0x00, 0x02, 0x00,
                          0x00, 0x00, 0x00, 0x10, 0x00, 0x00, 0x00, 0x07};
        const Bytes payload = to_bytes(kStL);
        expected.insert(expected.end(), payload.begin(), payload.end());
        c.check("indexed order-2 container bytes", stream_bytes(out) == expected);

        std::istringstream back(out.str());
        std::ostringstream decoded;
        decode_stream(back, decoded);
        c.check("indexed order-2 container round-trip", decoded.str() == kW);
    }
}

}  // namespace

SelftestResult selftest() {
    Checker c;
    try {
        run_fixtures(c);
    } catch (const std::exception& e) {
        c.check(std::string("no unexpected exception (") + e.what() + ")", false);
    }
    return c.result;
}

}  // namespace xbwt
