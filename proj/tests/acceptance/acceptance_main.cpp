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

// Acceptance gate: one criterion per command-line argument (1..7), all of
// them when run without arguments. Prints exactly one PASS/FAIL line per
// criterion on stdout; details of any mismatch go to stderr.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "xbwt/bwt.hpp"
#include "xbwt/bwts.hpp"
#include "xbwt/container.hpp"
#include "xbwt/context_graph.hpp"
#include "xbwt/lst.hpp"
#include "xbwt/lyndon.hpp"
#include "xbwt/oracle.hpp"
#include "xbwt/permutation.hpp"
#include "xbwt/st.hpp"
#include "xbwt/stats.hpp"
#include "xbwt/words.hpp"

using namespace xbwt;

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "  check failed: %s\n", what);
        ++failures;
    }
}

const Bytes kW = to_bytes("bcbccbcbcabbaaba");
const Bytes kBwtL = to_bytes("bacbbaaccacbbcbb");
const Bytes kBwtsL = to_bytes("abababaccccbbcbb");
const Bytes kStL = to_bytes("bbacabaacccbbcbb");

// ---- criterion 1: the worked example, exact equality ----

bool criterion_fixtures() {
    const AlphabetOrder ord;

    expect(lyndon_factorization(kW, ord).factors ==
               std::vector<Bytes>{to_bytes("bcbcc"), to_bytes("bc"), to_bytes("bc"),
                                  to_bytes("abb"), to_bytes("aab"), to_bytes("a")},
           "lyndon factorization of the worked example");

    expect(standard_permutation(kW, ord).images() ==
               std::vector<Pos>{10, 13, 14, 16, 1, 3, 6, 8, 11, 12, 15, 2, 4, 5, 7, 9},
           "standard permutation of the input word");
    expect(standard_permutation(kBwtL, ord).images() ==
               std::vector<Pos>{2, 6, 7, 10, 1, 4, 5, 12, 13, 15, 16, 3, 8, 9, 11, 14},
           "standard permutation of the transformed word");
    expect(k_order_standard_permutation(conjugacy_class(kW), 2, ord).images() ==
               std::vector<Pos>{5, 2, 4, 8, 3, 6, 7, 1, 10, 12, 15, 9, 11, 13, 16, 14},
           "order-2 permutation of the rotation list");

    expect(bwt_forward(kW, ord) == IndexedTransform{kBwtL, 10}, "bwt forward");

    expect(bwts_forward(kW, ord) == kBwtsL, "bijective forward");
    expect(cycle_decomposition(standard_permutation(kBwtsL, ord)).cycles ==
               std::vector<std::vector<Pos>>{
                   {1}, {2, 3, 5}, {4, 7, 6}, {8, 12}, {9, 13}, {10, 15, 11, 16, 14}},
           "cycles of the bijective image");

    expect(st_forward(kW, 2, ord) == IndexedTransform{kStL, 8}, "order-2 forward");

    const ContextGraph g(kStL, 2, ord);
    {
        const char* expected[] = {"aa", "ab", "ba", "bb", "bc", "ca", "cb", "cc"};
        bool ok = g.context_count() == 8;
        for (Pos c = 0; ok && c < 8; ++c) ok = g.context_bytes(c) == to_bytes(expected[c]);
        expect(ok, "order-2 context list");
    }
    expect(g.debug_dump() ==
               "1\taa\tba\tb\n2\tab\tba\tb\n3\tab\taa\ta\n4\tab\tca\tc\n"
               "5\tba\tab\ta\n6\tba\tbb\tb\n7\tbb\tab\ta\n8\tbc\tab\ta\n"
               "9\tbc\tcb\tc\n10\tbc\tcb\tc\n11\tbc\tcb\tc\n12\tca\tbc\tb\n"
               "13\tcb\tbc\tb\n14\tcb\tcc\tc\n15\tcb\tbc\tb\n16\tcc\tbc\tb\n",
           "order-2 graph edges");

    {
        Configuration conf = initial_configuration(g, g.context_of_label(8));
        std::vector<Pos> labels;
        for (int t = 0; t < 16; ++t) {
            const std::optional<EdgeStep> e = smallest_edge_step(g, conf);
            if (!e) break;
            labels.push_back(e->label);
        }
        expect(labels == std::vector<Pos>{8, 2, 5, 3, 1, 6, 7, 4, 12, 9, 13, 10, 14, 16, 11, 15},
               "indexed chase label sequence");
    }
    expect(st_inverse({kStL, 8}, 2, ord) == kW, "order-2 inverse");

    {
        const ContextGraph gb(kBwtsL, 2, ord);
        Configuration conf = initial_configuration(gb, gb.context_of_label(1));
        std::vector<Pos> labels;
        for (;;) {
            std::optional<EdgeStep> e = smallest_edge_step(gb, conf);
            if (!e) e = global_smallest_edge_step(gb, conf);
            if (!e) break;
            labels.push_back(e->label);
        }
        expect(labels == std::vector<Pos>{1, 2, 5, 3, 4, 6, 7, 8, 12, 9, 13, 10, 14, 16, 11, 15},
               "bijective chase label sequence");
    }
    expect(lst_inverse(kBwtsL, 2, ord) == kW, "bijective order-2 inverse");
    return true;
}

// ---- criterion 2: exhaustive round trips and injectivity ----

bool criterion_exhaustive() {
    const AlphabetOrder ord;
    const std::size_t ks[] = {0, 1, 2, 3, 5, 8};

    auto sweep = [&](unsigned alphabet, std::size_t max_len) {
        for (std::size_t n = 1; n <= max_len; ++n) {
            std::set<Bytes> bwts_images;
            std::set<Bytes> lst_images[6];
            std::size_t count = 0;
            for (const Bytes& w : testutil::all_words(alphabet, n)) {
                ++count;
                expect(bwt_inverse(bwt_forward(w, ord), ord) == w, "bwt round trip");
                const Bytes lb = bwts_forward(w, ord);
                expect(bwts_inverse(lb, ord) == w, "bijective round trip");
                bwts_images.insert(lb);
                for (std::size_t i = 0; i < 6; ++i) {
                    const std::size_t k = ks[i];
                    expect(st_inverse(st_forward(w, k, ord), k, ord) == w,
                           "limited-order round trip");
                    const Bytes ll = lst_forward(w, k, ord);
                    expect(lst_inverse(ll, k, ord) == w, "bijective limited-order round trip");
                    lst_images[i].insert(ll);
                }
            }
            expect(bwts_images.size() == count, "bijective transform injectivity");
            for (std::size_t i = 0; i < 6; ++i)
                expect(lst_images[i].size() == count,
                       "bijective limited-order transform injectivity");
        }
    };
    sweep(2, 12);
    sweep(3, 8);
    return true;
}

// ---- criterion 3: oracle equivalence on random words ----

bool criterion_oracle() {
    const AlphabetOrder ord;
    std::mt19937 rng(20260823);
    const std::size_t ks[] = {0, 1, 2, 3, 8};

    for (int trial = 0; trial < 10000; ++trial) {
        const Bytes w = testutil::random_word(rng, 1 + rng() % 64, 4);

        const IndexedTransform b = bwt_forward(w, ord);
        const auto nb = oracle::naive_matrix_transform(w, oracle::MatrixMode::lex, 0, ord);
        expect(b.last_column == nb.last_column && b.index == nb.index,
               "bwt agrees with the oracle");

        expect(bwts_forward(w, ord) ==
                   oracle::naive_bijective_transform(w, oracle::BijectiveVariant::bwts, 0, ord),
               "bijective transform agrees with the oracle");

        for (std::size_t k : ks) {
            const IndexedTransform s = st_forward(w, k, ord);
            const auto ns =
                oracle::naive_matrix_transform(w, oracle::MatrixMode::context_k, k, ord);
            expect(s.last_column == ns.last_column && s.index == ns.index,
                   "limited-order transform agrees with the oracle");
            expect(lst_forward(w, k, ord) ==
                       oracle::naive_bijective_transform(w, oracle::BijectiveVariant::lst, k, ord),
                   "bijective limited-order transform agrees with the oracle");
        }
    }
    return true;
}

// ---- criterion 4: closed forms ----

bool criterion_closed_forms() {
    const AlphabetOrder ord;
    std::mt19937 rng(97);

    for (int trial = 0; trial < 1000; ++trial) {
        const Bytes w = testutil::random_word(rng, 1 + rng() % 256, 4);
        expect(st_forward(w, 0, ord) == IndexedTransform{reversal(w), 1},
               "order zero reverses");

        std::vector<Bytes> factors = lyndon_factorization(w, ord).factors;
        std::reverse(factors.begin(), factors.end());
        Bytes expected;
        for (const Bytes& v : factors) {
            const Bytes r = reversal(v);
            expected.insert(expected.end(), r.begin(), r.end());
        }
        expect(lst_forward(w, 0, ord) == expected,
               "bijective order zero concatenates reversed factors");
    }

    // Powers of one Lyndon word: the bijective transform and the classic
    // last column coincide.
    for (std::size_t len = 1; len <= 8; ++len) {
        for (const Bytes& v : testutil::all_words(3, len)) {
            if (!is_lyndon(v, ord)) continue;
            Bytes p;
            for (std::size_t total = len; total <= 16; total += len) {
                p.insert(p.end(), v.begin(), v.end());
                expect(bwts_forward(p, ord) == bwt_forward(p, ord).last_column,
                       "power of a Lyndon word matches the classic last column");
            }
        }
    }
    return true;
}

// ---- criterion 5: container round trips and corruption handling ----

std::string random_binary(std::mt19937& rng, std::size_t len) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::string s(len, '\0');
    for (auto& c : s) c = static_cast<char>(dist(rng));
    return s;
}

bool roundtrip_container(const std::string& input, TransformId t, std::size_t k) {
    std::istringstream in(input);
    std::ostringstream enc;
    encode_stream(in, enc, t, k, kDefaultBlockSize, AlphabetOrder());
    std::istringstream back(enc.str());
    std::ostringstream dec;
    decode_stream(back, dec);
    return dec.str() == input;
}

bool criterion_container() {
    std::mt19937 rng(101);
    const std::size_t sizes[] = {0, 1, 262143, 262144, 262145, 1u << 20};

    for (std::size_t size : sizes) {
        const std::string input = random_binary(rng, size);
        expect(roundtrip_container(input, TransformId::bwt, 0), "bwt container round trip");
        expect(roundtrip_container(input, TransformId::bwts, 0),
               "bijective container round trip");
        for (std::size_t k : {0u, 2u, 4u, 8u}) {
            expect(roundtrip_container(input, TransformId::st, k),
                   "limited-order container round trip");
            expect(roundtrip_container(input, TransformId::lst, k),
                   "bijective limited-order container round trip");
        }
    }

    // Targeted corruption: each named defect must raise an error.
    std::istringstream in(std::string("sample input for corruption"));
    std::ostringstream enc;
    encode_stream(in, enc, TransformId::st, 2, 8, AlphabetOrder());
    const std::string good = enc.str();

    auto decode_fails = [](std::string bytes) {
        std::istringstream is(bytes);
        std::ostringstream os;
        try {
            decode_stream(is, os);
        } catch (const std::runtime_error&) {
            return true;
        }
        return false;
    };
    std::string bad = good;
    bad[0] = 'Z';
    expect(decode_fails(bad), "bad magic raises an error");
    expect(decode_fails(good.substr(0, good.size() - 3)), "truncated block raises an error");
    bad = good;
    bad[kHeaderSize + 7] = '\x70';  // row 112 of an 8-byte block
    expect(decode_fails(bad), "out-of-range row raises an error");

    // Random mutations may decode to something else, but must never crash.
    std::uniform_int_distribution<std::size_t> pos_dist(0, good.size() - 1);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    for (int trial = 0; trial < 400; ++trial) {
        std::string fuzzed = good;
        const int flips = 1 + trial % 4;
        for (int f = 0; f < flips; ++f)
            fuzzed[pos_dist(rng)] = static_cast<char>(byte_dist(rng));
        if (trial % 3 == 0) fuzzed = fuzzed.substr(0, trial % fuzzed.size());
        std::istringstream is(fuzzed);
        std::ostringstream os;
        try {
            decode_stream(is, os);
        } catch (const std::exception&) {
            // any reported error is fine; crashing is not
        }
    }
    return true;
}

// ---- criterion 6: desk-scale performance ----

bool criterion_performance() {
    const Bytes text = testutil::pseudo_natural_text(262144, 7);
    const std::string input(text.begin(), text.end());

    auto timed_roundtrip = [&](TransformId t, std::size_t k, const char* name) {
        const auto start = std::chrono::steady_clock::now();
        std::istringstream in(input);
        std::ostringstream enc;
        encode_stream(in, enc, t, k, kDefaultBlockSize, AlphabetOrder());
        std::istringstream back(enc.str());
        std::ostringstream dec;
        decode_stream(back, dec);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "  %s encode+decode: %.2f s\n", name, seconds);
        expect(dec.str() == input, "round trip of the natural-language block");
        expect(seconds < 10.0, "encode+decode stays under ten seconds");
    };
    timed_roundtrip(TransformId::bwts, 0, "bijective");
    timed_roundtrip(TransformId::lst, 4, "bijective order-4");
    return true;
}

// ---- criterion 7: pinned stats of the bundled sample ----

bool criterion_stats() {
    const std::string path = std::string(XBWT_TEST_DATA_DIR) + "/sample.txt";
    std::ifstream f(path, std::ios::binary);
    std::ostringstream slurp;
    slurp << f.rdbuf();
    const std::string text = slurp.str();
    expect(text.size() == 1827, "bundled sample file length");

    auto report = [&](TransformId t, std::size_t k, std::size_t block) {
        std::istringstream in(text);
        return format_stats(stats(in, t, k, block));
    };
    expect(report(TransformId::bwts, 0, 262144) ==
               "transform\tbwts\tk\t0\tblock_size\t262144\n"
               "block\t1\tlength\t1827\truns_in\t1790\truns_out\t1174"
               "\tmtf_zeros\t0.357417\tmtf_entropy\t3.7370\n"
               "total\t1\tlength\t1827\truns_in\t1790\truns_out\t1174"
               "\tmtf_zeros\t0.357417\tmtf_entropy\t3.7370\n"
               "index_bytes_avoided\t4\n",
           "pinned bijective stats");
    expect(report(TransformId::st, 2, 1024) ==
               "transform\tst\tk\t2\tblock_size\t1024\n"
               "block\t1\tlength\t1024\truns_in\t1004\truns_out\t755"
               "\tmtf_zeros\t0.262695\tmtf_entropy\t4.0857\n"
               "block\t2\tlength\t803\truns_in\t786\truns_out\t587"
               "\tmtf_zeros\t0.268991\tmtf_entropy\t4.1368\n"
               "total\t2\tlength\t1827\truns_in\t1790\truns_out\t1342"
               "\tmtf_zeros\t0.265463\tmtf_entropy\t4.1400\n"
               "index_bytes_avoided\t0\n",
           "pinned limited-order stats");
    expect(report(TransformId::lst, 4, 512) ==
               "transform\tlst\tk\t4\tblock_size\t512\n"
               "block\t1\tlength\t512\truns_in\t499\truns_out\t385"
               "\tmtf_zeros\t0.248047\tmtf_entropy\t4.2744\n"
               "block\t2\tlength\t512\truns_in\t505\truns_out\t371"
               "\tmtf_zeros\t0.275391\tmtf_entropy\t4.2349\n"
               "block\t3\tlength\t512\truns_in\t499\truns_out\t373"
               "\tmtf_zeros\t0.271484\tmtf_entropy\t4.2223\n"
               "block\t4\tlength\t291\truns_in\t287\truns_out\t235"
               "\tmtf_zeros\t0.192440\tmtf_entropy\t4.5404\n"
               "total\t4\tlength\t1827\truns_in\t1790\truns_out\t1364"
               "\tmtf_zeros\t0.253421\tmtf_entropy\t4.3660\n"
               "index_bytes_avoided\t16\n",
           "pinned bijective order-4 stats");
    return true;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "worked-example fixtures", criterion_fixtures},
    {2, "exhaustive round trips and injectivity", criterion_exhaustive},
    {3, "oracle equivalence on random words", criterion_oracle},
    {4, "closed-form properties", criterion_closed_forms},
    {5, "container round trips and corruption handling", criterion_container},
    {6, "256 KiB block performance", criterion_performance},
    {7, "pinned stats on the bundled sample", criterion_stats},
};

int run_one(const Criterion& c) {
    const int before = failures;
    bool completed = false;
    try {
        c.run();
        completed = true;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "  unexpected exception: %s\n", e.what());
    }
    const bool ok = completed && failures == before;
    std::printf("%s  criterion %d  %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int rc = 0;
    if (argc < 2) {
        for (const Criterion& c : kCriteria) rc |= run_one(c);
        return rc;
    }
    for (int i = 1; i < argc; ++i) {
        const int id = std::atoi(argv[i]);
        bool found = false;
        for (const Criterion& c : kCriteria) {
            if (c.id != id) continue;
            rc |= run_one(c);
            found = true;
        }
        if (!found) {
            std::fprintf(stderr, "no criterion %s\n", argv[i]);
            rc = 2;
        }
    }
    return rc;
}
