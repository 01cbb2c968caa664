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
#include <random>
#include <string>
#include <vector>

#include "xbwt/words.hpp"

namespace testutil {

inline xbwt::Bytes random_word(std::mt19937& rng, std::size_t len,
                               unsigned alphabet, xbwt::Byte base = 'a') {
    std::uniform_int_distribution<unsigned> dist(0, alphabet - 1);
    xbwt::Bytes w(len);
    for (auto& b : w) b = static_cast<xbwt::Byte>(base + dist(rng));
    return w;
}

// All alphabet^len words of exactly the given length, odometer order.
inline std::vector<xbwt::Bytes> all_words(unsigned alphabet, std::size_t len,
                                          xbwt::Byte base = 'a') {
    std::vector<xbwt::Bytes> out;
    xbwt::Bytes w(len, base);
    for (;;) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0) {
            --i;
            if (w[i] != base + alphabet - 1) {
                ++w[i];
                break;
            }
            w[i] = base;
            if (i == 0) return out;
        }
        if (len == 0) return out;
    }
}

// Deterministic filler that looks vaguely like English text: words drawn
// from a small list, sentence-ish punctuation, fixed seed.
inline xbwt::Bytes pseudo_natural_text(std::size_t length, unsigned seed) {
    static const char* const kWords[] = {
        "the",   "of",     "and",   "to",     "in",    "that", "was",
        "his",   "he",     "it",    "with",   "is",    "for",  "as",
        "had",   "you",    "not",   "be",     "her",   "on",   "at",
        "by",    "which",  "have",  "or",     "from",  "this", "him",
        "but",   "all",    "she",   "they",   "were",  "my",   "are",
        "me",    "one",    "their", "so",     "an",    "said", "them",
        "we",    "who",    "would", "been",   "will",  "no",   "when",
        "there", "if",     "more",  "out",    "up",    "into", "do",
        "any",   "your",   "what",  "has",    "man",   "could", "other",
        "than",  "then",   "some",  "very",   "time",  "upon", "about",
    };
    constexpr std::size_t kWordCount = sizeof(kWords) / sizeof(kWords[0]);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, kWordCount - 1);
    std::uniform_int_distribution<int> punct(0, 11);
    std::string text;
    text.reserve(length + 16);
    bool capitalize = true;
    while (text.size() < length) {
        std::string word = kWords[pick(rng)];
        if (capitalize) {
            word[0] = static_cast<char>(word[0] - 'a' + 'A');
            capitalize = false;
        }
        text += word;
        int p = punct(rng);
        if (p == 0) {
            text += ". ";
            capitalize = true;
        } else if (p == 1) {
            text += ", ";
        } else {
            text += ' ';
        }
    }
    text.resize(length);
    return xbwt::Bytes(text.begin(), text.end());
}

}  // namespace testutil
