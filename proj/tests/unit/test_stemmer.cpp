// Copyright 2026 the sentimix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "sentimix/stemmer.hpp"
#include "sentimix/unicode.hpp"
#include "support/oracles.hpp"

using sentimix::stem;

TEST_SUITE("stemmer") {
    TEST_CASE("examples") {
        CHECK(stem("running") == "run");
        CHECK(stem("at") == "at");
        CHECK(stem("generously") == "generous");
        CHECK(stem("") == "");
        CHECK(stem("caresses") == "caress");
        CHECK(stem("hopefulness") == "hope");
        CHECK(stem("skies") == "sky");
        CHECK(stem("dying") == "die");
        CHECK(stem("news") == "news");
        CHECK(stem("'tis") == "tis");
        CHECK(stem("john's") == "john");
    }

    TEST_CASE("reference conformance fixture") {
        const auto pairs = sentimix::testing::load_stem_fixture(SENTIMIX_FIXTURE_DIR "/porter2_conformance.tsv");
        REQUIRE(pairs.size() >= 200);
        std::size_t mismatches = 0;
        for (const auto& p : pairs) {
            const auto got = stem(p.word);
            if (got != p.stem) {
                ++mismatches;
                MESSAGE(p.word << ": expected " << p.stem << ", got " << got);
            }
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("output length and alphabet") {
        const auto pairs = sentimix::testing::load_stem_fixture(SENTIMIX_FIXTURE_DIR "/porter2_conformance.tsv");
        for (const auto& p : pairs) {
            const auto s = stem(p.word);
            CHECK(s.size() <= p.word.size() + 1);
            for (char c : s) CHECK(((c >= 'a' && c <= 'z') || c == '\''));
        }
    }

    TEST_CASE("passthrough rules") {
        CHECK(stem("gr8") == "gr8");
        CHECK(stem("running2") == "running2");
        CHECK(stem("Running") == "Running");
        CHECK(stem("ab") == "ab");
    }

    TEST_CASE("non-ASCII letters behave as non-vowels, as in the reference") {
        CHECK(stem("naïve") == "naïv");
        CHECK(stem("café") == "café");
        CHECK(stem("résumés") == "résumé");
        CHECK(stem("\xFF" "ing") == "\xFF" "ing");  // invalid UTF-8 is left alone
    }

    TEST_CASE("Porter2 is not idempotent on every word") {
        // The published algorithm maps ugly -> ugli -> ug.
        CHECK(stem("ugly") == "ugli");
        CHECK(stem("ugli") == "ug");
        CHECK(stem(stem("running")) == stem("running"));
    }
}
