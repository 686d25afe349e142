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

#include "sentimix/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <unordered_map>

#include <unicode/utf8.h>

#include "sentimix/error.hpp"
#include "sentimix/stemmer.hpp"
#include "sentimix/unicode.hpp"

namespace sentimix {

// Defined in the generated english_stopwords.cpp.
extern const char* const kBundledEnglishStopwords;

namespace {

struct Piece {
    std::string_view text;
    bool space;
};

// Splits text into alternating whitespace / non-whitespace runs.
std::vector<Piece> runs(std::string_view text) {
    std::vector<Piece> out;
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    const auto length = static_cast<int32_t>(text.size());
    int32_t i = 0;
    while (i < length) {
        const int32_t start = i;
        UChar32 cp = 0;
        U8_NEXT(bytes, i, length, cp);
        const bool space = cp >= 0 && unicode::is_space(static_cast<char32_t>(cp));
        const auto piece = text.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(i - start));
        if (!out.empty() && out.back().space == space) {
            out.back().text = std::string_view(out.back().text.data(), out.back().text.size() + piece.size());
        } else {
            out.push_back({piece, space});
        }
    }
    return out;
}

// Rebuilds text word by word, letting `edit` shorten or delete each word.
// Whitespace next to an edited word collapses to a single space; whitespace
// left dangling at either end by a deleted word is trimmed.
template <typename Edit>
std::string rewrite_words(std::string_view text, Edit&& edit) {
    std::string out;
    out.reserve(text.size());
    std::string_view gap;   // original whitespace since the last kept word
    bool touched = false;   // an edit happened since the last kept word
    bool any_kept = false;
    for (const auto& piece : runs(text)) {
        if (piece.space) {
            gap = piece.text;
            continue;
        }
        const std::string kept = edit(piece.text);
        const bool changed = kept.size() != piece.text.size();
        if (kept.empty()) {
            touched = true;
            continue;
        }
        if (any_kept) {
            if (touched || changed) {
                out.push_back(' ');
            } else {
                out.append(gap);
            }
        } else if (!touched) {
            out.append(gap);
        }
        out.append(kept);
        any_kept = true;
        touched = changed;
        gap = {};
    }
    if (!touched) {
        out.append(gap);
    }
    return out;
}

bool starts_with_http(std::string_view word) {
    if (word.size() < 4) return false;
    for (std::size_t i = 0; i < 4; ++i) {
        const char c = static_cast<char>(word[i] | 0x20);
        if (c != "http"[i]) return false;
    }
    return true;
}

}  // namespace

StopList::StopList(std::vector<std::string> words, Source source, std::optional<std::size_t> k)
    : source_(source), k_(k) {
    ordered_.reserve(words.size());
    for (auto& w : words) {
        if (set_.insert(w).second) {
            ordered_.push_back(std::move(w));
        }
    }
}

bool StopList::contains(std::string_view word) const { return set_.contains(std::string(word)); }

const StopList& StopList::bundled_english() {
    static const StopList list = [] {
        std::vector<std::string> words;
        std::string_view rest = kBundledEnglishStopwords;
        while (!rest.empty()) {
            const auto nl = rest.find('\n');
            auto line = rest.substr(0, nl);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) words.emplace_back(line);
            if (nl == std::string_view::npos) break;
            rest.remove_prefix(nl + 1);
        }
        return StopList(std::move(words), Source::BundledEnglish);
    }();
    return list;
}

StopList StopList::load(const std::filesystem::path& path, Source source) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stop list '" + path.string() + "'");
    }
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) words.push_back(line);
    }
    return StopList(std::move(words), source);
}

void StopList::save(std::ostream& out) const {
    for (const auto& w : ordered_) {
        out << w << '\n';
    }
}

std::string strip_handles(std::string_view text) {
    return rewrite_words(text, [](std::string_view word) {
        std::string kept;
        std::size_t i = 0;
        while (i < word.size()) {
            if (word[i] == '@' && i + 1 < word.size()) {
                break;  // the rest of the word is the handle
            }
            kept.push_back(word[i]);
            ++i;
        }
        return kept;
    });
}

std::string strip_urls(std::string_view text) {
    return rewrite_words(text, [](std::string_view word) {
        return starts_with_http(word) ? std::string() : std::string(word);
    });
}

std::string strip_punct(std::string_view text) { return unicode::keep_alnum_space(text); }

std::vector<std::string> tokenize(std::string_view text) {
    return unicode::split_whitespace(unicode::to_lower(text));
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens, const StopList& stop) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(kept),
                 [&](const std::string& t) { return !stop.contains(t); });
    return kept;
}

StopList build_tf_stoplist(std::span<const std::vector<TokenizedTweet>> corpora, std::size_t k) {
    if (k == 0) {
        throw InvalidArgument("stop list size must be >= 1");
    }
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& corpus : corpora) {
        for (const auto& tweet : corpus) {
            for (const auto& token : tweet.tokens) {
                ++counts[token];
            }
        }
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    const std::size_t keep = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end(),
                      [](const auto& a, const auto& b) {
                          return a.second != b.second ? a.second > b.second : a.first < b.first;
                      });
    std::vector<std::string> words;
    words.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        words.push_back(std::move(ranked[i].first));
    }
    return StopList(std::move(words), StopList::Source::TfDerived, k);
}

std::vector<TokenizedTweet> clean_and_stem(std::span<const RawTweet> corpus, const StopList& english) {
    std::vector<TokenizedTweet> out;
    out.reserve(corpus.size());
    for (const auto& raw : corpus) {
        const auto cleaned = strip_punct(strip_urls(strip_handles(raw.text)));
        auto tokens = remove_stopwords(tokenize(cleaned), english);
        for (auto& t : tokens) {
            t = stem(t);
        }
        out.push_back({raw.id, std::move(tokens), raw.label});
    }
    return out;
}

void apply_stoplist(std::vector<TokenizedTweet>& tweets, const StopList& stop) {
    for (auto& t : tweets) {
        t.tokens = remove_stopwords(t.tokens, stop);
    }
}

std::vector<TokenizedTweet> run_pipeline(std::span<const RawTweet> corpus, const StopList& english,
                                         const std::optional<StopList>& hindi) {
    auto tweets = clean_and_stem(corpus, english);
    if (hindi) {
        apply_stoplist(tweets, *hindi);
    } else {
        const std::vector<std::vector<TokenizedTweet>> all{tweets};
        apply_stoplist(tweets, build_tf_stoplist(all, kDefaultTfStopListSize));
    }
    return tweets;
}

}  // namespace sentimix
