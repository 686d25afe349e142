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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sentimix/corpus_io.hpp"
#include "sentimix/sentiment.hpp"

namespace sentimix {

/// Output of the cleaning pipeline: lowercase, non-empty letter/digit tokens.
struct TokenizedTweet {
    std::string id;
    std::vector<std::string> tokens;
    std::optional<Sentiment> label;

    friend bool operator==(const TokenizedTweet&, const TokenizedTweet&) = default;
};

class StopList {
public:
    enum class Source { BundledEnglish, TfDerived, File };

    StopList() = default;
    StopList(std::vector<std::string> words, Source source, std::optional<std::size_t> k = {});

    bool contains(std::string_view word) const;
    std::size_t size() const noexcept { return ordered_.size(); }
    /// Words in file order (frequency rank for TF-derived lists).
    const std::vector<std::string>& words() const noexcept { return ordered_; }
    Source source() const noexcept { return source_; }
    std::optional<std::size_t> requested_size() const noexcept { return k_; }

    /// The 179-word English list shipped with the library.
    static const StopList& bundled_english();
    /// One word per line; blank lines are skipped.
    static StopList load(const std::filesystem::path& path, Source source = Source::File);
    void save(std::ostream& out) const;

private:
    std::vector<std::string> ordered_;
    std::unordered_set<std::string> set_;
    Source source_ = Source::File;
    std::optional<std::size_t> k_;
};

/// Delete every `@` that has a non-whitespace run after it, together with
/// the run; a bare `@` stays. Whitespace around
/// a deletion collapses to a single space and is trimmed at the ends.
std::string strip_handles(std::string_view text);

/// Delete every whitespace-delimited word that starts with "http" (any case).
/// Whitespace is collapsed the same way as strip_handles.
std::string strip_urls(std::string_view text);

/// Replace each code point that is not a letter, digit or whitespace with a space.
std::string strip_punct(std::string_view text);

/// Lowercase and split on whitespace.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens, const StopList& stop);

/// The `k` most frequent tokens over every supplied corpus; ties go to the
/// lexicographically smaller token. Throws InvalidArgument when k == 0.
StopList build_tf_stoplist(std::span<const std::vector<TokenizedTweet>> corpora, std::size_t k);

inline constexpr std::size_t kDefaultTfStopListSize = 1000;

/// Handles, URLs, punctuation, tokenization, English stop words and stemming
/// (every step before the frequency-derived stop list).
std::vector<TokenizedTweet> clean_and_stem(std::span<const RawTweet> corpus,
                                           const StopList& english);

/// In-place removal of `stop` from every tweet.
void apply_stoplist(std::vector<TokenizedTweet>& tweets, const StopList& stop);

/// Full pipeline. When `hindi` is empty a frequency list of
/// kDefaultTfStopListSize words is built over `corpus` itself.
std::vector<TokenizedTweet> run_pipeline(std::span<const RawTweet> corpus, const StopList& english,
                                         const std::optional<StopList>& hindi = std::nullopt);

}  // namespace sentimix
