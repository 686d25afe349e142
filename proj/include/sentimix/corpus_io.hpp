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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentimix/sentiment.hpp"

namespace sentimix {

/// One corpus entry. Test-split entries may come without a label.
struct RawTweet {
    std::string id;
    std::string text;
    std::optional<Sentiment> label;

    friend bool operator==(const RawTweet&, const RawTweet&) = default;
};

struct CorpusStats {
    std::size_t sentence_count = 0;
    double avg_char_length = 0.0;  ///< Unicode scalar values per raw text, spaces included.
    std::size_t vocab_size = 0;    ///< Distinct lowercase whitespace tokens.
    std::size_t word_count = 0;    ///< Total whitespace tokens.
};

enum class CorpusFormat { Tsv, Conll };

/// "tsv" or "conll"; throws InvalidArgument otherwise.
CorpusFormat parse_corpus_format(std::string_view name);

/// `id <TAB> text [<TAB> label]` per non-empty line. Either every line
/// carries a label column or none does. Throws ParseError with the line
/// number for malformed lines, unknown labels and duplicate ids.
std::vector<RawTweet> parse_tsv(std::istream& in);

/// SemEval-style blocks: a `meta <uid> [<sentiment>]` header followed by
/// `token <TAB> langtag` lines, blocks separated by blank lines. Tokens are
/// joined with single spaces; language tags are dropped.
std::vector<RawTweet> parse_conll(std::istream& in);

std::vector<RawTweet> read_corpus(const std::filesystem::path& path, CorpusFormat format);

/// Inverse of parse_tsv (labels written only when every tweet has one).
void write_tsv(std::span<const RawTweet> corpus, std::ostream& out);

/// Throws InvalidArgument on an empty corpus.
CorpusStats corpus_stats(std::span<const RawTweet> corpus);

struct LabeledId {
    std::string id;
    Sentiment label;
    friend bool operator==(const LabeledId&, const LabeledId&) = default;
};

/// Inverse of write_predictions: `id <TAB> label` lines, blank lines skipped.
std::vector<LabeledId> read_predictions(std::istream& in);

/// `id <TAB> label` per line, input order.
void write_predictions(std::span<const std::string> ids, std::span<const Sentiment> labels,
                       std::ostream& out);

}  // namespace sentimix
