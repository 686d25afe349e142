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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentimix/preprocess.hpp"
#include "sentimix/sentiment.hpp"

namespace sentimix {

using TokenId = std::uint32_t;

inline constexpr TokenId kPadId = 0;
inline constexpr TokenId kOovId = 1;
inline constexpr std::size_t kDefaultVocabSize = 20000;
inline constexpr std::size_t kDefaultSeqLen = 50;

/// Frequency-ranked token index. Slots 0 (padding) and 1 (out of
/// vocabulary) are reserved and count towards max_size.
class Vocabulary {
public:
    static constexpr std::string_view kPadToken = "<PAD>";
    static constexpr std::string_view kOovToken = "<OOV>";

    Vocabulary();

    /// Ranks by descending frequency, ties by first occurrence, and keeps the
    /// top max_size - 2 tokens. Throws InvalidArgument when max_size < 3.
    static Vocabulary build(std::span<const TokenizedTweet> corpus, std::size_t max_size);

    /// Reads `token <TAB> index` lines written by save().
    static Vocabulary load(std::istream& in);
    void save(std::ostream& out) const;

    TokenId lookup(std::string_view token) const;
    std::size_t size() const noexcept { return tokens_.size(); }
    std::size_t max_size() const noexcept { return max_size_; }
    const std::string& token(TokenId id) const { return tokens_.at(id); }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
    std::size_t max_size_ = 2;
};

/// Fixed-length id sequence, left-padded with kPadId.
struct IdSequence {
    std::vector<TokenId> ids;
    std::optional<Sentiment> label;

    friend bool operator==(const IdSequence&, const IdSequence&) = default;
};

/// Maps tokens to ids (unknown -> kOovId), keeps the last seq_len ids and
/// left-pads shorter inputs. Throws InvalidArgument when seq_len == 0.
IdSequence encode(std::span<const std::string> tokens, const Vocabulary& vocab, std::size_t seq_len);

std::vector<IdSequence> encode_all(std::span<const TokenizedTweet> tweets, const Vocabulary& vocab,
                                   std::size_t seq_len);

}  // namespace sentimix
