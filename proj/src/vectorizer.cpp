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

#include "sentimix/vectorizer.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "sentimix/error.hpp"

namespace sentimix {

Vocabulary::Vocabulary()
    : tokens_{std::string(kPadToken), std::string(kOovToken)},
      index_{{std::string(kPadToken), kPadId}, {std::string(kOovToken), kOovId}} {}

Vocabulary Vocabulary::build(std::span<const TokenizedTweet> corpus, std::size_t max_size) {
    if (max_size < 3) {
        throw InvalidArgument("vocabulary max size must be >= 3, got " + std::to_string(max_size));
    }
    struct Entry {
        std::size_t count = 0;
        std::size_t first_seen = 0;
    };
    std::unordered_map<std::string, Entry> entries;
    std::vector<std::string> order;
    for (const auto& tweet : corpus) {
        for (const auto& token : tweet.tokens) {
            if (token == kPadToken || token == kOovToken) continue;  // reserved slots
            auto [it, inserted] = entries.try_emplace(token);
            if (inserted) {
                it->second.first_seen = order.size();
                order.push_back(token);
            }
            ++it->second.count;
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
        return entries[a].count > entries[b].count;
    });

    Vocabulary vocab;
    vocab.max_size_ = max_size;
    const std::size_t keep = std::min(order.size(), max_size - 2);
    for (std::size_t i = 0; i < keep; ++i) {
        vocab.index_.emplace(order[i], static_cast<TokenId>(vocab.tokens_.size()));
        vocab.tokens_.push_back(std::move(order[i]));
    }
    return vocab;
}

Vocabulary Vocabulary::load(std::istream& in) {
    Vocabulary vocab;
    vocab.tokens_.clear();
    vocab.index_.clear();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.rfind('\t');
        if (tab == std::string::npos) {
            throw ParseError("vocabulary line " + std::to_string(line_no) + ": missing tab");
        }
        const std::string token = line.substr(0, tab);
        std::size_t parsed = 0;
        unsigned long index = 0;
        try {
            index = std::stoul(line.substr(tab + 1), &parsed);
        } catch (const std::exception&) {
            parsed = 0;
        }
        if (parsed == 0 || parsed != line.size() - tab - 1 || index != vocab.tokens_.size()) {
            throw ParseError("vocabulary line " + std::to_string(line_no) +
                             ": expected dense index " + std::to_string(vocab.tokens_.size()));
        }
        vocab.tokens_.push_back(token);
        if (!vocab.index_.emplace(token, static_cast<TokenId>(index)).second) {
            throw ParseError("vocabulary line " + std::to_string(line_no) + ": duplicate token '" + token + "'");
        }
    }
    if (vocab.tokens_.size() < 2 || vocab.tokens_[0] != kPadToken || vocab.tokens_[1] != kOovToken) {
        throw ParseError("vocabulary must start with the reserved <PAD> and <OOV> slots");
    }
    vocab.max_size_ = vocab.tokens_.size();
    return vocab;
}

void Vocabulary::save(std::ostream& out) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        out << tokens_[i] << '\t' << i << '\n';
    }
}

TokenId Vocabulary::lookup(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    return it == index_.end() ? kOovId : it->second;
}

IdSequence encode(std::span<const std::string> tokens, const Vocabulary& vocab, std::size_t seq_len) {
    if (seq_len == 0) {
        throw InvalidArgument("sequence length must be >= 1");
    }
    IdSequence seq;
    seq.ids.assign(seq_len, kPadId);
    const std::size_t used = std::min(tokens.size(), seq_len);
    const auto tail = tokens.subspan(tokens.size() - used);
    std::transform(tail.begin(), tail.end(), seq.ids.begin() + static_cast<std::ptrdiff_t>(seq_len - used),
                   [&](const std::string& t) { return vocab.lookup(t); });
    return seq;
}

std::vector<IdSequence> encode_all(std::span<const TokenizedTweet> tweets, const Vocabulary& vocab,
                                   std::size_t seq_len) {
    std::vector<IdSequence> out;
    out.reserve(tweets.size());
    for (const auto& t : tweets) {
        auto seq = encode(t.tokens, vocab, seq_len);
        seq.label = t.label;
        out.push_back(std::move(seq));
    }
    return out;
}

}  // namespace sentimix
