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

#include "sentimix/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "sentimix/error.hpp"
#include "sentimix/unicode.hpp"

namespace sentimix {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string at_line(std::size_t line_no, const std::string& what) {
    return "line " + std::to_string(line_no) + ": " + what;
}

class IdRegistry {
public:
    void add(const std::string& id, std::size_t line_no) {
        if (id.empty()) {
            throw ParseError(at_line(line_no, "empty id"));
        }
        if (!seen_.insert(id).second) {
            throw ParseError(at_line(line_no, "duplicate id '" + id + "'"));
        }
    }

private:
    std::unordered_set<std::string> seen_;
};

Sentiment label_at(std::string_view s, std::size_t line_no) {
    try {
        return encode_label(s);
    } catch (const ParseError& e) {
        throw ParseError(at_line(line_no, e.what()));
    }
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view name) {
    if (name == "tsv") return CorpusFormat::Tsv;
    if (name == "conll") return CorpusFormat::Conll;
    throw InvalidArgument("unknown corpus format '" + std::string(name) + "'");
}

std::vector<RawTweet> parse_tsv(std::istream& in) {
    std::vector<RawTweet> corpus;
    IdRegistry ids;
    std::optional<std::size_t> columns;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = chomp(raw);
        if (line.empty()) {
            continue;
        }
        const auto fields = split_tabs(line);
        if (fields.size() != 2 && fields.size() != 3) {
            throw ParseError(at_line(line_no, "expected 2 or 3 tab-separated columns, got " +
                                                  std::to_string(fields.size())));
        }
        if (columns && *columns != fields.size()) {
            throw ParseError(at_line(line_no, "label column present on some lines only"));
        }
        columns = fields.size();

        RawTweet tweet{std::string(fields[0]), std::string(fields[1]), std::nullopt};
        ids.add(tweet.id, line_no);
        if (fields.size() == 3) {
            tweet.label = label_at(fields[2], line_no);
        }
        corpus.push_back(std::move(tweet));
    }
    return corpus;
}

std::vector<RawTweet> parse_conll(std::istream& in) {
    std::vector<RawTweet> corpus;
    IdRegistry ids;
    bool in_block = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = chomp(raw);
        if (is_blank(line)) {
            in_block = false;
            continue;
        }
        if (!in_block) {
            const auto header = unicode::split_whitespace(line);
            if (header.empty() || header[0] != "meta") {
                throw ParseError(at_line(line_no, "block header must start with 'meta'"));
            }
            if (header.size() < 2 || header.size() > 3) {
                throw ParseError(at_line(line_no, "header must be 'meta <uid> [<sentiment>]'"));
            }
            RawTweet tweet{header[1], {}, std::nullopt};
            ids.add(tweet.id, line_no);
            if (header.size() == 3) {
                tweet.label = label_at(header[2], line_no);
            }
            corpus.push_back(std::move(tweet));
            in_block = true;
            continue;
        }
        const auto token = split_tabs(line).front();
        if (token.empty()) {
            continue;
        }
        auto& text = corpus.back().text;
        if (!text.empty()) {
            text.push_back(' ');
        }
        text.append(token);
    }
    return corpus;
}

std::vector<RawTweet> read_corpus(const std::filesystem::path& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    try {
        return format == CorpusFormat::Tsv ? parse_tsv(in) : parse_conll(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_tsv(std::span<const RawTweet> corpus, std::ostream& out) {
    bool labeled = !corpus.empty();
    for (const auto& t : corpus) {
        labeled = labeled && t.label.has_value();
    }
    for (const auto& t : corpus) {
        out << t.id << '\t' << t.text;
        if (labeled) {
            out << '\t' << to_string(*t.label);
        }
        out << '\n';
    }
}

CorpusStats corpus_stats(std::span<const RawTweet> corpus) {
    if (corpus.empty()) {
        throw InvalidArgument("empty corpus");
    }
    CorpusStats stats;
    stats.sentence_count = corpus.size();
    std::size_t chars = 0;
    std::unordered_set<std::string> vocab;
    for (const auto& t : corpus) {
        chars += unicode::scalar_count(t.text);
        for (auto& word : unicode::split_whitespace(t.text)) {
            ++stats.word_count;
            vocab.insert(unicode::to_lower(word));
        }
    }
    stats.avg_char_length = static_cast<double>(chars) / static_cast<double>(corpus.size());
    stats.vocab_size = vocab.size();
    return stats;
}

void write_predictions(std::span<const std::string> ids, std::span<const Sentiment> labels,
                       std::ostream& out) {
    if (ids.size() != labels.size()) {
        throw InvalidArgument("write_predictions: " + std::to_string(ids.size()) + " ids but " +
                              std::to_string(labels.size()) + " labels");
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << ids[i] << '\t' << to_string(labels[i]) << '\n';
    }
}

std::vector<LabeledId> read_predictions(std::istream& in) {
    std::vector<LabeledId> out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'id<TAB>label'");
        }
        std::string id = line.substr(0, tab);
        if (id.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty id");
        }
        if (!seen.insert(id).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate id '" + id + "'");
        }
        Sentiment label;
        try {
            label = encode_label(std::string_view(line).substr(tab + 1));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back({std::move(id), label});
    }
    return out;
}

}  // namespace sentimix
