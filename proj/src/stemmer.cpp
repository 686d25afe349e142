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

#include "sentimix/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <unicode/utf8.h>

// Snowball English stemmer. Region positions (r1, r2) are byte offsets into
// the working word; a suffix "is in R1" when it starts at or after r1. A 'y'
// treated as a consonant is upper-cased to 'Y' for the duration of stemming.
namespace sentimix {
namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

// Longest entry of `suffixes` that ends `w`; returns its index or -1.
template <std::size_t N>
int longest_suffix(std::string_view w, const std::array<std::string_view, N>& suffixes) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (suffixes[i].size() > best_len && ends_with(w, suffixes[i])) {
            best = static_cast<int>(i);
            best_len = suffixes[i].size();
        }
    }
    return best;
}

class Stemmer {
public:
    explicit Stemmer(std::string_view word) : w_(word) {}

    std::string run() {
        if (const auto special = exception(); !special.empty()) {
            return std::string(special);
        }
        if (w_.size() < 3) {
            return w_;
        }
        prelude();
        mark_regions();
        step_1a();
        step_1b();
        step_1c();
        step_2();
        step_3();
        step_4();
        step_5();
        std::replace(w_.begin(), w_.end(), 'Y', 'y');
        return w_;
    }

private:
    std::string_view exception() const {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 15> table = {{
            {"andes", "andes"},   {"atlas", "atlas"}, {"bias", "bias"},     {"cosmos", "cosmos"},
            {"early", "earli"},   {"gently", "gentl"}, {"howe", "howe"},    {"idly", "idl"},
            {"news", "news"},     {"only", "onli"},   {"singly", "singl"},  {"skies", "sky"},
            {"skis", "ski"},      {"sky", "sky"},     {"ugly", "ugli"},
        }};
        for (const auto& [from, to] : table) {
            if (w_ == from) return to;
        }
        return {};
    }

    void prelude() {
        if (w_.front() == '\'') {
            w_.erase(0, 1);
        }
        if (!w_.empty() && w_.front() == 'y') {
            w_.front() = 'Y';
        }
        for (std::size_t i = 1; i < w_.size(); ++i) {
            if (w_[i] == 'y' && is_vowel(w_[i - 1])) {
                w_[i] = 'Y';
            }
        }
    }

    // Position just past the first non-vowel that follows a vowel, scanning
    // from `from`; size() when there is none.
    std::size_t region_after(std::size_t from) const {
        std::size_t i = from;
        while (i < w_.size() && !is_vowel(w_[i])) ++i;
        if (i >= w_.size()) return w_.size();
        while (i < w_.size() && is_vowel(w_[i])) ++i;
        if (i >= w_.size()) return w_.size();
        return i + 1;
    }

    void mark_regions() {
        static constexpr std::array<std::string_view, 9> prefixes = {
            "arsen", "commun", "emerg", "gener", "inter", "later", "organ", "past", "univers"};
        r1_ = w_.size();
        r2_ = w_.size();
        std::size_t p1 = 0;
        bool found = false;
        for (auto p : prefixes) {
            if (w_.starts_with(p)) {
                p1 = p.size();
                found = true;
                break;
            }
        }
        if (!found) {
            if (!has_region_after(0)) return;
            p1 = region_after(0);
        }
        r1_ = p1;
        if (has_region_after(p1)) {
            r2_ = region_after(p1);
        }
    }

    bool has_region_after(std::size_t from) const {
        std::size_t i = from;
        while (i < w_.size() && !is_vowel(w_[i])) ++i;
        if (i >= w_.size()) return false;
        while (i < w_.size() && is_vowel(w_[i])) ++i;
        return i < w_.size();
    }

    bool in_r1(std::size_t pos) const { return pos >= r1_; }
    bool in_r2(std::size_t pos) const { return pos >= r2_; }

    void replace_tail(std::size_t suffix_len, std::string_view with) {
        w_.replace(w_.size() - suffix_len, suffix_len, with);
    }

    bool has_vowel(std::size_t begin, std::size_t end) const {
        for (std::size_t i = begin; i < end; ++i) {
            if (is_vowel(w_[i])) return true;
        }
        return false;
    }

    // A short syllable ending at `end` (exclusive).
    bool short_syllable_at(std::size_t end) const {
        if (end >= 3) {
            const char c = w_[end - 1];
            const bool last_ok = !is_vowel(c) && c != 'w' && c != 'x' && c != 'Y';
            if (last_ok && is_vowel(w_[end - 2]) && !is_vowel(w_[end - 3])) return true;
        }
        if (end == 2 && !is_vowel(w_[1]) && is_vowel(w_[0])) return true;
        return std::string_view(w_).substr(0, end).ends_with("past");
    }

    void step_1a() {
        static constexpr std::array<std::string_view, 3> apostrophes = {"'", "'s'", "'s"};
        if (const int a = longest_suffix(w_, apostrophes); a >= 0) {
            w_.resize(w_.size() - apostrophes[static_cast<std::size_t>(a)].size());
        }

        static constexpr std::array<std::string_view, 6> suffixes = {"ied", "s",  "ies",
                                                                      "sses", "ss", "us"};
        const int s = longest_suffix(w_, suffixes);
        if (s < 0) return;
        const auto suffix = suffixes[static_cast<std::size_t>(s)];
        const std::size_t start = w_.size() - suffix.size();
        if (suffix == "sses") {
            replace_tail(4, "ss");
        } else if (suffix == "ied" || suffix == "ies") {
            replace_tail(3, start >= 2 ? "i" : "ie");
        } else if (suffix == "s") {
            // delete if a vowel occurs before the letter preceding the s
            if (start >= 1 && has_vowel(0, start - 1)) {
                w_.pop_back();
            }
        }
    }

    void step_1b() {
        static constexpr std::array<std::string_view, 6> suffixes = {"ed",   "eed",   "ing",
                                                                      "edly", "eedly", "ingly"};
        const int s = longest_suffix(w_, suffixes);
        if (s < 0) return;
        const auto suffix = suffixes[static_cast<std::size_t>(s)];
        const std::size_t start = w_.size() - suffix.size();
        const std::string_view stem_part = std::string_view(w_).substr(0, start);

        if (suffix == "eed" || suffix == "eedly") {
            if (in_r1(start) && stem_part != "succ" && stem_part != "proc" && stem_part != "exc") {
                replace_tail(suffix.size(), "ee");
            }
            return;
        }

        if (suffix == "ing") {
            if (stem_part.size() == 2 && stem_part[1] == 'y' && !is_vowel(stem_part[0])) {
                // dying -> die, lying -> lie
                w_.replace(1, std::string::npos, "ie");
                return;
            }
            static constexpr std::array<std::string_view, 6> keep = {"even", "cann", "inn",
                                                                      "earr", "herr", "out"};
            if (std::find(keep.begin(), keep.end(), stem_part) != keep.end()) {
                return;
            }
        }

        if (!has_vowel(0, start)) return;
        w_.resize(start);

        if (ends_with(w_, "at") || ends_with(w_, "bl") || ends_with(w_, "iz")) {
            w_.push_back('e');
            return;
        }
        static constexpr std::array<std::string_view, 9> doubles = {"bb", "dd", "ff", "gg", "mm",
                                                                     "nn", "pp", "rr", "tt"};
        if (longest_suffix(w_, doubles) >= 0) {
            const bool aeo_start = w_.size() == 3 && (w_[0] == 'a' || w_[0] == 'e' || w_[0] == 'o');
            if (!aeo_start) {
                w_.pop_back();
            }
            return;
        }
        if (r1_ == w_.size() && short_syllable_at(w_.size())) {
            w_.push_back('e');
        }
    }

    void step_1c() {
        if (w_.size() < 3) return;
        const char last = w_.back();
        if ((last == 'y' || last == 'Y') && !is_vowel(w_[w_.size() - 2])) {
            w_.back() = 'i';
        }
    }

    void step_2() {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 25> rules = {{
            {"anci", "ance"},    {"enci", "ence"},    {"ogi", "og"},       {"li", ""},
            {"bli", "ble"},      {"abli", "able"},    {"alli", "al"},      {"fulli", "ful"},
            {"lessli", "less"},  {"ousli", "ous"},    {"entli", "ent"},    {"aliti", "al"},
            {"biliti", "ble"},   {"iviti", "ive"},    {"tional", "tion"},  {"ational", "ate"},
            {"alism", "al"},     {"ation", "ate"},    {"ization", "ize"},  {"izer", "ize"},
            {"ator", "ate"},     {"iveness", "ive"},  {"fulness", "ful"},  {"ousness", "ous"},
            {"ogist", "og"},
        }};
        const auto* rule = longest_rule(rules);
        if (rule == nullptr) return;
        const auto [suffix, replacement] = *rule;
        const std::size_t start = w_.size() - suffix.size();
        if (!in_r1(start)) return;
        if (suffix == "ogi") {
            if (start >= 1 && w_[start - 1] == 'l') replace_tail(3, "og");
        } else if (suffix == "li") {
            static constexpr std::string_view valid_li = "cdeghkmnrt";
            if (start >= 1 && valid_li.find(w_[start - 1]) != std::string_view::npos) {
                w_.resize(start);
            }
        } else {
            replace_tail(suffix.size(), replacement);
        }
    }

    void step_3() {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 9> rules = {{
            {"icate", "ic"},   {"ative", ""},       {"alize", "al"},
            {"iciti", "ic"},   {"ical", "ic"},      {"tional", "tion"},
            {"ational", "ate"}, {"ful", ""},        {"ness", ""},
        }};
        const auto* rule = longest_rule(rules);
        if (rule == nullptr) return;
        const auto [suffix, replacement] = *rule;
        const std::size_t start = w_.size() - suffix.size();
        if (!in_r1(start)) return;
        if (suffix == "ative" && !in_r2(start)) return;
        replace_tail(suffix.size(), replacement);
    }

    void step_4() {
        static constexpr std::array<std::string_view, 18> suffixes = {
            "ic",  "ance", "ence", "able", "ible", "ate", "ive", "ize",  "iti",
            "al",  "ism",  "ion",  "er",   "ous",  "ant", "ent", "ment", "ement"};
        const int s = longest_suffix(w_, suffixes);
        if (s < 0) return;
        const auto suffix = suffixes[static_cast<std::size_t>(s)];
        const std::size_t start = w_.size() - suffix.size();
        if (!in_r2(start)) return;
        if (suffix == "ion") {
            if (start >= 1 && (w_[start - 1] == 's' || w_[start - 1] == 't')) w_.resize(start);
        } else {
            w_.resize(start);
        }
    }

    void step_5() {
        if (w_.empty()) return;
        const std::size_t start = w_.size() - 1;
        if (w_.back() == 'e') {
            if (in_r2(start) || (in_r1(start) && !short_syllable_at(start))) {
                w_.pop_back();
            }
        } else if (w_.back() == 'l') {
            if (in_r2(start) && start >= 1 && w_[start - 1] == 'l') {
                w_.pop_back();
            }
        }
    }

    template <std::size_t N>
    const std::pair<std::string_view, std::string_view>* longest_rule(
        const std::array<std::pair<std::string_view, std::string_view>, N>& rules) const {
        const std::pair<std::string_view, std::string_view>* best = nullptr;
        for (const auto& r : rules) {
            if (ends_with(w_, r.first) && (best == nullptr || r.first.size() > best->first.size())) {
                best = &r;
            }
        }
        return best;
    }

    std::string w_;
    std::size_t r1_ = 0;
    std::size_t r2_ = 0;
};

// Every non-ASCII code point stands in as one placeholder byte while the
// rules run; no rule matches or removes it, so it is restored in order.
constexpr char kPlaceholder = '\x01';

struct Folded {
    std::string ascii;
    std::vector<std::string_view> wide;
};

std::optional<Folded> fold(std::string_view word) {
    Folded f;
    const auto* bytes = reinterpret_cast<const uint8_t*>(word.data());
    const auto n = static_cast<int32_t>(word.size());
    for (int32_t i = 0; i < n;) {
        const int32_t start = i;
        UChar32 c;
        U8_NEXT(bytes, i, n, c);
        if (c < 0) return std::nullopt;
        if (c < 0x80) {
            const char ch = static_cast<char>(c);
            if (!((ch >= 'a' && ch <= 'z') || ch == '\'')) return std::nullopt;
            f.ascii.push_back(ch);
        } else {
            f.ascii.push_back(kPlaceholder);
            f.wide.push_back(word.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(i - start)));
        }
    }
    return f;
}

}  // namespace

std::string stem(std::string_view word) {
    auto folded = fold(word);
    if (!folded || folded->ascii.size() <= 2) {
        return std::string(word);
    }
    const std::string out = Stemmer(folded->ascii).run();
    if (folded->wide.empty()) return out;
    std::string restored;
    std::size_t next = 0;
    for (char c : out) {
        if (c == kPlaceholder) {
            restored.append(folded->wide[next++]);
        } else {
            restored.push_back(c);
        }
    }
    return restored;
}

}  // namespace sentimix
