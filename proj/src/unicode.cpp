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

#include "sentimix/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace sentimix::unicode {
namespace {

constexpr UChar32 kReplacement = 0xFFFD;

// Calls fn(code_point, byte_offset, byte_length) for each decoded code point.
template <typename Fn>
void for_each_cp(std::string_view text, Fn&& fn) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    const auto length = static_cast<int32_t>(text.size());
    int32_t i = 0;
    while (i < length) {
        const int32_t start = i;
        UChar32 cp = 0;
        U8_NEXT(bytes, i, length, cp);
        if (cp < 0) {
            cp = kReplacement;
        }
        fn(cp, static_cast<std::size_t>(start), static_cast<std::size_t>(i - start));
    }
}

void append_cp(std::string& out, UChar32 cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    U8_APPEND_UNSAFE(buf, n, cp);
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

}  // namespace

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0; }

bool is_alnum(char32_t cp) {
    const auto c = static_cast<UChar32>(cp);
    return u_isalpha(c) != 0 || u_isdigit(c) != 0;
}

std::size_t scalar_count(std::string_view text) {
    std::size_t n = 0;
    for_each_cp(text, [&](UChar32, std::size_t, std::size_t) { ++n; });
    return n;
}

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> pieces;
    std::string current;
    for_each_cp(text, [&](UChar32 cp, std::size_t off, std::size_t len) {
        if (is_space(static_cast<char32_t>(cp))) {
            if (!current.empty()) {
                pieces.push_back(std::move(current));
                current.clear();
            }
        } else if (cp == kReplacement) {
            append_cp(current, cp);
        } else {
            current.append(text.substr(off, len));
        }
    });
    if (!current.empty()) {
        pieces.push_back(std::move(current));
    }
    return pieces;
}

std::string to_lower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for_each_cp(text, [&](UChar32 cp, std::size_t off, std::size_t len) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + ('a' - 'A') : cp));
        } else if (cp == kReplacement) {
            append_cp(out, cp);
        } else {
            const UChar32 lowered = u_tolower(cp);
            if (lowered == cp) {
                out.append(text.substr(off, len));
            } else {
                append_cp(out, lowered);
            }
        }
    });
    return out;
}

std::string keep_alnum_space(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for_each_cp(text, [&](UChar32 cp, std::size_t off, std::size_t len) {
        const auto c = static_cast<char32_t>(cp);
        if (cp != kReplacement && (is_alnum(c) || is_space(c))) {
            out.append(text.substr(off, len));
        } else {
            out.push_back(' ');
        }
    });
    return out;
}

bool is_alnum_word(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    bool ok = true;
    for_each_cp(text, [&](UChar32 cp, std::size_t, std::size_t) {
        ok = ok && cp != kReplacement && is_alnum(static_cast<char32_t>(cp));
    });
    return ok;
}

}  // namespace sentimix::unicode
