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
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers over ICU's character properties. Invalid byte
// sequences decode to U+FFFD, which is neither a letter, digit nor space.
namespace sentimix::unicode {

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t scalar_count(std::string_view text);

/// Split on runs of Unicode whitespace, dropping empty pieces.
std::vector<std::string> split_whitespace(std::string_view text);

/// Simple (per code point) lowercase mapping.
std::string to_lower(std::string_view text);

/// Replace every code point that is not a letter, decimal digit or
/// whitespace with a single ASCII space.
std::string keep_alnum_space(std::string_view text);

bool is_space(char32_t cp);
bool is_alnum(char32_t cp);

/// True when every code point is a letter or a digit (and text is non-empty).
bool is_alnum_word(std::string_view text);

}  // namespace sentimix::unicode
