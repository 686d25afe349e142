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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace sentimix {

/// Three-way sentiment label. The integer codes are part of the data
/// contract: negative = 0, neutral = 1, positive = 2.
enum class Sentiment : std::uint8_t { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::size_t kNumClasses = 3;

inline constexpr std::array<Sentiment, kNumClasses> kAllSentiments = {
    Sentiment::Negative, Sentiment::Neutral, Sentiment::Positive};

constexpr int code(Sentiment s) noexcept { return static_cast<int>(s); }

/// Throws InvalidArgument unless 0 <= c <= 2.
Sentiment from_code(int c);

/// Lowercase canonical name: "negative", "neutral" or "positive".
std::string_view to_string(Sentiment s) noexcept;

/// Case-insensitive label lookup. Throws ParseError naming the offending
/// string when it is not one of the three labels.
Sentiment encode_label(std::string_view s);

}  // namespace sentimix
