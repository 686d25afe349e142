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

#include "sentimix/sentiment.hpp"

#include <algorithm>
#include <cctype>

#include "sentimix/error.hpp"

namespace sentimix {

Sentiment from_code(int c) {
    if (c < 0 || c > 2) {
        throw InvalidArgument("sentiment code out of range: " + std::to_string(c));
    }
    return static_cast<Sentiment>(c);
}

std::string_view to_string(Sentiment s) noexcept {
    switch (s) {
        case Sentiment::Negative:
            return "negative";
        case Sentiment::Neutral:
            return "neutral";
        case Sentiment::Positive:
            return "positive";
    }
    return "negative";
}

Sentiment encode_label(std::string_view s) {
    std::string lowered(s);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (Sentiment candidate : kAllSentiments) {
        if (lowered == to_string(candidate)) {
            return candidate;
        }
    }
    throw ParseError("unknown sentiment label '" + std::string(s) + "'");
}

}  // namespace sentimix
