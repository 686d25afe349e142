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
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sentimix/sentiment.hpp"

namespace sentimix {

using ClassProbs = std::array<double, kNumClasses>;

/// Per-sentence class probabilities of one model: row i holds the
/// probability of each class (negative, neutral, positive) for sentence i.
struct ProbMatrix {
    std::vector<ClassProbs> rows;
    std::string model_tag;

    std::size_t size() const noexcept { return rows.size(); }
};

/// `id <TAB> p0 <TAB> p1 <TAB> p2` per row with 17 significant digits, so
/// reading the file back reproduces every value exactly.
void write_prob_file(const std::vector<std::string>& ids, const ProbMatrix& probs, std::ostream& out);

struct ProbFile {
    std::vector<std::string> ids;
    ProbMatrix probs;
};

/// Throws ParseError on malformed rows.
ProbFile read_prob_file(std::istream& in, std::string tag = {});

}  // namespace sentimix
