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
#include <span>
#include <vector>

#include "sentimix/prob_matrix.hpp"
#include "sentimix/sentiment.hpp"

namespace sentimix {

/// Per-class-max ensemble: for sentence i and class j take the largest
/// probability any model gives, then pick the class with the largest such
/// value (lowest class index on ties). Throws InvalidArgument for an empty
/// model list or unequal row counts.
std::vector<Sentiment> combine(std::span<const ProbMatrix> matrices);

/// Plain argmax of one matrix, lowest class index on ties.
std::vector<Sentiment> argmax_labels(const ProbMatrix& probs);

/// counts[gold][predicted]
struct ConfusionMatrix {
    std::array<std::array<std::size_t, kNumClasses>, kNumClasses> counts{};

    std::size_t total() const noexcept;
};

/// Throws InvalidArgument on empty or unequal-length inputs.
ConfusionMatrix confusion(std::span<const Sentiment> gold, std::span<const Sentiment> predicted);

struct MetricsReport {
    std::array<double, kNumClasses> precision{};
    std::array<double, kNumClasses> recall{};
    std::array<double, kNumClasses> f1{};
    std::array<std::size_t, kNumClasses> support{};
    double macro_f1 = 0.0;
    double weighted_f1 = 0.0;  ///< headline F-score
    double accuracy = 0.0;
};

/// Precision, recall and F1 are 0 whenever their denominator is 0.
/// Throws InvalidArgument when the matrix is empty.
MetricsReport f1_report(const ConfusionMatrix& cm);

/// Aligned human-readable table.
void print_report(const MetricsReport& report, std::ostream& out);

/// `metric <TAB> class <TAB> value` lines ("all" for aggregate metrics).
void write_report_tsv(const MetricsReport& report, std::ostream& out);

}  // namespace sentimix
