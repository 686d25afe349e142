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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sentimix/architectures.hpp"
#include "sentimix/prob_matrix.hpp"
#include "sentimix/vectorizer.hpp"

namespace sentimix {

struct TrainHyper {
    std::size_t epochs = 200;  ///< 5 for ensemble members
    std::size_t batch_size = 128;
    double learning_rate = 0.01;
    std::uint64_t seed = 0;
    bool shuffle = true;

    /// Throws InvalidArgument unless epochs >= 1, batch_size >= 1 and
    /// learning_rate >= 0.
    void validate() const;
};

inline constexpr std::size_t kEnsembleMemberEpochs = 5;

struct EpochRecord {
    std::size_t epoch = 0;  ///< 1-based
    double mean_loss = 0.0;
    double train_accuracy = 0.0;
    std::optional<double> val_weighted_f1;
};

struct TrainHistory {
    std::vector<EpochRecord> epochs;

    /// `epoch <TAB> loss <TAB> accuracy <TAB> val_f1` with a header row.
    void write_tsv(std::ostream& out) const;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Mini-batch Adam training on mean-batch gradients. Each epoch visits the
/// training set in a seeded shuffled order (final partial batch included)
/// and then scores the validation set with weighted F1. Results are a
/// function of (model, data, hyper) only.
///
/// Throws InvalidArgument for unlabeled examples and NumericError, naming
/// the epoch and batch, when the loss stops being finite.
TrainHistory train(Model& model, std::span<const IdSequence> train_set, std::span<const IdSequence> val_set,
                   const TrainHyper& hyper, const EpochCallback& on_epoch = {});

/// Softmax rows for every sequence, in order.
ProbMatrix predict_proba(const Model& model, std::span<const IdSequence> dataset);

/// Stream derived from the master seed that drives example shuffling.
std::uint64_t shuffle_seed(std::uint64_t master_seed) noexcept;

}  // namespace sentimix
