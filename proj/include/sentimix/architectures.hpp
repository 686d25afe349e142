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
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "sentimix/nn/layers.hpp"
#include "sentimix/prob_matrix.hpp"
#include "sentimix/vectorizer.hpp"

namespace sentimix {

/// The four ensemble members.
enum class ArchId : std::uint8_t { Lstm = 0, LstmConv = 1, BiLstm = 2, Cnn = 3 };

inline constexpr std::array<ArchId, 4> kAllArchs = {ArchId::Lstm, ArchId::LstmConv, ArchId::BiLstm,
                                                    ArchId::Cnn};

/// "lstm", "lstm-conv", "bilstm", "cnn"
std::string_view arch_name(ArchId arch) noexcept;
/// Throws InvalidArgument for any other name.
ArchId parse_arch(std::string_view name);

struct ModelConfig {
    std::size_t vocab_size = kDefaultVocabSize;
    std::size_t seq_len = kDefaultSeqLen;
    std::size_t embedding_dim = 128;
    std::size_t lstm_units = 64;
    std::size_t conv_filters = 64;
    std::size_t dense_hidden = 32;

    static constexpr std::size_t kNumClasses = 3;
    static constexpr std::size_t kConvKernel = 3;                    ///< lstm-conv, bilstm
    static constexpr std::array<std::size_t, 3> kCnnKernels = {3, 4, 5};

    /// Throws InvalidArgument when a dimension is zero or seq_len is too
    /// short for the convolutions of `arch`.
    void validate(ArchId arch) const;

    friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Hashes of the train-time artifacts a model was fitted against.
struct ArtifactHashes {
    std::uint32_t vocabulary = 0;
    std::uint32_t english_stoplist = 0;
    std::uint32_t hindi_stoplist = 0;

    friend bool operator==(const ArtifactHashes&, const ArtifactHashes&) = default;
};

/// Layer stack of one architecture.
class Network {
public:
    virtual ~Network() = default;

    virtual void init(nn::Rng& rng) = 0;
    virtual void collect(std::vector<nn::ParamRef>& out) = 0;
    virtual std::unique_ptr<Network> clone() const = 0;

    /// Pre-softmax scores for one sequence.
    virtual nn::Tensor logits(std::span<const std::uint32_t> ids) const = 0;

    /// Forward + backward for one example. Adds d(loss)/d(param) to the
    /// gradient accumulators and returns the loss; `probs` receives the
    /// softmax output when non-null.
    virtual double accumulate_gradients(std::span<const std::uint32_t> ids, std::size_t gold,
                                        nn::Tensor* probs = nullptr) = 0;
};

class Model {
public:
    Model(ArchId arch, ModelConfig config);

    Model(const Model& other);
    Model& operator=(const Model& other);
    Model(Model&&) noexcept = default;
    Model& operator=(Model&&) noexcept = default;

    ArchId arch() const noexcept { return arch_; }
    const ModelConfig& config() const noexcept { return config_; }
    ArtifactHashes& hashes() noexcept { return hashes_; }
    const ArtifactHashes& hashes() const noexcept { return hashes_; }

    /// Trainable tensors in a fixed order (stable across calls).
    std::vector<nn::ParamRef> params();
    std::vector<nn::ParamRef> params() const;

    Network& network() { return *net_; }
    const Network& network() const { return *net_; }

private:
    ArchId arch_;
    ModelConfig config_;
    ArtifactHashes hashes_;
    std::unique_ptr<Network> net_;
};

/// Fresh model with weights drawn from `seed`. Same inputs give bitwise
/// identical parameters.
Model build_model(ArchId arch, const ModelConfig& config, std::uint64_t seed);

/// One probability row per sequence. Throws InvalidArgument when an id is
/// outside the vocabulary.
ProbMatrix forward(const Model& model, std::span<const IdSequence> batch);

/// Softmax output for one sequence.
ClassProbs predict_one(const Model& model, std::span<const std::uint32_t> ids);

}  // namespace sentimix
