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

#include "sentimix/architectures.hpp"

#include <algorithm>

#include "sentimix/error.hpp"
#include "sentimix/nn/lstm.hpp"

namespace sentimix {

using nn::Activation;
using nn::Tensor;

std::string_view arch_name(ArchId arch) noexcept {
    switch (arch) {
        case ArchId::Lstm:
            return "lstm";
        case ArchId::LstmConv:
            return "lstm-conv";
        case ArchId::BiLstm:
            return "bilstm";
        case ArchId::Cnn:
            return "cnn";
    }
    return "lstm";
}

ArchId parse_arch(std::string_view name) {
    for (auto arch : kAllArchs) {
        if (arch_name(arch) == name) return arch;
    }
    throw InvalidArgument("unknown architecture '" + std::string(name) +
                          "' (expected lstm, lstm-conv, bilstm or cnn)");
}

void ModelConfig::validate(ArchId arch) const {
    const std::pair<const char*, std::size_t> dims[] = {
        {"vocab_size", vocab_size},     {"seq_len", seq_len},           {"embedding_dim", embedding_dim},
        {"lstm_units", lstm_units},     {"conv_filters", conv_filters}, {"dense_hidden", dense_hidden},
    };
    for (const auto& [name, value] : dims) {
        if (value == 0) {
            throw InvalidArgument(std::string("model config: ") + name + " must be >= 1");
        }
    }
    if (vocab_size < 3) {
        throw InvalidArgument("model config: vocab_size must be >= 3");
    }
    std::size_t widest = 1;
    if (arch == ArchId::LstmConv || arch == ArchId::BiLstm) widest = kConvKernel;
    if (arch == ArchId::Cnn) widest = kCnnKernels.back();
    if (seq_len < widest) {
        throw InvalidArgument("model config: seq_len " + std::to_string(seq_len) + " shorter than kernel size " +
                              std::to_string(widest) + " of " + std::string(arch_name(arch)));
    }
}

namespace {

constexpr std::size_t kClasses = ModelConfig::kNumClasses;

// Shared tail: logits -> probs, loss and d loss / d logits.
struct Head {
    double loss;
    Tensor grad_logits;
};

Head head(const Tensor& logits, std::size_t gold, Tensor* probs) {
    auto sx = nn::softmax_xent(logits, gold);
    Head h{sx.loss, nn::softmax_xent_grad(sx.probs, gold)};
    if (probs) *probs = std::move(sx.probs);
    return h;
}

// embedding -> LSTM (final state) -> dense(relu) -> dense(3)
class LstmNet final : public Network {
public:
    explicit LstmNet(const ModelConfig& c)
        : embedding_(c.vocab_size, c.embedding_dim),
          lstm_(c.embedding_dim, c.lstm_units),
          hidden_(c.lstm_units, c.dense_hidden, Activation::Relu),
          out_(c.dense_hidden, kClasses, Activation::Linear) {}

    void init(nn::Rng& rng) override {
        embedding_.init(rng);
        lstm_.init(rng);
        hidden_.init(rng);
        out_.init(rng);
    }

    void collect(std::vector<nn::ParamRef>& out) override {
        embedding_.collect("embedding", out);
        lstm_.collect("lstm", out);
        hidden_.collect("dense_hidden", out);
        out_.collect("dense_out", out);
    }

    std::unique_ptr<Network> clone() const override { return std::make_unique<LstmNet>(*this); }

    Tensor logits(std::span<const std::uint32_t> ids) const override {
        return out_.forward(hidden_.forward(lstm_.forward(embedding_.forward(ids), false)));
    }

    double accumulate_gradients(std::span<const std::uint32_t> ids, std::size_t gold, Tensor* probs) override {
        nn::LstmCache lc;
        nn::DenseCache hc;
        nn::DenseCache oc;
        const Tensor emb = embedding_.forward(ids);
        const Tensor z = out_.forward(hidden_.forward(lstm_.forward(emb, false, &lc), &hc), &oc);
        const auto h = head(z, gold, probs);
        const Tensor g = lstm_.backward(lc, hidden_.backward(hc, out_.backward(oc, h.grad_logits)));
        embedding_.backward(ids, g);
        return h.loss;
    }

private:
    nn::Embedding embedding_;
    nn::Lstm lstm_;
    nn::Dense hidden_;
    nn::Dense out_;
};

// embedding -> conv1d(k=3) -> LSTM (sequences) -> global max pool -> dense(3)
class LstmConvNet final : public Network {
public:
    explicit LstmConvNet(const ModelConfig& c)
        : embedding_(c.vocab_size, c.embedding_dim),
          conv_(c.embedding_dim, c.conv_filters, ModelConfig::kConvKernel),
          lstm_(c.conv_filters, c.lstm_units),
          out_(c.lstm_units, kClasses, Activation::Linear) {}

    void init(nn::Rng& rng) override {
        embedding_.init(rng);
        conv_.init(rng);
        lstm_.init(rng);
        out_.init(rng);
    }

    void collect(std::vector<nn::ParamRef>& out) override {
        embedding_.collect("embedding", out);
        conv_.collect("conv", out);
        lstm_.collect("lstm", out);
        out_.collect("dense_out", out);
    }

    std::unique_ptr<Network> clone() const override { return std::make_unique<LstmConvNet>(*this); }

    Tensor logits(std::span<const std::uint32_t> ids) const override {
        const Tensor seq = lstm_.forward(conv_.forward(embedding_.forward(ids)), true);
        return out_.forward(nn::global_max_pool(seq));
    }

    double accumulate_gradients(std::span<const std::uint32_t> ids, std::size_t gold, Tensor* probs) override {
        nn::ConvCache cc;
        nn::LstmCache lc;
        nn::MaxPoolCache pc;
        nn::DenseCache oc;
        const Tensor seq = lstm_.forward(conv_.forward(embedding_.forward(ids), &cc), true, &lc);
        const Tensor z = out_.forward(nn::global_max_pool(seq, &pc), &oc);
        const auto h = head(z, gold, probs);
        const Tensor g_seq = nn::global_max_pool_backward(pc, out_.backward(oc, h.grad_logits));
        embedding_.backward(ids, conv_.backward(cc, lstm_.backward(lc, g_seq)));
        return h.loss;
    }

private:
    nn::Embedding embedding_;
    nn::Conv1d conv_;
    nn::Lstm lstm_;
    nn::Dense out_;
};

// embedding -> BiLSTM -> conv1d(k=3) -> [avg pool ; max pool] -> dense(3)
class BiLstmNet final : public Network {
public:
    explicit BiLstmNet(const ModelConfig& c)
        : embedding_(c.vocab_size, c.embedding_dim),
          bilstm_(c.embedding_dim, c.lstm_units),
          conv_(2 * c.lstm_units, c.conv_filters, ModelConfig::kConvKernel),
          out_(2 * c.conv_filters, kClasses, Activation::Linear) {}

    void init(nn::Rng& rng) override {
        embedding_.init(rng);
        bilstm_.init(rng);
        conv_.init(rng);
        out_.init(rng);
    }

    void collect(std::vector<nn::ParamRef>& out) override {
        embedding_.collect("embedding", out);
        bilstm_.collect("bilstm", out);
        conv_.collect("conv", out);
        out_.collect("dense_out", out);
    }

    std::unique_ptr<Network> clone() const override { return std::make_unique<BiLstmNet>(*this); }

    Tensor logits(std::span<const std::uint32_t> ids) const override {
        const Tensor feat = conv_.forward(bilstm_.forward(embedding_.forward(ids)));
        const Tensor pooled[] = {nn::global_avg_pool(feat), nn::global_max_pool(feat)};
        return out_.forward(nn::concat(pooled, 0));
    }

    double accumulate_gradients(std::span<const std::uint32_t> ids, std::size_t gold, Tensor* probs) override {
        nn::BiLstmCache bc;
        nn::ConvCache cc;
        nn::MaxPoolCache pc;
        nn::DenseCache oc;
        const Tensor feat = conv_.forward(bilstm_.forward(embedding_.forward(ids), &bc), &cc);
        const Tensor pooled[] = {nn::global_avg_pool(feat), nn::global_max_pool(feat, &pc)};
        const Tensor z = out_.forward(nn::concat(pooled, 0), &oc);
        const auto h = head(z, gold, probs);

        const std::size_t f = conv_.filters();
        const std::size_t extents[] = {f, f};
        const auto parts = nn::split(out_.backward(oc, h.grad_logits), extents, 0);
        Tensor g_feat = nn::global_avg_pool_backward(feat.dim(0), parts[0]);
        const Tensor g_max = nn::global_max_pool_backward(pc, parts[1]);
        for (std::size_t i = 0; i < g_feat.size(); ++i) g_feat[i] += g_max[i];
        embedding_.backward(ids, bilstm_.backward(bc, conv_.backward(cc, g_feat)));
        return h.loss;
    }

private:
    nn::Embedding embedding_;
    nn::BiLstm bilstm_;
    nn::Conv1d conv_;
    nn::Dense out_;
};

// embedding -> conv1d k=3,4,5 in parallel -> per-branch global max pool
//           -> concat -> dense(relu) -> dense(3)
class CnnNet final : public Network {
public:
    explicit CnnNet(const ModelConfig& c)
        : embedding_(c.vocab_size, c.embedding_dim),
          hidden_(ModelConfig::kCnnKernels.size() * c.conv_filters, c.dense_hidden, Activation::Relu),
          out_(c.dense_hidden, kClasses, Activation::Linear) {
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            branches_[i] = nn::Conv1d(c.embedding_dim, c.conv_filters, ModelConfig::kCnnKernels[i]);
        }
    }

    void init(nn::Rng& rng) override {
        embedding_.init(rng);
        for (auto& b : branches_) b.init(rng);
        hidden_.init(rng);
        out_.init(rng);
    }

    void collect(std::vector<nn::ParamRef>& out) override {
        embedding_.collect("embedding", out);
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            branches_[i].collect("conv_k" + std::to_string(ModelConfig::kCnnKernels[i]), out);
        }
        hidden_.collect("dense_hidden", out);
        out_.collect("dense_out", out);
    }

    std::unique_ptr<Network> clone() const override { return std::make_unique<CnnNet>(*this); }

    Tensor logits(std::span<const std::uint32_t> ids) const override {
        const Tensor emb = embedding_.forward(ids);
        std::array<Tensor, 3> pooled;
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            pooled[i] = nn::global_max_pool(branches_[i].forward(emb));
        }
        return out_.forward(hidden_.forward(nn::concat(pooled, 0)));
    }

    double accumulate_gradients(std::span<const std::uint32_t> ids, std::size_t gold, Tensor* probs) override {
        const Tensor emb = embedding_.forward(ids);
        std::array<nn::ConvCache, 3> cc;
        std::array<nn::MaxPoolCache, 3> pc;
        std::array<Tensor, 3> pooled;
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            pooled[i] = nn::global_max_pool(branches_[i].forward(emb, &cc[i]), &pc[i]);
        }
        nn::DenseCache hc;
        nn::DenseCache oc;
        const Tensor z = out_.forward(hidden_.forward(nn::concat(pooled, 0), &hc), &oc);
        const auto h = head(z, gold, probs);

        const std::size_t f = branches_[0].filters();
        const std::size_t extents[] = {f, f, f};
        const auto parts = nn::split(hidden_.backward(hc, out_.backward(oc, h.grad_logits)), extents, 0);
        Tensor g_emb(emb.shape());
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            const Tensor g = branches_[i].backward(cc[i], nn::global_max_pool_backward(pc[i], parts[i]));
            for (std::size_t j = 0; j < g.size(); ++j) g_emb[j] += g[j];
        }
        embedding_.backward(ids, g_emb);
        return h.loss;
    }

private:
    nn::Embedding embedding_;
    std::array<nn::Conv1d, 3> branches_;
    nn::Dense hidden_;
    nn::Dense out_;
};

std::unique_ptr<Network> make_network(ArchId arch, const ModelConfig& c) {
    switch (arch) {
        case ArchId::Lstm:
            return std::make_unique<LstmNet>(c);
        case ArchId::LstmConv:
            return std::make_unique<LstmConvNet>(c);
        case ArchId::BiLstm:
            return std::make_unique<BiLstmNet>(c);
        case ArchId::Cnn:
            return std::make_unique<CnnNet>(c);
    }
    throw InvalidArgument("unknown architecture id");
}

}  // namespace

Model::Model(ArchId arch, ModelConfig config) : arch_(arch), config_(config) {
    config_.validate(arch_);
    net_ = make_network(arch_, config_);
}

Model::Model(const Model& other)
    : arch_(other.arch_), config_(other.config_), hashes_(other.hashes_), net_(other.net_->clone()) {}

Model& Model::operator=(const Model& other) {
    if (this != &other) {
        Model copy(other);
        *this = std::move(copy);
    }
    return *this;
}

std::vector<nn::ParamRef> Model::params() {
    std::vector<nn::ParamRef> out;
    net_->collect(out);
    return out;
}

std::vector<nn::ParamRef> Model::params() const {
    std::vector<nn::ParamRef> out;
    net_->collect(out);
    return out;
}

Model build_model(ArchId arch, const ModelConfig& config, std::uint64_t seed) {
    Model model(arch, config);
    nn::Rng rng(seed);
    model.network().init(rng);
    return model;
}

ClassProbs predict_one(const Model& model, std::span<const std::uint32_t> ids) {
    const Tensor probs = nn::softmax(model.network().logits(ids));
    ClassProbs row{};
    std::copy_n(probs.raw(), row.size(), row.begin());
    return row;
}

ProbMatrix forward(const Model& model, std::span<const IdSequence> batch) {
    ProbMatrix out;
    out.model_tag = std::string(arch_name(model.arch()));
    out.rows.reserve(batch.size());
    for (const auto& seq : batch) {
        out.rows.push_back(predict_one(model, seq.ids));
    }
    return out;
}

}  // namespace sentimix
