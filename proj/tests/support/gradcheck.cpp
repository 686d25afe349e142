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

#include "support/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "sentimix/architectures.hpp"
#include "sentimix/nn/layers.hpp"
#include "sentimix/nn/lstm.hpp"
#include "sentimix/nn/optimizer.hpp"
#include "sentimix/nn/random.hpp"

namespace sentimix::testing {

using nn::Rng;
using nn::Tensor;

double rel_error(double analytic, double numeric) {
    const double scale = std::max({std::abs(analytic), std::abs(numeric), kRelErrorFloor});
    return std::abs(analytic - numeric) / scale;
}

GradResult check_gradients(const std::function<double()>& loss, const std::function<void()>& analytic,
                           const std::vector<GradBlock>& blocks, double h) {
    analytic();
    std::vector<Tensor> expected;
    expected.reserve(blocks.size());
    for (const auto& b : blocks) expected.push_back(*b.grad);

    GradResult result;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        Tensor& value = *blocks[bi].value;
        for (std::size_t i = 0; i < value.size(); ++i) {
            const double saved = value[i];
            value[i] = saved + h;
            const double up = loss();
            value[i] = saved - h;
            const double down = loss();
            value[i] = saved;
            const double numeric = (up - down) / (2.0 * h);
            const double err = rel_error(expected[bi][i], numeric);
            ++result.checked;
            if (result.worst.empty() || err > result.max_rel_error) {
                result.max_rel_error = err;
                result.worst = blocks[bi].name + "[" + std::to_string(i) + "]";
            }
        }
    }
    return result;
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

Tensor random_tensor(std::vector<std::size_t> shape, Rng& rng, double scale = 1.0) {
    Tensor t(std::move(shape));
    nn::uniform_fill(t, -scale, scale, rng);
    return t;
}

// sum(w * y): a generic scalar head whose gradient w.r.t. y is w.
double project(const Tensor& y, const Tensor& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * w[i];
    return s;
}

template <typename Layer>
std::vector<GradBlock> param_blocks(Layer& layer) {
    std::vector<nn::ParamRef> refs;
    layer.collect("layer", refs);
    std::vector<GradBlock> blocks;
    for (const auto& r : refs) blocks.push_back({r.name, r.value, r.grad});
    return blocks;
}

template <typename Layer>
void zero(Layer& layer) {
    std::vector<nn::ParamRef> refs;
    layer.collect("layer", refs);
    nn::zero_grads(refs);
}

GradResult embedding_case(Rng& rng) {
    const auto vocab = pick(rng, 3, 8);
    nn::Embedding emb(vocab, pick(rng, 2, 5));
    emb.init(rng);
    nn::uniform_fill(emb.weight, -1.0, 1.0, rng);
    std::vector<std::uint32_t> ids(pick(rng, 2, 7));
    for (auto& id : ids) id = static_cast<std::uint32_t>(rng.below(vocab));
    ids.push_back(ids.front());  // duplicates must accumulate
    const Tensor w = random_tensor({ids.size(), emb.weight.dim(1)}, rng);
    return check_gradients([&] { return project(emb.forward(ids), w); },
                           [&] {
                               zero(emb);
                               emb.backward(ids, w);
                           },
                           param_blocks(emb));
}

GradResult dense_case(Rng& rng, nn::Activation act) {
    nn::Dense dense(pick(rng, 2, 7), pick(rng, 2, 6), act);
    dense.init(rng);
    nn::uniform_fill(dense.bias, -0.5, 0.5, rng);
    Tensor x = random_tensor({dense.in_features()}, rng);
    Tensor gx;
    const Tensor w = random_tensor({dense.out_features()}, rng);
    auto blocks = param_blocks(dense);
    blocks.push_back({"input", &x, &gx});
    return check_gradients([&] { return project(dense.forward(x), w); },
                           [&] {
                               zero(dense);
                               nn::DenseCache cache;
                               dense.forward(x, &cache);
                               gx = dense.backward(cache, w);
                           },
                           blocks);
}

GradResult conv_case(Rng& rng) {
    const auto k = pick(rng, 1, 5);
    nn::Conv1d conv(pick(rng, 1, 4), pick(rng, 1, 6), k);
    conv.init(rng);
    nn::uniform_fill(conv.bias, -0.2, 0.2, rng);
    Tensor x = random_tensor({pick(rng, k, k + 5), conv.channels()}, rng);
    Tensor gx;
    const Tensor w = random_tensor({x.dim(0) - k + 1, conv.filters()}, rng);
    auto blocks = param_blocks(conv);
    blocks.push_back({"input", &x, &gx});
    return check_gradients([&] { return project(conv.forward(x), w); },
                           [&] {
                               zero(conv);
                               nn::ConvCache cache;
                               conv.forward(x, &cache);
                               gx = conv.backward(cache, w);
                           },
                           blocks);
}

GradResult max_pool_case(Rng& rng) {
    Tensor x = random_tensor({pick(rng, 1, 7), pick(rng, 1, 5)}, rng);
    Tensor gx;
    const Tensor w = random_tensor({x.dim(1)}, rng);
    return check_gradients([&] { return project(nn::global_max_pool(x), w); },
                           [&] {
                               nn::MaxPoolCache cache;
                               nn::global_max_pool(x, &cache);
                               gx = nn::global_max_pool_backward(cache, w);
                           },
                           {{"input", &x, &gx}});
}

GradResult avg_pool_case(Rng& rng) {
    Tensor x = random_tensor({pick(rng, 1, 7), pick(rng, 1, 5)}, rng);
    Tensor gx;
    const Tensor w = random_tensor({x.dim(1)}, rng);
    return check_gradients([&] { return project(nn::global_avg_pool(x), w); },
                           [&] { gx = nn::global_avg_pool_backward(x.dim(0), w); }, {{"input", &x, &gx}});
}

GradResult concat_case(Rng& rng) {
    const auto rows = pick(rng, 1, 4);
    const std::size_t axis = rng.below(2);
    std::vector<Tensor> xs;
    std::vector<std::size_t> extents;
    const auto parts = pick(rng, 1, 3);
    for (std::size_t p = 0; p < parts; ++p) {
        const auto e = pick(rng, 1, 4);
        extents.push_back(e);
        xs.push_back(axis == 0 ? random_tensor({e, rows}, rng) : random_tensor({rows, e}, rng));
    }
    std::vector<Tensor> gxs(parts);
    const Tensor probe = nn::concat(xs, axis);
    const Tensor w = random_tensor(probe.shape(), rng);
    std::vector<GradBlock> blocks;
    for (std::size_t p = 0; p < parts; ++p) blocks.push_back({"part" + std::to_string(p), &xs[p], &gxs[p]});
    return check_gradients([&] { return project(nn::concat(xs, axis), w); },
                           [&] {
                               auto pieces = nn::split(w, extents, axis);
                               for (std::size_t p = 0; p < parts; ++p) gxs[p] = std::move(pieces[p]);
                           },
                           blocks);
}

GradResult softmax_case(Rng& rng) {
    Tensor logits = random_tensor({kNumClasses}, rng, 3.0);
    const auto gold = static_cast<std::size_t>(rng.below(kNumClasses));
    Tensor g;
    return check_gradients([&] { return nn::softmax_xent(logits, gold).loss; },
                           [&] { g = nn::softmax_xent_grad(nn::softmax_xent(logits, gold).probs, gold); },
                           {{"logits", &logits, &g}});
}

GradResult lstm_case(Rng& rng, bool sequences) {
    nn::Lstm lstm(pick(rng, 1, 4), pick(rng, 1, 4));
    lstm.init(rng);
    nn::uniform_fill(lstm.bias, -0.5, 0.5, rng);
    nn::uniform_fill(lstm.w_recurrent, -0.8, 0.8, rng);
    Tensor x = random_tensor({pick(rng, 1, 6), lstm.input_dim()}, rng);
    Tensor gx;
    const Tensor w = sequences ? random_tensor({x.dim(0), lstm.units()}, rng) : random_tensor({lstm.units()}, rng);
    auto blocks = param_blocks(lstm);
    blocks.push_back({"input", &x, &gx});
    return check_gradients([&] { return project(lstm.forward(x, sequences), w); },
                           [&] {
                               zero(lstm);
                               nn::LstmCache cache;
                               lstm.forward(x, sequences, &cache);
                               gx = lstm.backward(cache, w);
                           },
                           blocks);
}

GradResult bilstm_case(Rng& rng) {
    nn::BiLstm bi(pick(rng, 1, 4), pick(rng, 1, 4));
    bi.init(rng);
    nn::uniform_fill(bi.fwd.bias, -0.5, 0.5, rng);
    nn::uniform_fill(bi.bwd.bias, -0.5, 0.5, rng);
    Tensor x = random_tensor({pick(rng, 1, 6), bi.fwd.input_dim()}, rng);
    Tensor gx;
    const Tensor w = random_tensor({x.dim(0), 2 * bi.units()}, rng);
    auto blocks = param_blocks(bi);
    blocks.push_back({"input", &x, &gx});
    return check_gradients([&] { return project(bi.forward(x), w); },
                           [&] {
                               zero(bi);
                               nn::BiLstmCache cache;
                               bi.forward(x, &cache);
                               gx = bi.backward(cache, w);
                           },
                           blocks);
}

// Tiny dims shared by every architecture check: batch of 2, mean loss.
GradResult arch_case(Rng& rng, ArchId arch) {
    ModelConfig cfg;
    cfg.vocab_size = 20;
    cfg.embedding_dim = 4;
    cfg.lstm_units = 5;
    cfg.conv_filters = 6;
    cfg.dense_hidden = 5;
    cfg.seq_len = 7;
    Model model = build_model(arch, cfg, rng.next());
    auto params = model.params();
    // Move biases off zero so ReLU units are not sitting on their kink.
    for (auto& p : params) {
        if (p.value->rank() == 1) nn::uniform_fill(*p.value, -0.3, 0.3, rng);
    }

    std::vector<std::vector<std::uint32_t>> batch(2, std::vector<std::uint32_t>(cfg.seq_len));
    std::vector<std::size_t> gold(batch.size());
    for (std::size_t b = 0; b < batch.size(); ++b) {
        for (auto& id : batch[b]) id = static_cast<std::uint32_t>(rng.below(cfg.vocab_size));
        gold[b] = static_cast<std::size_t>(rng.below(kNumClasses));
    }
    const double inv = 1.0 / static_cast<double>(batch.size());

    std::vector<GradBlock> blocks;
    for (const auto& p : params) blocks.push_back({p.name, p.value, p.grad});
    return check_gradients(
        [&] {
            double total = 0.0;
            for (std::size_t b = 0; b < batch.size(); ++b) {
                total += nn::softmax_xent(model.network().logits(batch[b]), gold[b]).loss;
            }
            return total * inv;
        },
        [&] {
            nn::zero_grads(params);
            for (std::size_t b = 0; b < batch.size(); ++b) {
                model.network().accumulate_gradients(batch[b], gold[b]);
            }
            for (auto& p : params) {
                for (auto& g : p.grad->data()) g *= inv;
            }
        },
        blocks);
}

}  // namespace

std::vector<GradCase> all_grad_cases() {
    return {GradCase::Embedding,  GradCase::DenseLinear,   GradCase::DenseRelu, GradCase::Conv1d,
            GradCase::MaxPool,    GradCase::AvgPool,       GradCase::Concat,    GradCase::SoftmaxXent,
            GradCase::LstmFinal,  GradCase::LstmSequences, GradCase::BiLstm,    GradCase::ArchLstm,
            GradCase::ArchLstmConv, GradCase::ArchBiLstm,  GradCase::ArchCnn};
}

std::string_view grad_case_name(GradCase c) {
    switch (c) {
        case GradCase::Embedding: return "embedding";
        case GradCase::DenseLinear: return "dense-linear";
        case GradCase::DenseRelu: return "dense-relu";
        case GradCase::Conv1d: return "conv1d";
        case GradCase::MaxPool: return "global-max-pool";
        case GradCase::AvgPool: return "global-avg-pool";
        case GradCase::Concat: return "concat";
        case GradCase::SoftmaxXent: return "softmax-xent";
        case GradCase::LstmFinal: return "lstm-final";
        case GradCase::LstmSequences: return "lstm-sequences";
        case GradCase::BiLstm: return "bilstm";
        case GradCase::ArchLstm: return "arch-lstm";
        case GradCase::ArchLstmConv: return "arch-lstm-conv";
        case GradCase::ArchBiLstm: return "arch-bilstm";
        case GradCase::ArchCnn: return "arch-cnn";
    }
    return "?";
}

GradResult run_grad_case(GradCase c, std::uint64_t seed) {
    Rng rng(seed);
    switch (c) {
        case GradCase::Embedding: return embedding_case(rng);
        case GradCase::DenseLinear: return dense_case(rng, nn::Activation::Linear);
        case GradCase::DenseRelu: return dense_case(rng, nn::Activation::Relu);
        case GradCase::Conv1d: return conv_case(rng);
        case GradCase::MaxPool: return max_pool_case(rng);
        case GradCase::AvgPool: return avg_pool_case(rng);
        case GradCase::Concat: return concat_case(rng);
        case GradCase::SoftmaxXent: return softmax_case(rng);
        case GradCase::LstmFinal: return lstm_case(rng, false);
        case GradCase::LstmSequences: return lstm_case(rng, true);
        case GradCase::BiLstm: return bilstm_case(rng);
        case GradCase::ArchLstm: return arch_case(rng, ArchId::Lstm);
        case GradCase::ArchLstmConv: return arch_case(rng, ArchId::LstmConv);
        case GradCase::ArchBiLstm: return arch_case(rng, ArchId::BiLstm);
        case GradCase::ArchCnn: return arch_case(rng, ArchId::Cnn);
    }
    return {};
}

}  // namespace sentimix::testing
