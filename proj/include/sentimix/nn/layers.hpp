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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentimix/nn/random.hpp"
#include "sentimix/nn/tensor.hpp"

// Layer forward passes and their hand-derived backward passes.
//
// Convention: forward() optionally fills a cache; backward(cache, grad_out)
// accumulates parameter gradients into the layer's *_grad tensors and
// returns the gradient with respect to the layer input. A cache is only
// valid for the layer and call that produced it.
namespace sentimix::nn {

/// Non-owning view of one trainable tensor and its gradient accumulator.
struct ParamRef {
    std::string name;
    Tensor* value;
    Tensor* grad;
};

enum class Activation { Linear, Relu };

class Embedding {
public:
    Embedding() = default;
    Embedding(std::size_t vocab_size, std::size_t dim);

    /// Row t of the result is weight[ids[t]]. Throws InvalidArgument when an
    /// id is out of range.
    Tensor forward(std::span<const std::uint32_t> ids) const;
    /// Duplicate ids accumulate additively.
    void backward(std::span<const std::uint32_t> ids, const Tensor& grad_out);

    void init(Rng& rng);
    void collect(std::string_view prefix, std::vector<ParamRef>& out);

    Tensor weight;  ///< vocab_size x dim
    Tensor weight_grad;
};

struct DenseCache {
    Tensor input;
    Tensor output;
};

/// y = act(W x + b), W is out x in.
class Dense {
public:
    Dense() = default;
    Dense(std::size_t in, std::size_t out, Activation act);

    Tensor forward(const Tensor& x, DenseCache* cache = nullptr) const;
    Tensor backward(const DenseCache& cache, const Tensor& grad_out);

    void init(Rng& rng);
    void collect(std::string_view prefix, std::vector<ParamRef>& out);

    std::size_t in_features() const { return weight.dim(1); }
    std::size_t out_features() const { return weight.dim(0); }

    Tensor weight;
    Tensor bias;
    Tensor weight_grad;
    Tensor bias_grad;
    Activation activation = Activation::Linear;
};

struct ConvCache {
    Tensor input;
    Tensor output;
};

/// Valid-padding, stride-1 temporal convolution with ReLU:
/// out[t, f] = relu(sum_{j, c} K[f, j, c] * x[t + j, c] + b[f]).
class Conv1d {
public:
    Conv1d() = default;
    Conv1d(std::size_t channels, std::size_t filters, std::size_t kernel_size);

    /// x is T x C with T >= kernel_size; result is (T - k + 1) x F.
    Tensor forward(const Tensor& x, ConvCache* cache = nullptr) const;
    Tensor backward(const ConvCache& cache, const Tensor& grad_out);

    void init(Rng& rng);
    void collect(std::string_view prefix, std::vector<ParamRef>& out);

    std::size_t filters() const { return kernel.dim(0); }
    std::size_t kernel_size() const { return kernel.dim(1); }
    std::size_t channels() const { return kernel.dim(2); }

    Tensor kernel;  ///< F x k x C
    Tensor bias;    ///< F
    Tensor kernel_grad;
    Tensor bias_grad;
};

struct MaxPoolCache {
    std::size_t steps = 0;
    std::vector<std::size_t> argmax;  ///< per channel, first index on ties
};

/// out[c] = max_t x[t, c]
Tensor global_max_pool(const Tensor& x, MaxPoolCache* cache = nullptr);
Tensor global_max_pool_backward(const MaxPoolCache& cache, const Tensor& grad_out);

/// out[c] = mean_t x[t, c]
Tensor global_avg_pool(const Tensor& x);
Tensor global_avg_pool_backward(std::size_t steps, const Tensor& grad_out);

/// Concatenate along `axis`; all other extents must agree.
Tensor concat(std::span<const Tensor> xs, std::size_t axis);
/// Inverse split of a concat gradient: extents[i] is the axis length of input i.
std::vector<Tensor> split(const Tensor& grad, std::span<const std::size_t> extents, std::size_t axis);

struct SoftmaxXent {
    double loss = 0.0;
    Tensor probs;
};

/// Numerically stable softmax (max subtracted first).
Tensor softmax(const Tensor& logits);

/// loss = -log softmax(logits)[gold]. Throws NumericError on non-finite logits.
SoftmaxXent softmax_xent(const Tensor& logits, std::size_t gold);

/// d loss / d logits = probs - onehot(gold)
Tensor softmax_xent_grad(const Tensor& probs, std::size_t gold);

}  // namespace sentimix::nn
