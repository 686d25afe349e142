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

#include "sentimix/nn/layers.hpp"

#include <algorithm>
#include <cmath>

#include "sentimix/error.hpp"
#include "sentimix/nn/kernels.hpp"

namespace sentimix::nn {
namespace {

std::string join(std::string_view prefix, std::string_view name) {
    std::string s(prefix);
    s += '.';
    s += name;
    return s;
}

}  // namespace

// ---- Embedding ------------------------------------------------------------

Embedding::Embedding(std::size_t vocab_size, std::size_t dim)
    : weight({vocab_size, dim}), weight_grad({vocab_size, dim}) {}

Tensor Embedding::forward(std::span<const std::uint32_t> ids) const {
    const std::size_t vocab = weight.dim(0);
    const std::size_t dim = weight.dim(1);
    if (ids.empty()) {
        throw InvalidArgument("embedding: empty id sequence");
    }
    Tensor out({ids.size(), dim});
    for (std::size_t t = 0; t < ids.size(); ++t) {
        if (ids[t] >= vocab) {
            throw InvalidArgument("embedding: id " + std::to_string(ids[t]) +
                                  " out of range for vocabulary of " + std::to_string(vocab));
        }
        std::ranges::copy(weight.row(ids[t]), out.row(t).begin());
    }
    return out;
}

void Embedding::backward(std::span<const std::uint32_t> ids, const Tensor& grad_out) {
    for (std::size_t t = 0; t < ids.size(); ++t) {
        kernels::axpy(1.0, grad_out.row(t), weight_grad.row(ids[t]));
    }
}

void Embedding::init(Rng& rng) { uniform_fill(weight, -0.05, 0.05, rng); }

void Embedding::collect(std::string_view prefix, std::vector<ParamRef>& out) {
    out.push_back({join(prefix, "weight"), &weight, &weight_grad});
}

// ---- Dense ----------------------------------------------------------------

Dense::Dense(std::size_t in, std::size_t out, Activation act)
    : weight({out, in}), bias({out}), weight_grad({out, in}), bias_grad({out}), activation(act) {}

Tensor Dense::forward(const Tensor& x, DenseCache* cache) const {
    expect_shape(x, {in_features()}, "dense input");
    Tensor y({out_features()});
    kernels::gemv(weight.data(), out_features(), in_features(), x.data(), y.data());
    for (std::size_t o = 0; o < y.size(); ++o) {
        y[o] += bias[o];
        if (activation == Activation::Relu && y[o] < 0.0) {
            y[o] = 0.0;
        }
    }
    if (cache) {
        cache->input = x;
        cache->output = y;
    }
    return y;
}

Tensor Dense::backward(const DenseCache& cache, const Tensor& grad_out) {
    expect_shape(grad_out, {out_features()}, "dense grad");
    Tensor pre = grad_out;
    if (activation == Activation::Relu) {
        for (std::size_t o = 0; o < pre.size(); ++o) {
            if (cache.output[o] <= 0.0) pre[o] = 0.0;
        }
    }
    kernels::axpy(1.0, pre.data(), bias_grad.data());
    kernels::outer_acc(pre.data(), cache.input.data(), weight_grad.data());
    Tensor grad_in({in_features()});
    kernels::gemv_transpose_acc(weight.data(), out_features(), in_features(), pre.data(), grad_in.data());
    return grad_in;
}

void Dense::init(Rng& rng) {
    glorot_uniform(weight, in_features(), out_features(), rng);
    bias.fill(0.0);
}

void Dense::collect(std::string_view prefix, std::vector<ParamRef>& out) {
    out.push_back({join(prefix, "weight"), &weight, &weight_grad});
    out.push_back({join(prefix, "bias"), &bias, &bias_grad});
}

// ---- Conv1d ---------------------------------------------------------------

Conv1d::Conv1d(std::size_t channels, std::size_t filters, std::size_t kernel_size)
    : kernel({filters, kernel_size, channels}),
      bias({filters}),
      kernel_grad({filters, kernel_size, channels}),
      bias_grad({filters}) {}

Tensor Conv1d::forward(const Tensor& x, ConvCache* cache) const {
    if (x.rank() != 2 || x.dim(1) != channels()) {
        throw InvalidArgument("conv1d: expected T x " + std::to_string(channels()) + " input, got " +
                              x.shape_string());
    }
    const std::size_t steps = x.dim(0);
    const std::size_t k = kernel_size();
    if (steps < k) {
        throw InvalidArgument("conv1d: sequence length " + std::to_string(steps) +
                              " shorter than kernel size " + std::to_string(k));
    }
    const std::size_t out_steps = steps - k + 1;
    const std::size_t window = k * channels();
    const auto& kt = kernels::active();
    Tensor out({out_steps, filters()});
    for (std::size_t t = 0; t < out_steps; ++t) {
        // rows t .. t+k-1 of a row-major T x C input are one contiguous window
        const double* win = x.raw() + t * channels();
        for (std::size_t f = 0; f < filters(); ++f) {
            const double z = kt.dot(kernel.raw() + f * window, win, window) + bias[f];
            out.at(t, f) = z > 0.0 ? z : 0.0;
        }
    }
    if (cache) {
        cache->input = x;
        cache->output = out;
    }
    return out;
}

Tensor Conv1d::backward(const ConvCache& cache, const Tensor& grad_out) {
    const std::size_t out_steps = cache.output.dim(0);
    expect_shape(grad_out, {out_steps, filters()}, "conv1d grad");
    const std::size_t window = kernel_size() * channels();
    const auto& kt = kernels::active();
    Tensor grad_in(cache.input.shape());
    for (std::size_t t = 0; t < out_steps; ++t) {
        const double* win = cache.input.raw() + t * channels();
        double* grad_win = grad_in.raw() + t * channels();
        for (std::size_t f = 0; f < filters(); ++f) {
            if (cache.output.at(t, f) <= 0.0) continue;
            const double g = grad_out.at(t, f);
            if (g == 0.0) continue;
            bias_grad[f] += g;
            kt.axpy(g, win, kernel_grad.raw() + f * window, window);
            kt.axpy(g, kernel.raw() + f * window, grad_win, window);
        }
    }
    return grad_in;
}

void Conv1d::init(Rng& rng) {
    const std::size_t k = kernel_size();
    glorot_uniform(kernel, k * channels(), k * filters(), rng);
    bias.fill(0.0);
}

void Conv1d::collect(std::string_view prefix, std::vector<ParamRef>& out) {
    out.push_back({join(prefix, "kernel"), &kernel, &kernel_grad});
    out.push_back({join(prefix, "bias"), &bias, &bias_grad});
}

// ---- Pooling --------------------------------------------------------------

Tensor global_max_pool(const Tensor& x, MaxPoolCache* cache) {
    if (x.rank() != 2) {
        throw InvalidArgument("global_max_pool: expected T x C input, got " + x.shape_string());
    }
    const std::size_t steps = x.dim(0);
    const std::size_t channels = x.dim(1);
    Tensor out({channels});
    std::vector<std::size_t> argmax(channels, 0);
    for (std::size_t c = 0; c < channels; ++c) {
        double best = x.at(0, c);
        for (std::size_t t = 1; t < steps; ++t) {
            if (x.at(t, c) > best) {
                best = x.at(t, c);
                argmax[c] = t;
            }
        }
        out[c] = best;
    }
    if (cache) {
        cache->steps = steps;
        cache->argmax = std::move(argmax);
    }
    return out;
}

Tensor global_max_pool_backward(const MaxPoolCache& cache, const Tensor& grad_out) {
    expect_shape(grad_out, {cache.argmax.size()}, "global_max_pool grad");
    Tensor grad_in({cache.steps, cache.argmax.size()});
    for (std::size_t c = 0; c < cache.argmax.size(); ++c) {
        grad_in.at(cache.argmax[c], c) = grad_out[c];
    }
    return grad_in;
}

Tensor global_avg_pool(const Tensor& x) {
    if (x.rank() != 2) {
        throw InvalidArgument("global_avg_pool: expected T x C input, got " + x.shape_string());
    }
    const std::size_t steps = x.dim(0);
    Tensor out({x.dim(1)});
    for (std::size_t t = 0; t < steps; ++t) {
        kernels::axpy(1.0, x.row(t), out.data());
    }
    const double scale = 1.0 / static_cast<double>(steps);
    for (auto& v : out.data()) v *= scale;
    return out;
}

Tensor global_avg_pool_backward(std::size_t steps, const Tensor& grad_out) {
    Tensor grad_in({steps, grad_out.size()});
    const double scale = 1.0 / static_cast<double>(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        for (std::size_t c = 0; c < grad_out.size(); ++c) {
            grad_in.at(t, c) = grad_out[c] * scale;
        }
    }
    return grad_in;
}

// ---- Concat ---------------------------------------------------------------

namespace {

// Product of extents before / after `axis`.
std::pair<std::size_t, std::size_t> outer_inner(const std::vector<std::size_t>& shape, std::size_t axis) {
    std::size_t outer = 1;
    std::size_t inner = 1;
    for (std::size_t i = 0; i < axis; ++i) outer *= shape[i];
    for (std::size_t i = axis + 1; i < shape.size(); ++i) inner *= shape[i];
    return {outer, inner};
}

}  // namespace

Tensor concat(std::span<const Tensor> xs, std::size_t axis) {
    if (xs.empty()) {
        throw InvalidArgument("concat: no inputs");
    }
    const auto& first = xs.front().shape();
    if (axis >= first.size()) {
        throw InvalidArgument("concat: axis " + std::to_string(axis) + " out of range");
    }
    std::size_t total = 0;
    for (const auto& x : xs) {
        if (x.rank() != first.size()) {
            throw InvalidArgument("concat: rank mismatch");
        }
        for (std::size_t i = 0; i < first.size(); ++i) {
            if (i != axis && x.dim(i) != first[i]) {
                throw InvalidArgument("concat: shape " + x.shape_string() + " does not match " +
                                      xs.front().shape_string() + " off axis " + std::to_string(axis));
            }
        }
        total += x.dim(axis);
    }
    auto shape = first;
    shape[axis] = total;
    Tensor out(shape);
    const auto [outer, inner] = outer_inner(shape, axis);
    std::size_t offset = 0;
    for (const auto& x : xs) {
        const std::size_t chunk = x.dim(axis) * inner;
        for (std::size_t o = 0; o < outer; ++o) {
            std::copy_n(x.raw() + o * chunk, chunk, out.raw() + o * total * inner + offset);
        }
        offset += chunk;
    }
    return out;
}

std::vector<Tensor> split(const Tensor& grad, std::span<const std::size_t> extents, std::size_t axis) {
    std::size_t total = 0;
    for (auto e : extents) total += e;
    if (axis >= grad.rank() || total != grad.dim(axis)) {
        throw InvalidArgument("split: extents do not add up to " + grad.shape_string());
    }
    const auto [outer, inner] = outer_inner(grad.shape(), axis);
    std::vector<Tensor> parts;
    std::size_t offset = 0;
    for (auto e : extents) {
        auto shape = grad.shape();
        shape[axis] = e;
        Tensor part(shape);
        const std::size_t chunk = e * inner;
        for (std::size_t o = 0; o < outer; ++o) {
            std::copy_n(grad.raw() + o * total * inner + offset, chunk, part.raw() + o * chunk);
        }
        offset += chunk;
        parts.push_back(std::move(part));
    }
    return parts;
}

// ---- Softmax / cross-entropy ------------------------------------------------

Tensor softmax(const Tensor& logits) {
    logits.check_finite("softmax logits");
    const double peak = *std::max_element(logits.data().begin(), logits.data().end());
    Tensor probs(logits.shape());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - peak);
        sum += probs[i];
    }
    for (auto& p : probs.data()) p /= sum;
    return probs;
}

SoftmaxXent softmax_xent(const Tensor& logits, std::size_t gold) {
    if (gold >= logits.size()) {
        throw InvalidArgument("softmax_xent: gold class out of range");
    }
    logits.check_finite("softmax_xent logits");
    const double peak = *std::max_element(logits.data().begin(), logits.data().end());
    double sum = 0.0;
    for (auto z : logits.data()) sum += std::exp(z - peak);
    const double log_sum = std::log(sum);
    SoftmaxXent out{log_sum - (logits[gold] - peak), softmax(logits)};
    return out;
}

Tensor softmax_xent_grad(const Tensor& probs, std::size_t gold) {
    Tensor g = probs;
    g[gold] -= 1.0;
    return g;
}

}  // namespace sentimix::nn
