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
#include <string_view>
#include <vector>

#include "sentimix/nn/layers.hpp"

namespace sentimix::nn {

struct LstmCache {
    Tensor input;   ///< T x D
    Tensor gates;   ///< T x 4H, activated, blocks ordered i, f, g, o
    Tensor cell;    ///< T x H
    Tensor cell_tanh;
    Tensor hidden;  ///< T x H
    bool return_sequences = false;
};

/// Single-layer LSTM with zero initial state:
///   i, f, o = sigmoid(.), g = tanh(.)
///   c_t = f * c_{t-1} + i * g,  h_t = o * tanh(c_t)
/// Pre-activations are W_x x_t + W_h h_{t-1} + b with W_x: 4H x D,
/// W_h: 4H x H, b: 4H.
class Lstm {
public:
    Lstm() = default;
    Lstm(std::size_t input_dim, std::size_t units);

    /// T x H when return_sequences, else the final state h_T (H).
    Tensor forward(const Tensor& x, bool return_sequences, LstmCache* cache = nullptr) const;
    /// Backpropagation through time; grad_out matches the forward result shape.
    Tensor backward(const LstmCache& cache, const Tensor& grad_out);

    /// Glorot-uniform weights, zero bias except the forget gate (1.0).
    void init(Rng& rng);
    void collect(std::string_view prefix, std::vector<ParamRef>& out);

    std::size_t units() const { return w_recurrent.dim(1); }
    std::size_t input_dim() const { return w_input.dim(1); }

    Tensor w_input;
    Tensor w_recurrent;
    Tensor bias;
    Tensor w_input_grad;
    Tensor w_recurrent_grad;
    Tensor bias_grad;
};

struct BiLstmCache {
    LstmCache forward_dir;
    LstmCache backward_dir;  ///< over the time-reversed input
};

/// Two independent LSTMs, one over t = 1..T and one over t = T..1. The
/// result row t is [h_fwd_t ; h_bwd_t] (T x 2H).
class BiLstm {
public:
    BiLstm() = default;
    BiLstm(std::size_t input_dim, std::size_t units);

    Tensor forward(const Tensor& x, BiLstmCache* cache = nullptr) const;
    Tensor backward(const BiLstmCache& cache, const Tensor& grad_out);

    void init(Rng& rng);
    void collect(std::string_view prefix, std::vector<ParamRef>& out);

    std::size_t units() const { return fwd.units(); }

    Lstm fwd;
    Lstm bwd;
};

/// Rows in reverse order.
Tensor reverse_time(const Tensor& x);

}  // namespace sentimix::nn
