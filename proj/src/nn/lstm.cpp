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

#include "sentimix/nn/lstm.hpp"

#include <algorithm>
#include <cmath>

#include "sentimix/error.hpp"
#include "sentimix/nn/kernels.hpp"

namespace sentimix::nn {
namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

std::string join(std::string_view prefix, std::string_view name) {
    std::string s(prefix);
    s += '.';
    s += name;
    return s;
}

}  // namespace

Lstm::Lstm(std::size_t input_dim, std::size_t units)
    : w_input({4 * units, input_dim}),
      w_recurrent({4 * units, units}),
      bias({4 * units}),
      w_input_grad({4 * units, input_dim}),
      w_recurrent_grad({4 * units, units}),
      bias_grad({4 * units}) {}

Tensor Lstm::forward(const Tensor& x, bool return_sequences, LstmCache* cache) const {
    if (x.rank() != 2 || x.dim(1) != input_dim()) {
        throw InvalidArgument("lstm: expected T x " + std::to_string(input_dim()) + " input, got " +
                              x.shape_string());
    }
    const std::size_t steps = x.dim(0);
    const std::size_t h = units();
    const std::size_t d = input_dim();

    Tensor gates({steps, 4 * h});
    Tensor cell({steps, h});
    Tensor cell_tanh({steps, h});
    Tensor hidden({steps, h});
    std::vector<double> z(4 * h);
    std::vector<double> zr(4 * h);
    std::vector<double> h_prev(h, 0.0);
    std::vector<double> c_prev(h, 0.0);

    for (std::size_t t = 0; t < steps; ++t) {
        kernels::gemv(w_input.data(), 4 * h, d, x.row(t), z);
        kernels::gemv(w_recurrent.data(), 4 * h, h, h_prev, zr);
        auto gate = gates.row(t);
        for (std::size_t j = 0; j < 4 * h; ++j) {
            const double pre = z[j] + zr[j] + bias[j];
            gate[j] = (j >= 2 * h && j < 3 * h) ? std::tanh(pre) : sigmoid(pre);
        }
        auto c = cell.row(t);
        auto tc = cell_tanh.row(t);
        auto ht = hidden.row(t);
        for (std::size_t u = 0; u < h; ++u) {
            const double i = gate[u];
            const double f = gate[h + u];
            const double g = gate[2 * h + u];
            const double o = gate[3 * h + u];
            c[u] = f * c_prev[u] + i * g;
            tc[u] = std::tanh(c[u]);
            ht[u] = o * tc[u];
            c_prev[u] = c[u];
            h_prev[u] = ht[u];
        }
    }

    Tensor out = return_sequences ? hidden : Tensor({h}, std::vector<double>(h_prev));
    if (cache) {
        cache->input = x;
        cache->gates = std::move(gates);
        cache->cell = std::move(cell);
        cache->cell_tanh = std::move(cell_tanh);
        cache->hidden = std::move(hidden);
        cache->return_sequences = return_sequences;
    }
    return out;
}

Tensor Lstm::backward(const LstmCache& cache, const Tensor& grad_out) {
    const std::size_t steps = cache.input.dim(0);
    const std::size_t h = units();
    const std::size_t d = input_dim();
    if (cache.return_sequences) {
        expect_shape(grad_out, {steps, h}, "lstm grad");
    } else {
        expect_shape(grad_out, {h}, "lstm grad");
    }

    Tensor grad_in({steps, d});
    std::vector<double> dh_next(h, 0.0);
    std::vector<double> dc_next(h, 0.0);
    std::vector<double> dz(4 * h);
    const std::vector<double> zeros(h, 0.0);

    for (std::size_t t = steps; t-- > 0;) {
        const auto gate = cache.gates.row(t);
        const auto tc = cache.cell_tanh.row(t);
        const std::span<const double> c_prev = t > 0 ? cache.cell.row(t - 1) : std::span<const double>(zeros);
        const std::span<const double> h_prev = t > 0 ? cache.hidden.row(t - 1) : std::span<const double>(zeros);

        for (std::size_t u = 0; u < h; ++u) {
            double dh = dh_next[u];
            if (cache.return_sequences) {
                dh += grad_out.at(t, u);
            } else if (t + 1 == steps) {
                dh += grad_out[u];
            }
            const double i = gate[u];
            const double f = gate[h + u];
            const double g = gate[2 * h + u];
            const double o = gate[3 * h + u];
            const double dc = dh * o * (1.0 - tc[u] * tc[u]) + dc_next[u];
            dz[u] = dc * g * i * (1.0 - i);
            dz[h + u] = dc * c_prev[u] * f * (1.0 - f);
            dz[2 * h + u] = dc * i * (1.0 - g * g);
            dz[3 * h + u] = dh * tc[u] * o * (1.0 - o);
            dc_next[u] = dc * f;
        }

        kernels::axpy(1.0, dz, bias_grad.data());
        kernels::outer_acc(dz, cache.input.row(t), w_input_grad.data());
        kernels::outer_acc(dz, h_prev, w_recurrent_grad.data());
        kernels::gemv_transpose_acc(w_input.data(), 4 * h, d, dz, grad_in.row(t));
        std::fill(dh_next.begin(), dh_next.end(), 0.0);
        kernels::gemv_transpose_acc(w_recurrent.data(), 4 * h, h, dz, dh_next);
    }
    return grad_in;
}

void Lstm::init(Rng& rng) {
    const std::size_t h = units();
    glorot_uniform(w_input, input_dim(), 4 * h, rng);
    glorot_uniform(w_recurrent, h, 4 * h, rng);
    bias.fill(0.0);
    for (std::size_t u = 0; u < h; ++u) {
        bias[h + u] = 1.0;
    }
}

void Lstm::collect(std::string_view prefix, std::vector<ParamRef>& out) {
    out.push_back({join(prefix, "w_input"), &w_input, &w_input_grad});
    out.push_back({join(prefix, "w_recurrent"), &w_recurrent, &w_recurrent_grad});
    out.push_back({join(prefix, "bias"), &bias, &bias_grad});
}

Tensor reverse_time(const Tensor& x) {
    Tensor out(x.shape());
    const std::size_t steps = x.dim(0);
    for (std::size_t t = 0; t < steps; ++t) {
        std::ranges::copy(x.row(t), out.row(steps - 1 - t).begin());
    }
    return out;
}

BiLstm::BiLstm(std::size_t input_dim, std::size_t units) : fwd(input_dim, units), bwd(input_dim, units) {}

Tensor BiLstm::forward(const Tensor& x, BiLstmCache* cache) const {
    const Tensor ahead = fwd.forward(x, true, cache ? &cache->forward_dir : nullptr);
    const Tensor behind =
        reverse_time(bwd.forward(reverse_time(x), true, cache ? &cache->backward_dir : nullptr));
    const Tensor parts[] = {ahead, behind};
    return concat(parts, 1);
}

Tensor BiLstm::backward(const BiLstmCache& cache, const Tensor& grad_out) {
    const std::size_t h = units();
    const std::size_t extents[] = {h, h};
    const auto grads = split(grad_out, extents, 1);
    Tensor grad_in = fwd.backward(cache.forward_dir, grads[0]);
    const Tensor grad_rev = reverse_time(bwd.backward(cache.backward_dir, reverse_time(grads[1])));
    kernels::axpy(1.0, grad_rev.data(), grad_in.data());
    return grad_in;
}

void BiLstm::init(Rng& rng) {
    fwd.init(rng);
    bwd.init(rng);
}

void BiLstm::collect(std::string_view prefix, std::vector<ParamRef>& out) {
    fwd.collect(join(prefix, "forward"), out);
    bwd.collect(join(prefix, "backward"), out);
}

}  // namespace sentimix::nn
