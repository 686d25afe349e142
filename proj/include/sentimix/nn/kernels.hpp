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
#include <span>
#include <string_view>

// Inner loops of the numeric core. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2 variant chosen at runtime. `axpy` and
// `adam_update` are elementwise, so both variants agree bitwise; `dot`
// reassociates the sum and agrees with the scalar reference to rounding.
namespace sentimix::nn::kernels {

struct AdamCoefficients {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-7;
    double step_size = 0.0;        ///< lr / (1 - beta1^t)
    double second_moment_scale = 1.0;  ///< 1 / (1 - beta2^t)
};

struct KernelTable {
    std::string_view name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    void (*adam_update)(double* param, const double* grad, double* m, double* v, std::size_t n,
                        const AdamCoefficients& c);
};

enum class Isa { Scalar, Avx2 };

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// Table used by the free functions below. Chosen once from the
/// SENTIMIX_KERNELS environment variable ("scalar", "avx2", "auto"; default
/// auto) and overridable with select().
const KernelTable& active() noexcept;
/// Returns false (and leaves the selection unchanged) if `isa` is unavailable.
bool select(Isa isa) noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}

/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active().axpy(alpha, x.data(), y.data(), x.size());
}

/// y = W x for row-major W (rows x cols); y must hold `rows` values.
void gemv(std::span<const double> w, std::size_t rows, std::size_t cols, std::span<const double> x,
          std::span<double> y);

/// x_grad += W^T g
void gemv_transpose_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                        std::span<const double> g, std::span<double> x_grad);

/// W_grad += g x^T
void outer_acc(std::span<const double> g, std::span<const double> x, std::span<double> w_grad);

}  // namespace sentimix::nn::kernels
