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

#include <cmath>

#include "sentimix/nn/kernels.hpp"

namespace sentimix::nn::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = y[i] + alpha * x[i];
    }
}

void adam_scalar(double* param, const double* grad, double* m, double* v, std::size_t n,
                 const AdamCoefficients& c) {
    const double one_minus_b1 = 1.0 - c.beta1;
    const double one_minus_b2 = 1.0 - c.beta2;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = grad[i];
        m[i] = c.beta1 * m[i] + one_minus_b1 * g;
        v[i] = c.beta2 * v[i] + one_minus_b2 * (g * g);
        const double denom = std::sqrt(v[i] * c.second_moment_scale) + c.epsilon;
        param[i] = param[i] - c.step_size * m[i] / denom;
    }
}

}  // namespace

const KernelTable& scalar_table() noexcept {
    static const KernelTable table{"scalar", dot_scalar, axpy_scalar, adam_scalar};
    return table;
}

}  // namespace sentimix::nn::kernels
