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

#include <cstdint>
#include <span>
#include <vector>

#include "sentimix/nn/layers.hpp"

namespace sentimix::nn {

struct AdamHyper {
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-7;
};

/// Adam with bias correction:
///   m <- b1 m + (1 - b1) g,   v <- b2 v + (1 - b2) g^2
///   theta <- theta - lr * m_hat / (sqrt(v_hat) + eps)
/// Moments are allocated lazily on the first step and matched to params
/// by position, so the parameter list must keep its order between steps.
class Adam {
public:
    explicit Adam(AdamHyper hyper = {}) : hyper_(hyper) {}

    /// Throws InvalidArgument when a gradient does not match its parameter.
    void step(std::span<const ParamRef> params);

    std::uint64_t steps() const noexcept { return step_; }
    const AdamHyper& hyper() const noexcept { return hyper_; }
    const std::vector<Tensor>& first_moments() const noexcept { return m_; }
    const std::vector<Tensor>& second_moments() const noexcept { return v_; }

private:
    AdamHyper hyper_;
    std::uint64_t step_ = 0;
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
};

/// Zero every gradient accumulator.
void zero_grads(std::span<const ParamRef> params);

}  // namespace sentimix::nn
