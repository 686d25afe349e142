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

#include "sentimix/nn/optimizer.hpp"

#include <cmath>

#include "sentimix/error.hpp"
#include "sentimix/nn/kernels.hpp"

namespace sentimix::nn {

void Adam::step(std::span<const ParamRef> params) {
    for (const auto& p : params) {
        if (p.value->shape() != p.grad->shape()) {
            throw InvalidArgument("adam: gradient shape " + p.grad->shape_string() +
                                  " does not match parameter '" + p.name + "' " +
                                  p.value->shape_string());
        }
    }
    if (m_.empty()) {
        for (const auto& p : params) {
            m_.emplace_back(p.value->shape());
            v_.emplace_back(p.value->shape());
        }
    } else if (m_.size() != params.size()) {
        throw InvalidArgument("adam: parameter list changed between steps");
    }

    ++step_;
    const auto t = static_cast<double>(step_);
    kernels::AdamCoefficients coeff;
    coeff.beta1 = hyper_.beta1;
    coeff.beta2 = hyper_.beta2;
    coeff.epsilon = hyper_.epsilon;
    coeff.step_size = hyper_.learning_rate / (1.0 - std::pow(hyper_.beta1, t));
    coeff.second_moment_scale = 1.0 / (1.0 - std::pow(hyper_.beta2, t));

    const auto& k = kernels::active();
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto& value = *params[i].value;
        const auto& grad = *params[i].grad;
        k.adam_update(value.raw(), grad.raw(), m_[i].raw(), v_[i].raw(), value.size(), coeff);
    }
}

void zero_grads(std::span<const ParamRef> params) {
    for (const auto& p : params) {
        p.grad->fill(0.0);
    }
}

}  // namespace sentimix::nn
