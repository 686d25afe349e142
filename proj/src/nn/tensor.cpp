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

#include "sentimix/nn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sentimix/error.hpp"

namespace sentimix::nn {
namespace {

std::size_t checked_volume(const std::vector<std::size_t>& shape) {
    if (shape.empty()) {
        throw InvalidArgument("tensor shape must have at least one axis");
    }
    std::size_t n = 1;
    for (auto d : shape) {
        if (d == 0) {
            throw InvalidArgument("tensor shape entries must be >= 1");
        }
        n *= d;
    }
    return n;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), data_(checked_volume(shape_), fill) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_volume(shape_) != data_.size()) {
        throw InvalidArgument("tensor data length " + std::to_string(data_.size()) +
                              " does not match shape " + shape_string());
    }
}

Tensor Tensor::vector(std::initializer_list<double> values) {
    return Tensor({values.size()}, std::vector<double>(values));
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values) {
    return Tensor({rows, cols}, std::vector<double>(values));
}

std::span<double> Tensor::row(std::size_t r) {
    const std::size_t width = data_.size() / shape_.at(0);
    return std::span<double>(data_).subspan(r * width, width);
}

std::span<const double> Tensor::row(std::size_t r) const {
    const std::size_t width = data_.size() / shape_.at(0);
    return std::span<const double>(data_).subspan(r * width, width);
}

void Tensor::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

bool Tensor::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

void Tensor::check_finite(const std::string& what) const {
    if (!all_finite()) {
        throw NumericError(what + ": non-finite value in tensor of shape " + shape_string());
    }
}

std::string Tensor::shape_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(shape_[i]);
    }
    return s + "]";
}

void expect_shape(const Tensor& t, const std::vector<std::size_t>& expected, const char* what) {
    if (t.shape() != expected) {
        Tensor probe(expected);
        throw InvalidArgument(std::string(what) + ": expected shape " + probe.shape_string() +
                              ", got " + t.shape_string());
    }
}

}  // namespace sentimix::nn
