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

#include "sentimix/nn/random.hpp"

#include <cmath>
#include <limits>

#include "sentimix/error.hpp"

namespace sentimix::nn {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw InvalidArgument("Rng::below: empty range");
    }
    // Largest multiple of n that fits; draws above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = 0;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

void glorot_uniform(Tensor& t, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    uniform_fill(t, -limit, limit, rng);
}

void uniform_fill(Tensor& t, double lo, double hi, Rng& rng) {
    for (auto& x : t.data()) {
        x = rng.uniform(lo, hi);
    }
}

}  // namespace sentimix::nn
