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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "sentimix/nn/kernels.hpp"
#include "sentimix/nn/random.hpp"

using namespace sentimix::nn;

namespace {

std::vector<double> random_vec(Rng& r, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = r.uniform(-2.0, 2.0);
    return v;
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("scalar reference values") {
        const auto& k = kernels::scalar_table();
        const std::vector<double> a = {1, 2, 3};
        const std::vector<double> b = {4, 5, 6};
        CHECK(k.dot(a.data(), b.data(), 3) == 32.0);
        std::vector<double> y = {1, 1, 1};
        k.axpy(2.0, a.data(), y.data(), 3);
        CHECK(y == std::vector<double>{3, 5, 7});
        CHECK(k.dot(a.data(), b.data(), 0) == 0.0);
    }

    TEST_CASE("avx2 variant matches the scalar reference") {
        const auto* simd = kernels::avx2_table();
        if (simd == nullptr) {
            MESSAGE("AVX2 not available on this machine; equivalence not exercised");
            return;
        }
        const auto& ref = kernels::scalar_table();
        Rng r(17);
        for (std::size_t n = 0; n < 70; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto a = random_vec(r, n);
                const auto b = random_vec(r, n);
                // FMA contraction changes rounding only.
                double mag = 0;
                for (std::size_t i = 0; i < n; ++i) mag += std::abs(a[i] * b[i]);
                CHECK(std::abs(simd->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <=
                      1e-14 * (mag + 1.0));

                auto y1 = random_vec(r, n);
                auto y2 = y1;
                simd->axpy(0.37, a.data(), y1.data(), n);
                ref.axpy(0.37, a.data(), y2.data(), n);
                CHECK(y1 == y2);

                auto p1 = random_vec(r, n);
                auto p2 = p1;
                auto m1 = random_vec(r, n);
                auto m2 = m1;
                std::vector<double> v1(n);
                for (auto& x : v1) x = r.uniform(0.0, 1.0);
                auto v2 = v1;
                kernels::AdamCoefficients c;
                c.step_size = 0.01 / (1 - 0.9 * 0.9);
                c.second_moment_scale = 1.0 / (1 - 0.999 * 0.999);
                simd->adam_update(p1.data(), b.data(), m1.data(), v1.data(), n, c);
                ref.adam_update(p2.data(), b.data(), m2.data(), v2.data(), n, c);
                CHECK(p1 == p2);
                CHECK(m1 == m2);
                CHECK(v1 == v2);
            }
        }
    }

    TEST_CASE("selection") {
        CHECK(kernels::select(kernels::Isa::Scalar));
        CHECK(kernels::active().name == kernels::scalar_table().name);
        if (kernels::avx2_table() != nullptr) {
            CHECK(kernels::select(kernels::Isa::Avx2));
            CHECK(kernels::active().name == kernels::avx2_table()->name);
        } else {
            CHECK_FALSE(kernels::select(kernels::Isa::Avx2));
        }
        kernels::select(kernels::avx2_table() ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
    }

    TEST_CASE("gemv helpers") {
        const std::vector<double> w = {1, 2, 3, 4, 5, 6};  // 2 x 3
        const std::vector<double> x = {1, 0, -1};
        std::vector<double> y(2);
        kernels::gemv(w, 2, 3, x, y);
        CHECK(y == std::vector<double>{-2, -2});

        const std::vector<double> g = {1, 2};
        std::vector<double> xg(3, 0.0);
        kernels::gemv_transpose_acc(w, 2, 3, g, xg);
        CHECK(xg == std::vector<double>{9, 12, 15});

        std::vector<double> wg(6, 0.0);
        kernels::outer_acc(g, x, wg);
        CHECK(wg == std::vector<double>{1, 0, -1, 2, 0, -2});
    }
}
