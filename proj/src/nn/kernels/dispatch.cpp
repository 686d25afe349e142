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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "sentimix/nn/kernels.hpp"

namespace sentimix::nn::kernels {

#if defined(SENTIMIX_HAVE_AVX2)
const KernelTable& avx2_table_unchecked() noexcept;
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(SENTIMIX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* initial_table() noexcept {
    const char* env = std::getenv("SENTIMIX_KERNELS");
    const std::string_view want = env ? env : "auto";
    if (want == "scalar") {
        return &scalar_table();
    }
    if (const auto* simd = avx2_table()) {
        return simd;
    }
    return &scalar_table();
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

const KernelTable* avx2_table() noexcept {
#if defined(SENTIMIX_HAVE_AVX2)
    static const bool available = cpu_has_avx2();
    return available ? &avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    const KernelTable* table = isa == Isa::Scalar ? &scalar_table() : avx2_table();
    if (table == nullptr) {
        return false;
    }
    current().store(table, std::memory_order_relaxed);
    return true;
}

void gemv(std::span<const double> w, std::size_t rows, std::size_t cols, std::span<const double> x,
          std::span<double> y) {
    const auto& k = active();
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = k.dot(w.data() + r * cols, x.data(), cols);
    }
}

void gemv_transpose_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                        std::span<const double> g, std::span<double> x_grad) {
    const auto& k = active();
    for (std::size_t r = 0; r < rows; ++r) {
        if (g[r] != 0.0) {
            k.axpy(g[r], w.data() + r * cols, x_grad.data(), cols);
        }
    }
}

void outer_acc(std::span<const double> g, std::span<const double> x, std::span<double> w_grad) {
    const auto& k = active();
    const std::size_t cols = x.size();
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r] != 0.0) {
            k.axpy(g[r], x.data(), w_grad.data() + r * cols, cols);
        }
    }
}

}  // namespace sentimix::nn::kernels
