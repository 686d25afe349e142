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
#include <vector>

#include "sentimix/architectures.hpp"
#include "sentimix/vectorizer.hpp"

namespace sentimix::testing {

/// Linearly separable toy task: each sequence carries one marker token
/// (ids 2, 3, 4 for classes 0, 1, 2) among random filler ids >= 5.
std::vector<IdSequence> separable_dataset(std::size_t n, std::size_t seq_len, std::size_t vocab_size,
                                          std::uint64_t seed);

/// Small dims used by the overfit and determinism checks.
ModelConfig small_config();

}  // namespace sentimix::testing
