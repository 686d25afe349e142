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

#include "support/synthetic.hpp"

#include "sentimix/nn/random.hpp"

namespace sentimix::testing {

std::vector<IdSequence> separable_dataset(std::size_t n, std::size_t seq_len, std::size_t vocab_size,
                                          std::uint64_t seed) {
    nn::Rng rng(seed);
    std::vector<IdSequence> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto cls = i % kNumClasses;
        IdSequence s;
        s.ids.resize(seq_len);
        for (auto& id : s.ids) id = static_cast<TokenId>(5 + rng.below(vocab_size - 5));
        s.ids[static_cast<std::size_t>(rng.below(seq_len))] = static_cast<TokenId>(2 + cls);
        s.label = from_code(static_cast<int>(cls));
        out.push_back(std::move(s));
    }
    return out;
}

ModelConfig small_config() {
    ModelConfig c;
    c.vocab_size = 20;
    c.seq_len = 8;
    c.embedding_dim = 8;
    c.lstm_units = 8;
    c.conv_filters = 8;
    c.dense_hidden = 8;
    return c;
}

}  // namespace sentimix::testing
