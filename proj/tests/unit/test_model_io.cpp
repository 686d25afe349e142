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

#include <cstring>
#include <sstream>

#include "sentimix/error.hpp"
#include "sentimix/model_io.hpp"
#include "sentimix/trainer.hpp"
#include "support/synthetic.hpp"

using namespace sentimix;

namespace {

std::string saved(const Model& m) {
    std::ostringstream out;
    save_model(m, out);
    return out.str();
}

Model loaded(const std::string& bytes) {
    std::istringstream in(bytes);
    return load_model(in);
}

std::string load_error(const std::string& bytes) {
    try {
        loaded(bytes);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

void put_u32(std::string& bytes, std::size_t at, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes[at + i] = static_cast<char>((v >> (8 * i)) & 0xFF);
}

}  // namespace

TEST_SUITE("model_io") {
    TEST_CASE("round trip is bitwise") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(10, cfg.seq_len, cfg.vocab_size, 4);
        for (auto a : kAllArchs) {
            CAPTURE(arch_name(a));
            Model m = build_model(a, cfg, 13);
            TrainHyper h;
            h.epochs = 2;
            h.batch_size = 4;
            train(m, data, {}, h);
            m.hashes() = {1, 2, 0xFFFFFFFFu};

            const auto bytes = saved(m);
            const Model back = loaded(bytes);
            CHECK(back.arch() == a);
            CHECK(back.config() == cfg);
            CHECK(back.hashes() == m.hashes());
            const auto pa = m.params();
            const auto pb = back.params();
            REQUIRE(pa.size() == pb.size());
            for (std::size_t i = 0; i < pa.size(); ++i) {
                CHECK(pa[i].name == pb[i].name);
                CHECK(*pa[i].value == *pb[i].value);
            }
            const auto p1 = predict_proba(m, data);
            const auto p2 = predict_proba(back, data);
            for (std::size_t i = 0; i < data.size(); ++i) {
                CHECK(std::memcmp(p1.rows[i].data(), p2.rows[i].data(), sizeof(ClassProbs)) == 0);
            }
            CHECK(saved(back) == bytes);
        }
    }

    TEST_CASE("corrupt files are rejected") {
        const Model m = build_model(ArchId::Lstm, testing::small_config(), 1);
        const auto good = saved(m);

        auto bad_magic = good;
        bad_magic[0] = 'X';
        CHECK(load_error(bad_magic).find("bad magic") != std::string::npos);

        auto bad_version = good;
        put_u32(bad_version, 8, 99);
        CHECK(load_error(bad_version).find("unsupported version") != std::string::npos);

        const auto truncated = good.substr(0, good.size() / 2);
        CHECK(load_error(truncated).find("checksum") != std::string::npos);

        auto flipped = good;
        flipped[good.size() / 2] ^= 0x10;
        CHECK(load_error(flipped).find("checksum mismatch") != std::string::npos);

        CHECK_FALSE(load_error(good + "x").empty());
        CHECK_FALSE(load_error("").empty());
    }

    TEST_CASE("missing file") {
        CHECK_THROWS_AS(load_model(std::filesystem::path("/nonexistent/model.bin")), IoError);
    }

    TEST_CASE("crc32 reference values") {
        CHECK(crc32_of("") == 0u);
        CHECK(crc32_of("123456789") == 0xCBF43926u);
    }
}
