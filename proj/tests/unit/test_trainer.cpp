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
#include <sstream>

#include "sentimix/ensemble_eval.hpp"
#include "sentimix/error.hpp"
#include "sentimix/trainer.hpp"
#include "support/synthetic.hpp"

using namespace sentimix;

namespace {

std::vector<nn::Tensor> snapshot(const Model& m) {
    std::vector<nn::Tensor> out;
    for (const auto& p : m.params()) out.push_back(*p.value);
    return out;
}

}  // namespace

TEST_SUITE("trainer") {
    TEST_CASE("hyper validation") {
        TrainHyper h;
        CHECK_NOTHROW(h.validate());
        h.epochs = 0;
        CHECK_THROWS_AS(h.validate(), InvalidArgument);
        h = {};
        h.batch_size = 0;
        CHECK_THROWS_AS(h.validate(), InvalidArgument);
        h = {};
        h.learning_rate = -0.1;
        CHECK_THROWS_AS(h.validate(), InvalidArgument);
        h.learning_rate = std::nan("");
        CHECK_THROWS_AS(h.validate(), InvalidArgument);
    }

    TEST_CASE("every architecture overfits a separable toy set") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(32, cfg.seq_len, cfg.vocab_size, 21);
        for (auto a : kAllArchs) {
            CAPTURE(arch_name(a));
            Model m = build_model(a, cfg, 5);
            TrainHyper h;
            h.epochs = 300;
            h.batch_size = 8;
            h.seed = 5;
            const auto hist = train(m, data, {}, h);
            REQUIRE(hist.epochs.size() == 300);
            CHECK(hist.epochs.back().train_accuracy == 1.0);
            CHECK(hist.epochs.back().mean_loss < 0.05);
            const auto probs = predict_proba(m, data);
            const auto labels = argmax_labels(probs);
            for (std::size_t i = 0; i < data.size(); ++i) CHECK(labels[i] == *data[i].label);
        }
    }

    TEST_CASE("first-epoch loss starts near ln 3") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(30, cfg.seq_len, cfg.vocab_size, 8);
        for (auto a : kAllArchs) {
            Model m = build_model(a, cfg, 9);
            TrainHyper h;
            h.epochs = 1;
            h.batch_size = 30;
            h.learning_rate = 0.0;
            const auto hist = train(m, data, {}, h);
            CHECK(std::abs(hist.epochs[0].mean_loss - std::log(3.0)) < 0.15);
        }
    }

    TEST_CASE("zero learning rate leaves parameters untouched") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(10, cfg.seq_len, cfg.vocab_size, 1);
        Model m = build_model(ArchId::BiLstm, cfg, 3);
        const auto before = snapshot(m);
        TrainHyper h;
        h.epochs = 1;
        h.batch_size = 4;
        h.learning_rate = 0.0;
        const auto hist = train(m, data, data, h);
        CHECK(hist.epochs.size() == 1);
        CHECK(hist.epochs[0].val_weighted_f1.has_value());
        CHECK(snapshot(m) == before);
    }

    TEST_CASE("training is deterministic") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(20, cfg.seq_len, cfg.vocab_size, 2);
        const auto val = testing::separable_dataset(6, cfg.seq_len, cfg.vocab_size, 3);
        TrainHyper h;
        h.epochs = 4;
        h.batch_size = 7;  // uneven final batch
        h.seed = 77;
        for (auto a : kAllArchs) {
            Model x = build_model(a, cfg, 77);
            Model y = build_model(a, cfg, 77);
            const auto hx = train(x, data, val, h);
            const auto hy = train(y, data, val, h);
            for (std::size_t e = 0; e < h.epochs; ++e) {
                CHECK(hx.epochs[e].mean_loss == hy.epochs[e].mean_loss);
                CHECK(hx.epochs[e].val_weighted_f1 == hy.epochs[e].val_weighted_f1);
            }
            CHECK(snapshot(x) == snapshot(y));
        }
    }

    TEST_CASE("epoch callback sees each record") {
        const auto cfg = testing::small_config();
        const auto data = testing::separable_dataset(6, cfg.seq_len, cfg.vocab_size, 2);
        Model m = build_model(ArchId::Lstm, cfg, 1);
        TrainHyper h;
        h.epochs = 3;
        std::vector<std::size_t> seen;
        train(m, data, {}, h, [&](const EpochRecord& r) { seen.push_back(r.epoch); });
        CHECK(seen == std::vector<std::size_t>{1, 2, 3});
    }

    TEST_CASE("bad inputs") {
        const auto cfg = testing::small_config();
        auto data = testing::separable_dataset(6, cfg.seq_len, cfg.vocab_size, 2);
        Model m = build_model(ArchId::Cnn, cfg, 1);
        TrainHyper h;
        h.epochs = 1;
        CHECK_THROWS_AS(train(m, {}, {}, h), InvalidArgument);
        data[4].label.reset();
        CHECK_THROWS_AS(train(m, data, {}, h), InvalidArgument);
        CHECK(predict_proba(m, {}).size() == 0);
        // prediction does not need labels
        CHECK(predict_proba(m, data).size() == data.size());
    }

    TEST_CASE("history TSV") {
        TrainHistory hist;
        hist.epochs.push_back({1, 1.0, 0.5, std::nullopt});
        hist.epochs.push_back({2, 0.5, 0.75, 0.25});
        std::ostringstream out;
        hist.write_tsv(out);
        const auto text = out.str();
        CHECK(text.starts_with("epoch\t"));
        std::size_t lines = 0;
        for (char c : text) lines += c == '\n';
        CHECK(lines == 3);
    }
}
