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

#include "sentimix/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "sentimix/ensemble_eval.hpp"
#include "sentimix/error.hpp"
#include "sentimix/nn/optimizer.hpp"

namespace sentimix {

void TrainHyper::validate() const {
    if (epochs == 0) throw InvalidArgument("epochs must be >= 1");
    if (batch_size == 0) throw InvalidArgument("batch size must be >= 1");
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
        throw InvalidArgument("learning rate must be a finite value >= 0");
    }
}

void TrainHistory::write_tsv(std::ostream& out) const {
    out << "epoch\tloss\taccuracy\tval_f1\n";
    char buf[128];
    for (const auto& e : epochs) {
        std::snprintf(buf, sizeof(buf), "%zu\t%.10f\t%.10f\t", e.epoch, e.mean_loss, e.train_accuracy);
        out << buf;
        if (e.val_weighted_f1) {
            std::snprintf(buf, sizeof(buf), "%.10f", *e.val_weighted_f1);
            out << buf;
        } else {
            out << "nan";
        }
        out << '\n';
    }
}

std::uint64_t shuffle_seed(std::uint64_t master_seed) noexcept { return master_seed ^ 0x9E3779B97F4A7C15ULL; }

ProbMatrix predict_proba(const Model& model, std::span<const IdSequence> dataset) {
    return forward(model, dataset);
}

TrainHistory train(Model& model, std::span<const IdSequence> train_set, std::span<const IdSequence> val_set,
                   const TrainHyper& hyper, const EpochCallback& on_epoch) {
    hyper.validate();
    if (train_set.empty()) {
        throw InvalidArgument("training set is empty");
    }
    for (std::size_t i = 0; i < train_set.size(); ++i) {
        if (!train_set[i].label) {
            throw InvalidArgument("training example " + std::to_string(i) + " has no label");
        }
    }
    std::vector<Sentiment> val_gold;
    for (std::size_t i = 0; i < val_set.size(); ++i) {
        if (!val_set[i].label) {
            throw InvalidArgument("validation example " + std::to_string(i) + " has no label");
        }
        val_gold.push_back(*val_set[i].label);
    }

    auto params = model.params();
    nn::Adam adam({.learning_rate = hyper.learning_rate});
    nn::Rng order_rng(shuffle_seed(hyper.seed));
    std::vector<std::size_t> order(train_set.size());
    nn::Tensor probs;

    TrainHistory history;
    for (std::size_t epoch = 1; epoch <= hyper.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (hyper.shuffle) {
            order_rng.shuffle(std::span<std::size_t>(order));
        }

        double loss_sum = 0.0;
        std::size_t correct = 0;
        std::size_t batch_index = 0;
        for (std::size_t start = 0; start < order.size(); start += hyper.batch_size, ++batch_index) {
            const std::size_t end = std::min(order.size(), start + hyper.batch_size);
            nn::zero_grads(params);
            double batch_loss = 0.0;
            for (std::size_t k = start; k < end; ++k) {
                const auto& example = train_set[order[k]];
                const auto gold = static_cast<std::size_t>(code(*example.label));
                batch_loss += model.network().accumulate_gradients(example.ids, gold, &probs);
                std::size_t best = 0;
                for (std::size_t c = 1; c < probs.size(); ++c) {
                    if (probs[c] > probs[best]) best = c;
                }
                correct += best == gold ? 1 : 0;
            }
            if (!std::isfinite(batch_loss)) {
                throw NumericError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                                   std::to_string(batch_index + 1));
            }
            loss_sum += batch_loss;
            const double scale = 1.0 / static_cast<double>(end - start);
            for (const auto& p : params) {
                for (auto& g : p.grad->data()) g *= scale;
            }
            adam.step(params);
        }

        EpochRecord record;
        record.epoch = epoch;
        record.mean_loss = loss_sum / static_cast<double>(train_set.size());
        record.train_accuracy = static_cast<double>(correct) / static_cast<double>(train_set.size());
        if (!val_set.empty()) {
            const auto predicted = argmax_labels(predict_proba(model, val_set));
            record.val_weighted_f1 = f1_report(confusion(val_gold, predicted)).weighted_f1;
        }
        history.epochs.push_back(record);
        if (on_epoch) on_epoch(record);
    }
    return history;
}

}  // namespace sentimix
