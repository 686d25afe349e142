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

#include "sentimix/ensemble_eval.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "sentimix/error.hpp"

namespace sentimix {
namespace {

Sentiment argmax(const ClassProbs& row) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < kNumClasses; ++j) {
        if (row[j] > row[best]) best = j;
    }
    return from_code(static_cast<int>(best));
}

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::vector<Sentiment> combine(std::span<const ProbMatrix> matrices) {
    if (matrices.empty()) {
        throw InvalidArgument("combine: no probability matrices");
    }
    const std::size_t rows = matrices.front().size();
    for (const auto& m : matrices) {
        if (m.size() != rows) {
            throw InvalidArgument("combine: row count mismatch (" + std::to_string(m.size()) + " vs " +
                                  std::to_string(rows) + ")");
        }
    }
    std::vector<Sentiment> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        ClassProbs best = matrices.front().rows[i];
        for (const auto& m : matrices.subspan(1)) {
            for (std::size_t j = 0; j < kNumClasses; ++j) {
                best[j] = std::max(best[j], m.rows[i][j]);
            }
        }
        out.push_back(argmax(best));
    }
    return out;
}

std::vector<Sentiment> argmax_labels(const ProbMatrix& probs) {
    std::vector<Sentiment> out;
    out.reserve(probs.size());
    for (const auto& row : probs.rows) out.push_back(argmax(row));
    return out;
}

std::size_t ConfusionMatrix::total() const noexcept {
    std::size_t n = 0;
    for (const auto& row : counts) {
        for (auto c : row) n += c;
    }
    return n;
}

ConfusionMatrix confusion(std::span<const Sentiment> gold, std::span<const Sentiment> predicted) {
    if (gold.size() != predicted.size()) {
        throw InvalidArgument("confusion: " + std::to_string(gold.size()) + " gold labels but " +
                              std::to_string(predicted.size()) + " predictions");
    }
    if (gold.empty()) {
        throw InvalidArgument("confusion: no labels");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        ++cm.counts[static_cast<std::size_t>(code(gold[i]))][static_cast<std::size_t>(code(predicted[i]))];
    }
    return cm;
}

MetricsReport f1_report(const ConfusionMatrix& cm) {
    const std::size_t total = cm.total();
    if (total == 0) {
        throw InvalidArgument("f1_report: empty confusion matrix");
    }
    MetricsReport r;
    std::size_t correct = 0;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        const std::size_t tp = cm.counts[c][c];
        std::size_t predicted = 0;
        std::size_t actual = 0;
        for (std::size_t k = 0; k < kNumClasses; ++k) {
            predicted += cm.counts[k][c];
            actual += cm.counts[c][k];
        }
        r.precision[c] = ratio(tp, predicted);
        r.recall[c] = ratio(tp, actual);
        const double pr = r.precision[c] + r.recall[c];
        r.f1[c] = pr == 0.0 ? 0.0 : 2.0 * r.precision[c] * r.recall[c] / pr;
        r.support[c] = actual;
        correct += tp;
    }
    double macro = 0.0;
    double weighted = 0.0;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        macro += r.f1[c];
        weighted += r.f1[c] * static_cast<double>(r.support[c]);
    }
    r.macro_f1 = macro / static_cast<double>(kNumClasses);
    r.weighted_f1 = weighted / static_cast<double>(total);
    r.accuracy = ratio(correct, total);
    return r;
}

void print_report(const MetricsReport& r, std::ostream& out) {
    out << "class       precision  recall     f1         support\n";
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        std::string name(to_string(from_code(static_cast<int>(c))));
        name.resize(12, ' ');
        out << name << fixed(r.precision[c]) << "     " << fixed(r.recall[c]) << "     " << fixed(r.f1[c])
            << "     " << r.support[c] << '\n';
    }
    out << "\naccuracy     " << fixed(r.accuracy) << '\n'
        << "macro f1     " << fixed(r.macro_f1) << '\n'
        << "weighted f1  " << fixed(r.weighted_f1) << '\n';
}

void write_report_tsv(const MetricsReport& r, std::ostream& out) {
    auto line = [&](std::string_view metric, std::string_view cls, double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << metric << '\t' << cls << '\t' << buf << '\n';
    };
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        const auto cls = to_string(from_code(static_cast<int>(c)));
        line("precision", cls, r.precision[c]);
        line("recall", cls, r.recall[c]);
        line("f1", cls, r.f1[c]);
        line("support", cls, static_cast<double>(r.support[c]));
    }
    line("accuracy", "all", r.accuracy);
    line("macro_f1", "all", r.macro_f1);
    line("weighted_f1", "all", r.weighted_f1);
}

}  // namespace sentimix
