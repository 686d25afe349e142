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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sentimix/architectures.hpp"
#include "sentimix/corpus_io.hpp"
#include "sentimix/trainer.hpp"

namespace sentimix::cli {

enum ExitCode : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

enum class GoldFormat { Labels, Tsv, Conll };

/// Everything a command needs, validated before any work starts.
struct RunConfig {
    std::string command;

    std::vector<std::filesystem::path> inputs;
    std::optional<std::filesystem::path> val;
    std::optional<std::filesystem::path> test;
    CorpusFormat format = CorpusFormat::Tsv;

    ArchId arch = ArchId::Lstm;
    TrainHyper hyper;
    ModelConfig dims;

    std::optional<std::filesystem::path> english_stoplist;
    std::optional<std::filesystem::path> hindi_stoplist;
    std::size_t hindi_size = kDefaultTfStopListSize;

    std::vector<std::filesystem::path> models;
    std::vector<std::filesystem::path> prob_files;
    std::optional<std::filesystem::path> vocab;
    std::optional<std::filesystem::path> gold;
    GoldFormat gold_format = GoldFormat::Labels;
    std::optional<std::filesystem::path> pred;

    std::optional<std::filesystem::path> out;
    std::size_t jobs = 1;
    bool quiet = false;

    /// Throws InvalidArgument.
    void validate() const;
};

// Files written by `train` into its output directory; `predict` looks for
// them beside the model file unless overridden.
inline constexpr const char* kModelFile = "model.bin";
inline constexpr const char* kVocabFile = "vocab.tsv";
inline constexpr const char* kEnglishStoplistFile = "english_stoplist.txt";
inline constexpr const char* kHindiStoplistFile = "hindi_stoplist.txt";
inline constexpr const char* kHistoryFile = "history.tsv";

/// Log verbosity comes from SENTIMIX_LOG (error, warn, info, debug).
inline constexpr const char* kLogEnv = "SENTIMIX_LOG";

int run_stats(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_preprocess(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_train(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_predict(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_ensemble(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_reproduce(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sentimix::cli
