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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "sentimix/cli.hpp"
#include "sentimix/prob_matrix.hpp"

namespace fs = std::filesystem;
using namespace sentimix;

namespace {

const fs::path kFixtures = SENTIMIX_FIXTURE_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("sentimix_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string fixture(const char* name) { return (kFixtures / name).string(); }

std::vector<std::string> small_train(const std::string& out, const std::string& arch = "lstm") {
    return {"train",          "--input",        fixture("tiny_train.tsv"), "--val",        fixture("tiny_val.tsv"),
            "--test",         fixture("tiny_test.tsv"), "--arch", arch,   "--epochs",     "3",
            "--batch-size",   "8",              "--seed",          "4",   "--vocab-size", "120",
            "--seq-len",      "12",             "--embedding-dim", "6",   "--lstm-units", "5",
            "--conv-filters", "4",              "--dense-hidden",  "4",   "--hindi-size", "5",
            "--out",          out,              "--quiet"};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors exit 2") {
        CHECK(run({}).code == cli::kUsageError);
        CHECK(run({"bogus"}).code == cli::kUsageError);
        CHECK(run({"stats"}).code == cli::kUsageError);
        CHECK(run({"stats", "--input", "/nonexistent/x.tsv"}).code == cli::kUsageError);
        CHECK(run({"train", "--input", fixture("tiny_train.tsv"), "--arch", "gru", "--out", "/tmp/x"}).code ==
              cli::kUsageError);
        CHECK(run({"train", "--input", fixture("tiny_train.tsv"), "--epochs", "0", "--out", "/tmp/x"}).code ==
              cli::kUsageError);
        CHECK(run({"--help"}).code == cli::kSuccess);
    }

    TEST_CASE("stats") {
        const auto r = run({"stats", "--input", fixture("tiny_train.tsv"), "--input", fixture("tiny_val.tsv")});
        REQUIRE(r.code == 0);
        CHECK(r.out.starts_with("split\tsentences\tavg_chars\tvocab\twords\n"));
        CHECK(r.out.find("total\t63\t") != std::string::npos);
    }

    TEST_CASE("empty corpus is a data error") {
        TempDir dir;
        spit(dir.path() / "empty.tsv", "");
        const auto r = run({"stats", "--input", dir / "empty.tsv"});
        CHECK(r.code == cli::kDataError);
        CHECK(r.err.find("empty") != std::string::npos);
    }

    TEST_CASE("preprocess writes one row per tweet") {
        TempDir dir;
        const auto r = run({"preprocess", "--input", fixture("tiny_val.tsv"), "--hindi-size", "3", "--out",
                            dir / "val.tok.tsv", "--quiet"});
        REQUIRE(r.code == 0);
        CHECK(count_lines(slurp(dir.path() / "val.tok.tsv")) == 15);
        CHECK(fs::exists(dir.path() / "val.tok.tsv.hindi_stoplist.txt"));
    }

    TEST_CASE("train, predict, ensemble, evaluate") {
        TempDir dir;
        const auto a = dir / "a";
        const auto b = dir / "b";
        REQUIRE(run(small_train(a, "lstm")).code == 0);
        REQUIRE(run(small_train(b, "cnn")).code == 0);
        for (const char* f : {cli::kModelFile, cli::kVocabFile, cli::kEnglishStoplistFile, cli::kHindiStoplistFile,
                              cli::kHistoryFile}) {
            CHECK(fs::exists(fs::path(a) / f));
        }
        CHECK(count_lines(slurp(fs::path(a) / cli::kHistoryFile)) == 4);

        const auto predict = [&](const std::string& model_dir, const std::string& out) {
            return run({"predict", "--model", model_dir + "/" + cli::kModelFile, "--input", fixture("tiny_test.tsv"),
                        "--out", out, "--quiet"});
        };
        REQUIRE(predict(a, dir / "a.probs").code == 0);
        REQUIRE(predict(b, dir / "b.probs").code == 0);
        REQUIRE(predict(a, dir / "a2.probs").code == 0);
        CHECK(slurp(dir / "a.probs") == slurp(dir / "a2.probs"));

        std::istringstream probs_in(slurp(dir / "a.probs"));
        const auto probs = read_prob_file(probs_in);
        REQUIRE(probs.probs.size() == 15);
        for (const auto& row : probs.probs.rows) CHECK(std::abs(row[0] + row[1] + row[2] - 1.0) <= 1e-6);
        CHECK(probs.ids.front() == "3000");

        REQUIRE(run({"ensemble", "--probs", dir / "a.probs", "--probs", dir / "b.probs", "--out", dir / "pred.tsv",
                     "--quiet"})
                    .code == 0);
        CHECK(count_lines(slurp(dir / "pred.tsv")) == 15);

        const auto ev = run({"evaluate", "--gold", fixture("tiny_test.tsv"), "--gold-format", "tsv", "--pred",
                             dir / "pred.tsv", "--out", dir / "report.tsv", "--quiet"});
        CHECK(ev.code == 0);
        CHECK(slurp(dir / "report.tsv").find("weighted_f1\tall\t") != std::string::npos);

        // a prediction file scored against itself is perfect
        const auto self = run({"evaluate", "--gold", dir / "pred.tsv", "--pred", dir / "pred.tsv", "--out",
                               dir / "self.tsv", "--quiet"});
        CHECK(self.code == 0);
        CHECK(slurp(dir / "self.tsv").find("accuracy\tall\t1\n") != std::string::npos);
    }

    TEST_CASE("artifact and alignment mismatches are data errors") {
        TempDir dir;
        const auto a = dir / "a";
        REQUIRE(run(small_train(a)).code == 0);

        spit(dir.path() / "other_vocab.tsv", "<PAD>\t0\n<OOV>\t1\nkya\t2\n");
        const auto swapped = run({"predict", "--model", a + "/" + cli::kModelFile, "--vocab",
                                  dir / "other_vocab.tsv", "--input", fixture("tiny_test.tsv"), "--out",
                                  dir / "x.probs", "--quiet"});
        CHECK(swapped.code == cli::kDataError);
        CHECK(swapped.err.find("hash") != std::string::npos);

        spit(dir.path() / "p1.probs", "1\t0.2\t0.3\t0.5\n2\t0.1\t0.1\t0.8\n");
        spit(dir.path() / "p2.probs", "1\t0.2\t0.3\t0.5\n");
        CHECK(run({"ensemble", "--probs", dir / "p1.probs", "--probs", dir / "p2.probs", "--out", dir / "e.tsv",
                   "--quiet"})
                  .code == cli::kDataError);

        spit(dir.path() / "gold.tsv", "1\tpositive\n2\tnegative\n");
        spit(dir.path() / "pred.tsv", "1\tpositive\n9\tnegative\n");
        const auto ev = run({"evaluate", "--gold", dir / "gold.tsv", "--pred", dir / "pred.tsv", "--quiet"});
        CHECK(ev.code == cli::kDataError);
        CHECK(ev.err.find("'9'") != std::string::npos);

        spit(dir.path() / "model.bin", "garbage");
        CHECK(run({"predict", "--model", dir / "model.bin", "--vocab", a + "/" + cli::kVocabFile, "--input",
                   fixture("tiny_test.tsv"), "--out", dir / "y.probs", "--quiet"})
                  .code == cli::kDataError);
    }

    TEST_CASE("training twice gives identical model bytes") {
        TempDir dir;
        REQUIRE(run(small_train(dir / "x", "bilstm")).code == 0);
        REQUIRE(run(small_train(dir / "y", "bilstm")).code == 0);
        CHECK(slurp(dir.path() / "x" / cli::kModelFile) == slurp(dir.path() / "y" / cli::kModelFile));
    }

    TEST_CASE("installed binary") {
        TempDir dir;
        const std::string cmd = std::string("\"") + SENTIMIX_CLI_PATH + "\" stats --input \"" +
                                fixture("tiny_train.tsv") + "\" > \"" + (dir / "stats.txt") + "\"";
        CHECK(std::system(cmd.c_str()) == 0);
        CHECK(slurp(dir / "stats.txt").find("\t48\t") != std::string::npos);
        const std::string missing = std::string("\"") + SENTIMIX_CLI_PATH +
                                    "\" stats --input /nonexistent/file.tsv 2>/dev/null";
        const int status = std::system(missing.c_str());
        CHECK(WEXITSTATUS(status) == 2);
    }
}
