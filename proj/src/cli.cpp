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

#include "sentimix/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sentimix/ensemble_eval.hpp"
#include "sentimix/error.hpp"
#include "sentimix/model_io.hpp"
#include "sentimix/preprocess.hpp"
#include "sentimix/prob_matrix.hpp"
#include "sentimix/vectorizer.hpp"

namespace sentimix::cli {
namespace fs = std::filesystem;

namespace {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

class Log {
public:
    Log(std::ostream& err, bool quiet) : err_(err), level_(quiet ? Level::Error : from_env()) {}

    template <typename... Args>
    void write(Level level, const Args&... args) {
        if (level > level_) return;
        std::ostringstream line;
        (line << ... << args);
        std::lock_guard lock(mu_);
        err_ << line.str() << '\n';
    }

private:
    static Level from_env() {
        const char* v = std::getenv(kLogEnv);
        if (v == nullptr) return Level::Info;
        const std::string s(v);
        if (s == "error" || s == "quiet") return Level::Error;
        if (s == "warn") return Level::Warn;
        if (s == "debug") return Level::Debug;
        return Level::Info;
    }

    std::ostream& err_;
    Level level_;
    std::mutex mu_;
};

void require_file(const fs::path& p) {
    if (!fs::is_regular_file(p)) {
        throw IoError("no such file '" + p.string() + "'");
    }
}

void write_file(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !f.write(contents.data(), static_cast<std::streamsize>(contents.size()))) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

std::string read_file(const fs::path& path) {
    require_file(path);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    if (!f && !f.eof()) throw IoError("cannot read '" + path.string() + "'");
    return s.str();
}

template <typename T>
std::string serialize(const T& artifact) {
    std::ostringstream s;
    artifact.save(s);
    return s.str();
}

std::vector<RawTweet> load_corpus(const fs::path& path, CorpusFormat format) {
    require_file(path);
    return read_corpus(path, format);
}

StopList load_stoplist(const fs::path& path, StopList::Source source) {
    require_file(path);
    return StopList::load(path, source);
}

StopList english_stoplist(const RunConfig& c) {
    return c.english_stoplist ? load_stoplist(*c.english_stoplist, StopList::Source::File)
                              : StopList::bundled_english();
}

std::vector<std::string> ids_of(std::span<const RawTweet> corpus) {
    std::vector<std::string> ids;
    ids.reserve(corpus.size());
    for (const auto& t : corpus) ids.push_back(t.id);
    return ids;
}

// Stop-lists, vocabulary and encoded splits shared by `train` and `reproduce`.
struct Prepared {
    StopList english;
    StopList hindi;
    Vocabulary vocab;
    std::vector<IdSequence> train;
    std::vector<IdSequence> val;
    std::vector<RawTweet> test_raw;
    std::vector<IdSequence> test;
    ArtifactHashes hashes;
};

Prepared prepare(const RunConfig& c, Log& log) {
    Prepared p;
    p.english = english_stoplist(c);

    const auto train_raw = load_corpus(c.inputs.front(), c.format);
    const auto val_raw = c.val ? load_corpus(*c.val, c.format) : std::vector<RawTweet>{};
    p.test_raw = c.test ? load_corpus(*c.test, c.format) : std::vector<RawTweet>{};
    log.write(Level::Info, "read ", train_raw.size(), " train, ", val_raw.size(), " validation, ",
              p.test_raw.size(), " test tweets");

    std::array<std::vector<TokenizedTweet>, 3> splits = {
        clean_and_stem(train_raw, p.english),
        clean_and_stem(val_raw, p.english),
        clean_and_stem(p.test_raw, p.english),
    };
    if (c.hindi_stoplist) {
        p.hindi = load_stoplist(*c.hindi_stoplist, StopList::Source::File);
    } else {
        p.hindi = build_tf_stoplist(splits, c.hindi_size);
        log.write(Level::Info, "built TF stop-list of ", p.hindi.size(), " words");
    }
    for (auto& s : splits) apply_stoplist(s, p.hindi);

    p.vocab = Vocabulary::build(splits[0], c.dims.vocab_size);
    log.write(Level::Info, "vocabulary has ", p.vocab.size(), " entries");
    p.train = encode_all(splits[0], p.vocab, c.dims.seq_len);
    p.val = encode_all(splits[1], p.vocab, c.dims.seq_len);
    p.test = encode_all(splits[2], p.vocab, c.dims.seq_len);

    p.hashes.vocabulary = crc32_of(serialize(p.vocab));
    p.hashes.english_stoplist = crc32_of(serialize(p.english));
    p.hashes.hindi_stoplist = crc32_of(serialize(p.hindi));
    return p;
}

void write_artifacts(const fs::path& dir, const Prepared& p, const Model& model, const TrainHistory& history) {
    fs::create_directories(dir);
    std::ostringstream m;
    save_model(model, m);
    write_file(dir / kModelFile, m.str());
    write_file(dir / kVocabFile, serialize(p.vocab));
    write_file(dir / kEnglishStoplistFile, serialize(p.english));
    write_file(dir / kHindiStoplistFile, serialize(p.hindi));
    std::ostringstream h;
    history.write_tsv(h);
    write_file(dir / kHistoryFile, h.str());
}

TrainHistory train_one(Model& model, const Prepared& p, const TrainHyper& hyper, Log& log) {
    const auto tag = std::string(arch_name(model.arch()));
    return train(model, p.train, p.val, hyper, [&](const EpochRecord& r) {
        std::ostringstream line;
        line << std::fixed << std::setprecision(4) << tag << " epoch " << r.epoch << '/' << hyper.epochs
             << " loss " << r.mean_loss << " acc " << r.train_accuracy;
        if (r.val_weighted_f1) line << " val_f1 " << *r.val_weighted_f1;
        log.write(Level::Info, line.str());
    });
}

// Loads a model plus the artifacts it was trained with, checking hashes.
struct LoadedModel {
    Model model;
    StopList english;
    StopList hindi;
    Vocabulary vocab;
};

LoadedModel load_with_artifacts(const fs::path& model_path, const RunConfig& c, bool allow_overrides) {
    require_file(model_path);
    const fs::path dir = model_path.parent_path();
    const fs::path vocab_path = allow_overrides && c.vocab ? *c.vocab : dir / kVocabFile;
    const fs::path en_path =
        allow_overrides && c.english_stoplist ? *c.english_stoplist : dir / kEnglishStoplistFile;
    const fs::path hi_path = allow_overrides && c.hindi_stoplist ? *c.hindi_stoplist : dir / kHindiStoplistFile;

    Model model = load_model(model_path);
    const std::string vocab_text = read_file(vocab_path);
    std::istringstream vs(vocab_text);
    Vocabulary vocab = Vocabulary::load(vs);
    StopList english = load_stoplist(en_path, StopList::Source::File);
    StopList hindi = load_stoplist(hi_path, StopList::Source::File);

    const auto check = [&](const char* what, const fs::path& path, std::uint32_t expected, std::uint32_t actual) {
        if (expected != actual) {
            std::ostringstream msg;
            msg << what << " '" << path.string() << "' does not match model '" << model_path.string()
                << "' (hash " << std::hex << actual << ", model expects " << expected << ")";
            throw ParseError(msg.str());
        }
    };
    check("vocabulary", vocab_path, model.hashes().vocabulary, crc32_of(serialize(vocab)));
    check("english stop-list", en_path, model.hashes().english_stoplist, crc32_of(serialize(english)));
    check("hindi stop-list", hi_path, model.hashes().hindi_stoplist, crc32_of(serialize(hindi)));
    return {std::move(model), std::move(english), std::move(hindi), std::move(vocab)};
}

ProbMatrix predict_corpus(const LoadedModel& m, std::span<const RawTweet> corpus) {
    const auto tokens = run_pipeline(corpus, m.english, m.hindi);
    const auto ids = encode_all(tokens, m.vocab, m.model.config().seq_len);
    auto probs = predict_proba(m.model, ids);
    probs.model_tag = std::string(arch_name(m.model.arch()));
    return probs;
}

std::string prob_file_text(const std::vector<std::string>& ids, const ProbMatrix& probs) {
    std::ostringstream s;
    write_prob_file(ids, probs, s);
    return s.str();
}

std::string predictions_text(std::span<const std::string> ids, std::span<const Sentiment> labels) {
    std::ostringstream s;
    write_predictions(ids, labels, s);
    return s.str();
}

std::string stats_row(const std::string& name, const CorpusStats& s) {
    std::ostringstream row;
    row << name << '\t' << s.sentence_count << '\t' << std::fixed << std::setprecision(4) << s.avg_char_length
        << '\t' << s.vocab_size << '\t' << s.word_count << '\n';
    return row.str();
}

std::vector<LabeledId> read_gold(const RunConfig& c) {
    require_file(*c.gold);
    if (c.gold_format == GoldFormat::Labels) {
        std::ifstream in(*c.gold);
        return read_predictions(in);
    }
    const auto corpus = read_corpus(*c.gold, c.gold_format == GoldFormat::Tsv ? CorpusFormat::Tsv : CorpusFormat::Conll);
    std::vector<LabeledId> out;
    for (const auto& t : corpus) {
        if (!t.label) throw ParseError("gold tweet '" + t.id + "' has no label");
        out.push_back({t.id, *t.label});
    }
    return out;
}

MetricsReport evaluate_aligned(const std::vector<LabeledId>& gold, const std::vector<LabeledId>& pred) {
    std::unordered_map<std::string, Sentiment> gold_by_id;
    for (const auto& g : gold) gold_by_id.emplace(g.id, g.label);
    std::vector<Sentiment> g_labels;
    std::vector<Sentiment> p_labels;
    for (const auto& p : pred) {
        const auto it = gold_by_id.find(p.id);
        if (it == gold_by_id.end()) {
            throw ParseError("predicted id '" + p.id + "' is not in the gold file");
        }
        g_labels.push_back(it->second);
        p_labels.push_back(p.label);
    }
    if (pred.size() != gold.size()) {
        std::unordered_map<std::string, bool> have;
        for (const auto& p : pred) have.emplace(p.id, true);
        for (const auto& g : gold) {
            if (!have.contains(g.id)) throw ParseError("gold id '" + g.id + "' has no prediction");
        }
    }
    return f1_report(confusion(g_labels, p_labels));
}

std::string report_tsv(const MetricsReport& r) {
    std::ostringstream s;
    write_report_tsv(r, s);
    return s.str();
}

template <typename Fn>
int guarded(const RunConfig& c, std::ostream& err, Fn&& work) {
    try {
        c.validate();
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    try {
        work();
        return kSuccess;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace

void RunConfig::validate() const {
    const auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw InvalidArgument(command + ": " + what);
    };
    if (command == "stats" || command == "preprocess" || command == "train" || command == "reproduce") {
        need(!inputs.empty(), "--input is required");
    }
    if (command == "train" || command == "reproduce") {
        need(inputs.size() == 1, "exactly one --input is expected");
        hyper.validate();
        if (command == "train") {
            dims.validate(arch);
        } else {
            for (auto a : kAllArchs) dims.validate(a);
        }
        need(hindi_size > 0, "--hindi-size must be >= 1");
        need(out.has_value(), "--out directory is required");
    }
    if (command == "reproduce") {
        need(test.has_value(), "--test is required");
        need(jobs > 0, "--jobs must be >= 1");
    }
    if (command == "preprocess") {
        need(inputs.size() == 1, "exactly one --input is expected");
        need(out.has_value(), "--out is required");
        need(hindi_size > 0, "--hindi-size must be >= 1");
    }
    if (command == "predict") {
        need(models.size() == 1, "exactly one --model is expected");
        need(inputs.size() == 1, "exactly one --input is expected");
        need(out.has_value(), "--out is required");
    }
    if (command == "ensemble") {
        need(!models.empty() || !prob_files.empty(), "at least one --probs or --model is required");
        need(models.empty() || inputs.size() == 1, "--model requires exactly one --input");
        need(out.has_value(), "--out is required");
    }
    if (command == "evaluate") {
        need(gold.has_value() && pred.has_value(), "--gold and --pred are required");
    }
}

int run_stats(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(c, err, [&] {
        std::ostringstream table;
        table << "split\tsentences\tavg_chars\tvocab\twords\n";
        std::vector<RawTweet> all;
        for (const auto& path : c.inputs) {
            auto corpus = load_corpus(path, c.format);
            table << stats_row(path.filename().string(), corpus_stats(corpus));
            all.insert(all.end(), std::make_move_iterator(corpus.begin()), std::make_move_iterator(corpus.end()));
        }
        if (c.inputs.size() > 1) table << stats_row("total", corpus_stats(all));
        if (c.out) write_file(*c.out, table.str());
        out << table.str();
    });
}

int run_preprocess(const RunConfig& c, std::ostream& /*out*/, std::ostream& err) {
    Log log(err, c.quiet);
    return guarded(c, err, [&] {
        const auto corpus = load_corpus(c.inputs.front(), c.format);
        const auto english = english_stoplist(c);
        auto tweets = clean_and_stem(corpus, english);
        StopList hindi = c.hindi_stoplist
                             ? load_stoplist(*c.hindi_stoplist, StopList::Source::File)
                             : build_tf_stoplist(std::span<const std::vector<TokenizedTweet>>(&tweets, 1),
                                                 c.hindi_size);
        apply_stoplist(tweets, hindi);
        std::ostringstream s;
        for (const auto& t : tweets) {
            s << t.id << '\t';
            for (std::size_t i = 0; i < t.tokens.size(); ++i) s << (i ? " " : "") << t.tokens[i];
            if (t.label) s << '\t' << to_string(*t.label);
            s << '\n';
        }
        write_file(*c.out, s.str());
        if (!c.hindi_stoplist) {
            fs::path stop_path = *c.out;
            stop_path += ".hindi_stoplist.txt";
            write_file(stop_path, serialize(hindi));
        }
        log.write(Level::Info, "wrote ", tweets.size(), " tweets to ", c.out->string());
    });
}

int run_train(const RunConfig& c, std::ostream& /*out*/, std::ostream& err) {
    Log log(err, c.quiet);
    return guarded(c, err, [&] {
        const Prepared p = prepare(c, log);
        Model model = build_model(c.arch, c.dims, c.hyper.seed);
        model.hashes() = p.hashes;
        const auto history = train_one(model, p, c.hyper, log);
        write_artifacts(*c.out, p, model, history);
        log.write(Level::Info, "wrote model to ", (*c.out / kModelFile).string());
    });
}

int run_predict(const RunConfig& c, std::ostream& /*out*/, std::ostream& err) {
    Log log(err, c.quiet);
    return guarded(c, err, [&] {
        const auto loaded = load_with_artifacts(c.models.front(), c, true);
        const auto corpus = load_corpus(c.inputs.front(), c.format);
        const auto probs = predict_corpus(loaded, corpus);
        write_file(*c.out, prob_file_text(ids_of(corpus), probs));
        log.write(Level::Info, "wrote ", probs.size(), " probability rows to ", c.out->string());
    });
}

int run_ensemble(const RunConfig& c, std::ostream& /*out*/, std::ostream& err) {
    Log log(err, c.quiet);
    return guarded(c, err, [&] {
        std::vector<std::string> ids;
        std::vector<ProbMatrix> matrices;
        std::string first_source;
        const auto add = [&](std::vector<std::string> src_ids, ProbMatrix probs, const std::string& source) {
            if (matrices.empty()) {
                ids = std::move(src_ids);
                first_source = source;
            } else if (src_ids.size() != ids.size()) {
                throw ParseError("row count mismatch: '" + source + "' has " + std::to_string(src_ids.size()) +
                                 " rows, '" + first_source + "' has " + std::to_string(ids.size()));
            } else {
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    if (src_ids[i] != ids[i]) {
                        throw ParseError("row " + std::to_string(i + 1) + " of '" + source + "' has id '" +
                                         src_ids[i] + "', expected '" + ids[i] + "'");
                    }
                }
            }
            matrices.push_back(std::move(probs));
        };
        for (const auto& path : c.prob_files) {
            require_file(path);
            std::ifstream in(path);
            auto file = read_prob_file(in, path.string());
            add(std::move(file.ids), std::move(file.probs), path.string());
        }
        if (!c.models.empty()) {
            const auto corpus = load_corpus(c.inputs.front(), c.format);
            for (const auto& path : c.models) {
                const auto loaded = load_with_artifacts(path, c, false);
                add(ids_of(corpus), predict_corpus(loaded, corpus), path.string());
            }
        }
        const auto labels = combine(matrices);
        write_file(*c.out, predictions_text(ids, labels));
        log.write(Level::Info, "combined ", matrices.size(), " models over ", ids.size(), " rows");
    });
}

int run_evaluate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(c, err, [&] {
        const auto gold = read_gold(c);
        require_file(*c.pred);
        std::ifstream in(*c.pred);
        const auto pred = read_predictions(in);
        const auto report = evaluate_aligned(gold, pred);
        print_report(report, out);
        if (c.out) write_file(*c.out, report_tsv(report));
    });
}

int run_reproduce(const RunConfig& c, std::ostream& out, std::ostream& err) {
    Log log(err, c.quiet);
    return guarded(c, err, [&] {
        const Prepared p = prepare(c, log);
        std::vector<LabeledId> gold;
        for (const auto& t : p.test_raw) {
            if (!t.label) throw ParseError("test tweet '" + t.id + "' has no label");
            gold.push_back({t.id, *t.label});
        }
        const auto ids = ids_of(p.test_raw);

        std::vector<ProbMatrix> probs(kAllArchs.size());
        std::vector<std::exception_ptr> failures(kAllArchs.size());
        const auto member = [&](std::size_t i) {
            try {
                const ArchId arch = kAllArchs[i];
                TrainHyper hyper = c.hyper;
                hyper.seed = c.hyper.seed + i;
                Model model = build_model(arch, c.dims, hyper.seed);
                model.hashes() = p.hashes;
                const auto history = train_one(model, p, hyper, log);
                const fs::path dir = *c.out / std::string(arch_name(arch));
                write_artifacts(dir, p, model, history);
                probs[i] = predict_proba(model, p.test);
                probs[i].model_tag = std::string(arch_name(arch));
                write_file(dir / "test_probs.tsv", prob_file_text(ids, probs[i]));
            } catch (...) {
                failures[i] = std::current_exception();
            }
        };
        for (std::size_t start = 0; start < kAllArchs.size(); start += c.jobs) {
            std::vector<std::jthread> workers;
            const auto end = std::min(kAllArchs.size(), start + c.jobs);
            for (std::size_t i = start + 1; i < end; ++i) workers.emplace_back(member, i);
            member(start);
        }
        for (const auto& f : failures) {
            if (f) std::rethrow_exception(f);
        }

        std::ostringstream summary;
        summary << "model\tweighted_f1\tmacro_f1\taccuracy\n";
        const auto row = [&](const std::string& name, std::span<const Sentiment> labels) {
            std::vector<LabeledId> pred;
            for (std::size_t i = 0; i < ids.size(); ++i) pred.push_back({ids[i], labels[i]});
            const auto r = evaluate_aligned(gold, pred);
            summary << name << std::fixed << std::setprecision(4) << '\t' << r.weighted_f1 << '\t' << r.macro_f1
                    << '\t' << r.accuracy << '\n';
            return r;
        };
        for (std::size_t i = 0; i < probs.size(); ++i) {
            row(probs[i].model_tag, argmax_labels(probs[i]));
        }
        const auto labels = combine(probs);
        const auto report = row("ensemble", labels);
        write_file(*c.out / "predictions.tsv", predictions_text(ids, labels));
        write_file(*c.out / "report.tsv", report_tsv(report));
        write_file(*c.out / "summary.tsv", summary.str());
        out << summary.str() << '\n';
        print_report(report, out);
    });
}

namespace {

void add_corpus_options(CLI::App* cmd, RunConfig& c, std::string& format, bool many_inputs) {
    if (many_inputs) {
        cmd->add_option("--input", c.inputs, "Corpus file (repeatable)")->required();
    } else {
        cmd->add_option("--input", c.inputs, "Corpus file")->expected(1);
    }
    cmd->add_option("--format", format, "Corpus format")->check(CLI::IsMember({"tsv", "conll"}));
}

void add_stoplist_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--english-stoplist", c.english_stoplist, "English stop-list (one word per line)");
    cmd->add_option("--hindi-stoplist", c.hindi_stoplist, "Hindi stop-list; built from term frequency if absent");
}

void add_training_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--val", c.val, "Labeled validation corpus");
    cmd->add_option("--test", c.test, "Test corpus (its text contributes to the TF stop-list)");
    cmd->add_option("--batch-size", c.hyper.batch_size, "Mini-batch size")->capture_default_str();
    cmd->add_option("--lr", c.hyper.learning_rate, "Adam learning rate")->capture_default_str();
    cmd->add_option("--seed", c.hyper.seed, "Random seed")->capture_default_str();
    cmd->add_option("--vocab-size", c.dims.vocab_size, "Vocabulary size incl. PAD/OOV")->capture_default_str();
    cmd->add_option("--seq-len", c.dims.seq_len, "Sequence length")->capture_default_str();
    cmd->add_option("--embedding-dim", c.dims.embedding_dim)->capture_default_str();
    cmd->add_option("--lstm-units", c.dims.lstm_units)->capture_default_str();
    cmd->add_option("--conv-filters", c.dims.conv_filters)->capture_default_str();
    cmd->add_option("--dense-hidden", c.dims.dense_hidden)->capture_default_str();
    cmd->add_option("--hindi-size", c.hindi_size, "Size of the TF-derived stop-list")->capture_default_str();
    cmd->add_option("--out", c.out, "Output directory");
    add_stoplist_options(cmd, c);
}

std::vector<std::string> arch_names() {
    std::vector<std::string> names;
    for (auto a : kAllArchs) names.emplace_back(arch_name(a));
    return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::string format = "tsv";
    std::string arch = "lstm";
    std::string gold_format = "labels";
    std::size_t train_epochs = TrainHyper{}.epochs;
    std::size_t member_epochs = kEnsembleMemberEpochs;

    CLI::App app{"Code-mixed Hinglish sentiment classification", "sentimix"};
    app.require_subcommand(1);
    app.add_flag("--quiet", c.quiet, "Only log errors");

    auto* stats = app.add_subcommand("stats", "Print corpus statistics");
    add_corpus_options(stats, c, format, true);
    stats->add_option("--out", c.out, "Also write the table here");

    auto* pre = app.add_subcommand("preprocess", "Write tokenized tweets");
    add_corpus_options(pre, c, format, false);
    add_stoplist_options(pre, c);
    pre->add_option("--hindi-size", c.hindi_size)->capture_default_str();
    pre->add_option("--out", c.out, "Output TSV");

    auto* tr = app.add_subcommand("train", "Train one model");
    add_corpus_options(tr, c, format, false);
    tr->add_option("--arch", arch)->check(CLI::IsMember(arch_names()))->capture_default_str();
    tr->add_option("--epochs", train_epochs)->capture_default_str();
    add_training_options(tr, c);

    auto* pr = app.add_subcommand("predict", "Write class probabilities");
    add_corpus_options(pr, c, format, false);
    pr->add_option("--model", c.models, "Model file")->expected(1);
    pr->add_option("--vocab", c.vocab, "Vocabulary (default: beside the model)");
    add_stoplist_options(pr, c);
    pr->add_option("--out", c.out, "Probability file");

    auto* en = app.add_subcommand("ensemble", "Combine models by per-class max");
    en->add_option("--probs", c.prob_files, "Probability file (repeatable)");
    en->add_option("--model", c.models, "Model file (repeatable, needs --input)");
    en->add_option("--input", c.inputs, "Corpus for --model inputs")->expected(1);
    en->add_option("--format", format)->check(CLI::IsMember({"tsv", "conll"}));
    en->add_option("--out", c.out, "Prediction file");

    auto* ev = app.add_subcommand("evaluate", "Score predictions against gold labels");
    ev->add_option("--gold", c.gold, "Gold labels");
    ev->add_option("--gold-format", gold_format)
        ->check(CLI::IsMember({"labels", "tsv", "conll"}))
        ->capture_default_str();
    ev->add_option("--pred", c.pred, "Prediction file");
    ev->add_option("--out", c.out, "Also write the report as TSV");

    auto* rep = app.add_subcommand("reproduce", "Train all four models, ensemble and evaluate");
    add_corpus_options(rep, c, format, false);
    rep->add_option("--epochs", member_epochs)->capture_default_str();
    rep->add_option("--jobs", c.jobs, "Models trained in parallel")->capture_default_str();
    add_training_options(rep, c);

    for (auto* cmd : app.get_subcommands({})) {
        cmd->add_flag("--quiet", c.quiet, "Only log errors");
    }

    std::vector<const char*> argv{"sentimix"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        app.exit(e, out, err);
        return kUsageError;
    }

    c.format = format == "conll" ? CorpusFormat::Conll : CorpusFormat::Tsv;
    c.arch = parse_arch(arch);
    c.gold_format = gold_format == "tsv" ? GoldFormat::Tsv : gold_format == "conll" ? GoldFormat::Conll : GoldFormat::Labels;
    c.hyper.epochs = rep->parsed() ? member_epochs : train_epochs;

    if (stats->parsed()) return (c.command = "stats", run_stats(c, out, err));
    if (pre->parsed()) return (c.command = "preprocess", run_preprocess(c, out, err));
    if (tr->parsed()) return (c.command = "train", run_train(c, out, err));
    if (pr->parsed()) return (c.command = "predict", run_predict(c, out, err));
    if (en->parsed()) return (c.command = "ensemble", run_ensemble(c, out, err));
    if (ev->parsed()) return (c.command = "evaluate", run_evaluate(c, out, err));
    c.command = "reproduce";
    return run_reproduce(c, out, err);
}

}  // namespace sentimix::cli
