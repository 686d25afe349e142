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

#include "sentimix/model_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "sentimix/error.hpp"

namespace sentimix {
namespace {

constexpr std::string_view kMagic{"SMIXMDL\0", 8};

class Writer {
public:
    void bytes(std::string_view s) { buf_.append(s); }
    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }
    void f64(double v) { le(std::bit_cast<std::uint64_t>(v), 8); }
    void str(std::string_view s) {
        u32(static_cast<std::uint32_t>(s.size()));
        bytes(s);
    }
    const std::string& buffer() const { return buf_; }

private:
    void le(std::uint64_t v, int width) {
        for (int i = 0; i < width; ++i) {
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
        }
    }
    std::string buf_;
};

class Reader {
public:
    explicit Reader(std::string_view data) : data_(data) {}

    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }
    double f64() { return std::bit_cast<double>(le(8)); }
    std::string str() {
        const auto n = u32();
        need(n, "string");
        std::string s(data_.substr(pos_, n));
        pos_ += n;
        return s;
    }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(std::size_t n, const char* what) const {
        if (data_.size() - pos_ < n) {
            throw ParseError(std::string("model file: truncated while reading ") + what);
        }
    }
    std::uint64_t le(int width) {
        need(static_cast<std::size_t>(width), "integer");
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + static_cast<std::size_t>(i)]))
                 << (8 * i);
        }
        pos_ += static_cast<std::size_t>(width);
        return v;
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

std::uint32_t read_le32(std::string_view s) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[static_cast<std::size_t>(i)])) << (8 * i);
    }
    return v;
}

}  // namespace

std::uint32_t crc32_of(std::string_view bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed large inputs in chunks
    constexpr std::size_t kChunk = 1u << 30;
    for (std::size_t off = 0; off < bytes.size(); off += kChunk) {
        const auto n = std::min(kChunk, bytes.size() - off);
        crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + off), static_cast<uInt>(n));
    }
    return static_cast<std::uint32_t>(crc);
}

void save_model(const Model& model, std::ostream& out) {
    Writer w;
    w.bytes(kMagic);
    w.u32(kModelFormatVersion);
    w.str(arch_name(model.arch()));
    const auto& c = model.config();
    for (auto v : {c.vocab_size, c.seq_len, c.embedding_dim, c.lstm_units, c.conv_filters, c.dense_hidden}) {
        w.u64(v);
    }
    w.u32(model.hashes().vocabulary);
    w.u32(model.hashes().english_stoplist);
    w.u32(model.hashes().hindi_stoplist);
    const auto params = model.params();
    w.u32(static_cast<std::uint32_t>(params.size()));
    for (const auto& p : params) {
        w.str(p.name);
        w.u32(static_cast<std::uint32_t>(p.value->rank()));
        for (auto d : p.value->shape()) w.u64(d);
        for (double x : p.value->data()) w.f64(x);
    }
    Writer tail;
    tail.u32(crc32_of(w.buffer()));
    out.write(w.buffer().data(), static_cast<std::streamsize>(w.buffer().size()));
    out.write(tail.buffer().data(), static_cast<std::streamsize>(tail.buffer().size()));
    if (!out) {
        throw IoError("failed to write model");
    }
}

void save_model(const Model& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    save_model(model, out);
}

Model load_model(std::istream& in) {
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (data.size() < kMagic.size() || std::string_view(data).substr(0, kMagic.size()) != kMagic) {
        throw ParseError("model file: bad magic");
    }
    if (data.size() < kMagic.size() + 4) {
        throw ParseError("model file: checksum mismatch (file truncated)");
    }
    const auto version = read_le32(std::string_view(data).substr(kMagic.size(), 4));
    if (version != kModelFormatVersion) {
        throw ParseError("model file: unsupported version " + std::to_string(version) + " (expected " +
                         std::to_string(kModelFormatVersion) + ")");
    }
    if (data.size() < kMagic.size() + 8) {
        throw ParseError("model file: checksum mismatch (file truncated)");
    }
    const std::string_view body = std::string_view(data).substr(0, data.size() - 4);
    if (crc32_of(body) != read_le32(std::string_view(data).substr(data.size() - 4))) {
        throw ParseError("model file: checksum mismatch");
    }

    Reader r(body.substr(kMagic.size() + 4));
    const ArchId arch = [&] {
        try {
            return parse_arch(r.str());
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("model file: ") + e.what());
        }
    }();
    ModelConfig config;
    config.vocab_size = r.u64();
    config.seq_len = r.u64();
    config.embedding_dim = r.u64();
    config.lstm_units = r.u64();
    config.conv_filters = r.u64();
    config.dense_hidden = r.u64();
    ArtifactHashes hashes;
    hashes.vocabulary = r.u32();
    hashes.english_stoplist = r.u32();
    hashes.hindi_stoplist = r.u32();

    Model model = [&] {
        try {
            return Model(arch, config);
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("model file: ") + e.what());
        }
    }();
    model.hashes() = hashes;
    auto params = model.params();
    if (r.u32() != params.size()) {
        throw ParseError("model file: parameter count does not match architecture");
    }
    for (auto& p : params) {
        if (r.str() != p.name) {
            throw ParseError("model file: expected parameter '" + p.name + "'");
        }
        const auto rank = r.u32();
        std::vector<std::size_t> shape(rank);
        for (auto& d : shape) d = r.u64();
        if (shape != p.value->shape()) {
            throw ParseError("model file: shape mismatch for '" + p.name + "'");
        }
        for (auto& x : p.value->data()) x = r.f64();
    }
    if (!r.done()) {
        throw ParseError("model file: trailing bytes after parameters");
    }
    return model;
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model '" + path.string() + "'");
    }
    return load_model(in);
}

}  // namespace sentimix
