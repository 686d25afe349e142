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

#include "sentimix/prob_matrix.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "sentimix/error.hpp"

namespace sentimix {

void write_prob_file(const std::vector<std::string>& ids, const ProbMatrix& probs, std::ostream& out) {
    if (ids.size() != probs.size()) {
        throw InvalidArgument("write_prob_file: " + std::to_string(ids.size()) + " ids but " +
                              std::to_string(probs.size()) + " rows");
    }
    char buf[64];
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << ids[i];
        for (double p : probs.rows[i]) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), p, std::chars_format::general, 17);
            out << '\t' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
        }
        out << '\n';
    }
}

ProbFile read_prob_file(std::istream& in, std::string tag) {
    ProbFile file;
    file.probs.model_tag = std::move(tag);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const auto tab = rest.find('\t');
            fields.push_back(rest.substr(0, tab));
            if (tab == std::string_view::npos) break;
            rest.remove_prefix(tab + 1);
        }
        if (fields.size() != 1 + kNumClasses) {
            throw ParseError("probability file line " + std::to_string(line_no) + ": expected " +
                             std::to_string(1 + kNumClasses) + " columns");
        }
        ClassProbs row{};
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            const auto f = fields[c + 1];
            const auto res = std::from_chars(f.data(), f.data() + f.size(), row[c]);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
                throw ParseError("probability file line " + std::to_string(line_no) +
                                 ": bad number '" + std::string(f) + "'");
            }
        }
        file.ids.emplace_back(fields[0]);
        file.probs.rows.push_back(row);
    }
    return file;
}

}  // namespace sentimix
