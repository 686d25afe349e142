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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "sentimix/architectures.hpp"

namespace sentimix {

inline constexpr std::uint32_t kModelFormatVersion = 1;

/// Binary model file, all integers little-endian:
///
///   "SMIXMDL\0"                       magic, 8 bytes
///   u32 version
///   u32 n, n bytes                    architecture name
///   6 x u64                           vocab_size, seq_len, embedding_dim,
///                                     lstm_units, conv_filters, dense_hidden
///   3 x u32                           vocabulary / english / hindi stop-list hashes
///   u32 count, then per parameter:
///     u32 n, n bytes                  name
///     u32 rank, rank x u64            shape
///     IEEE-754 binary64 payload
///   u32 CRC-32 of every preceding byte
void save_model(const Model& model, std::ostream& out);
void save_model(const Model& model, const std::filesystem::path& path);

/// Throws ParseError whose message names the failing check: "bad magic",
/// "unsupported version", "checksum mismatch" or a malformed field.
Model load_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

/// zlib CRC-32 of a byte string; used for artifact hashes as well.
std::uint32_t crc32_of(std::string_view bytes);

}  // namespace sentimix
