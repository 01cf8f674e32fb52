// Copyright 2026 The cpmorita Authors
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

#ifndef CPMORITA_IO_HPP_
#define CPMORITA_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cpmorita/channel.hpp"

namespace cpmorita {

using Json = nlohmann::ordered_json;

// On-disk channel description. Complex entries are [re, im] pairs,
// matrices are row-major nested arrays:
//   {"schema_version": 1, "n": 2, "kraus": [[[[1.0,0.0],[0.0,0.0]], ...]],
//    "metadata": {"name": "...", "seed": 7}}
// The kraus list may be empty (the zero map). NaN and infinite entries
// and ragged arrays are rejected.
struct ChannelFile {
  int schema_version = 1;
  CPMap map;
  std::optional<std::string> name;
  std::optional<std::int64_t> seed;
};

inline constexpr int kChannelSchemaVersion = 1;

Json channel_to_json(const ChannelFile& file);
ChannelFile channel_from_json(const Json& j);

// Throw ParseError on malformed content, IoError on filesystem failure.
ChannelFile read_channel_file(const std::filesystem::path& path);
void write_channel_file(const std::filesystem::path& path,
                        const ChannelFile& file);

// Rectangular complex matrix as JSON, same entry encoding:
//   {"schema_version": 1, "rows": 4, "cols": 2, "entries": [[[re,im],...],...]}
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace cpmorita

#endif  // CPMORITA_IO_HPP_
