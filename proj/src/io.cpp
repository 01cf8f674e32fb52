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

#include "cpmorita/io.hpp"

#include <cmath>
#include <fstream>
#include <utility>
#include <vector>

namespace cpmorita {

namespace {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError(where + ": entry must be a [re, im] pair of numbers");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError(where + ": entry is not finite");
  }
  return Complex(re, im);
}

Json square_matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix square_matrix_from_json(const Json& j, std::size_t n,
                                      const std::string& where) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " rows");
  }
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(i, c) = complex_from_json(row[c], where);
    }
  }
  return m;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failure on " + path.string());
  }
  return text;
}

void spew(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("write failure on " + path.string());
  }
}

}  // namespace

Json channel_to_json(const ChannelFile& file) {
  Json j;
  j["schema_version"] = file.schema_version;
  j["n"] = file.map.dim();
  Json kraus = Json::array();
  for (const auto& t : file.map.kraus()) {
    kraus.push_back(square_matrix_to_json(t));
  }
  j["kraus"] = std::move(kraus);
  if (file.name.has_value() || file.seed.has_value()) {
    Json meta;
    if (file.name.has_value()) meta["name"] = *file.name;
    if (file.seed.has_value()) meta["seed"] = *file.seed;
    j["metadata"] = std::move(meta);
  }
  return j;
}

ChannelFile channel_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("channel: top level must be an object");
  }
  if (!j.contains("schema_version") ||
      !j["schema_version"].is_number_integer()) {
    throw ParseError("channel: missing integer schema_version");
  }
  const int version = j["schema_version"].get<int>();
  if (version != kChannelSchemaVersion) {
    throw ParseError("channel: unsupported schema_version " +
                     std::to_string(version));
  }
  if (!j.contains("n") || !j["n"].is_number_integer() ||
      j["n"].get<std::int64_t>() < 1) {
    throw ParseError("channel: n must be a positive integer");
  }
  const auto n = j["n"].get<std::size_t>();
  if (n > 64) {
    throw ParseError("channel: n = " + std::to_string(n) +
                     " exceeds the supported maximum of 64");
  }
  if (!j.contains("kraus") || !j["kraus"].is_array()) {
    throw ParseError("channel: kraus must be an array of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(j["kraus"].size());
  for (std::size_t r = 0; r < j["kraus"].size(); ++r) {
    kraus.push_back(square_matrix_from_json(
        j["kraus"][r], n, "channel: kraus[" + std::to_string(r) + "]"));
  }

  ChannelFile file;
  file.schema_version = version;
  file.map = CPMap(n, std::move(kraus));
  if (j.contains("metadata")) {
    const Json& meta = j["metadata"];
    if (!meta.is_object()) {
      throw ParseError("channel: metadata must be an object");
    }
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) {
        throw ParseError("channel: metadata.name must be a string");
      }
      file.name = meta["name"].get<std::string>();
    }
    if (meta.contains("seed")) {
      if (!meta["seed"].is_number_integer()) {
        throw ParseError("channel: metadata.seed must be an integer");
      }
      file.seed = meta["seed"].get<std::int64_t>();
    }
  }
  return file;
}

ChannelFile read_channel_file(const std::filesystem::path& path) {
  return channel_from_json(parse_json_text(slurp(path), "channel"));
}

void write_channel_file(const std::filesystem::path& path,
                        const ChannelFile& file) {
  spew(path, channel_to_json(file).dump(2) + "\n");
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["schema_version"] = 1;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(i, c)));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries") || !j["rows"].is_number_integer() ||
      !j["cols"].is_number_integer() || !j["entries"].is_array()) {
    throw ParseError("matrix: expected rows, cols and entries");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (j["entries"].size() != rows) {
    throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j["entries"][i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix: row " + std::to_string(i) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(row[c], "matrix");
    }
  }
  return m;
}

void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m) {
  spew(path, matrix_to_json(m).dump(2) + "\n");
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(parse_json_text(slurp(path), "matrix"));
}

}  // namespace cpmorita
