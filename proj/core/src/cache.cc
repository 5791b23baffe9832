// Copyright 2026 The vedsum Authors.
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

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>

#include "json.hpp"
#include "vedsum/embed.h"
#include "vedsum/error.h"

namespace vedsum {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Row {
  std::string key;
  std::optional<std::size_t> declared_dim;
  std::vector<double> vec;
};

// Parses the exact layout write_cache emits:
//   {"key":"<unescaped>","dim":<n>,"vec":[<num>,...]}
// Returns false on anything else so the caller can fall back to the general
// JSON parser, which also produces the error messages.
bool parse_row_fast(std::string_view line, Row& row) {
  constexpr std::string_view kKey = "{\"key\":\"";
  constexpr std::string_view kDim = ",\"dim\":";
  constexpr std::string_view kVec = ",\"vec\":[";
  if (!line.starts_with(kKey)) return false;
  std::size_t pos = kKey.size();
  const std::size_t key_end = line.find('"', pos);
  if (key_end == std::string_view::npos) return false;
  const std::string_view key = line.substr(pos, key_end - pos);
  for (unsigned char c : key) {
    if (c == '\\' || c < 0x20) return false;
  }
  pos = key_end + 1;
  if (line.substr(pos, kDim.size()) != kDim) return false;
  pos += kDim.size();
  std::size_t declared = 0;
  auto [dim_end, dim_ec] =
      std::from_chars(line.data() + pos, line.data() + line.size(), declared);
  if (dim_ec != std::errc()) return false;
  pos = static_cast<std::size_t>(dim_end - line.data());
  if (line.substr(pos, kVec.size()) != kVec) return false;
  pos += kVec.size();

  row.vec.clear();
  row.vec.reserve(declared);
  if (pos < line.size() && line[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      if (pos >= line.size()) return false;
      const char lead = line[pos];
      if (lead != '-' && (lead < '0' || lead > '9')) return false;
      double value = 0.0;
      auto [end, ec] = std::from_chars(line.data() + pos,
                                       line.data() + line.size(), value);
      if (ec != std::errc() || !std::isfinite(value)) return false;
      row.vec.push_back(value);
      pos = static_cast<std::size_t>(end - line.data());
      if (pos >= line.size()) return false;
      if (line[pos] == ']') {
        ++pos;
        break;
      }
      if (line[pos] != ',') return false;
      ++pos;
    }
  }
  if (line.substr(pos) != "}") return false;
  row.key.assign(key);
  row.declared_dim = declared;
  return true;
}

}  // namespace

void write_cache(const EmbeddingMatrix& matrix,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open cache for writing",
                path.string());
  }
  ordered_json header;
  header["provider"] = matrix.provider_name();
  header["dim"] = matrix.dim();
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    ordered_json row;
    row["key"] = matrix.key(i);
    row["dim"] = matrix.dim();
    const auto v = matrix.row(i);
    row["vec"] = std::vector<double>(v.begin(), v.end());
    out << row.dump() << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failed", path.string());
}

EmbeddingMatrix read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open cache", path.string());
  const std::string where = path.string();

  std::string provider = path.stem().string();
  std::optional<std::size_t> dim;
  std::vector<std::string> keys;
  std::vector<double> values;
  std::unordered_set<std::string> seen;

  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    Row row;
    if (!parse_row_fast(line, row)) {
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), where, line_no);
      }
      if (!obj.is_object()) {
        throw ParseError("expected JSON object", where, line_no);
      }

      if (first_record && !obj.contains("key")) {
        first_record = false;
        if (auto it = obj.find("provider"); it != obj.end()) {
          if (!it->is_string()) {
            throw ParseError("header provider must be a string", where,
                             line_no);
          }
          provider = it->get<std::string>();
        }
        auto it = obj.find("dim");
        if (it == obj.end() || !it->is_number_unsigned() ||
            it->get<std::size_t>() == 0) {
          throw ParseError("header needs a positive integer dim", where,
                           line_no);
        }
        dim = it->get<std::size_t>();
        continue;
      }

      auto key_it = obj.find("key");
      auto vec_it = obj.find("vec");
      if (key_it == obj.end() || !key_it->is_string()) {
        throw ParseError("row needs a string key", where, line_no);
      }
      if (vec_it == obj.end() || !vec_it->is_array()) {
        throw ParseError("row needs a vec array", where, line_no);
      }
      row.key = key_it->get<std::string>();
      if (auto d = obj.find("dim"); d != obj.end()) {
        if (!d->is_number_unsigned()) {
          throw ParseError("row dim must be a non-negative integer", where,
                           line_no);
        }
        row.declared_dim = d->get<std::size_t>();
      }
      row.vec.reserve(vec_it->size());
      for (const auto& x : *vec_it) {
        if (!x.is_number()) {
          throw ParseError("vec components must be numbers", where, line_no);
        }
        const double value = x.get<double>();
        if (!std::isfinite(value)) {
          throw ParseError("non-finite vec component", where, line_no);
        }
        row.vec.push_back(value);
      }
    }
    first_record = false;

    const std::size_t len = row.vec.size();
    if (row.declared_dim && *row.declared_dim != len) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "line " + std::to_string(line_no) + ": row declares dim " +
                      std::to_string(*row.declared_dim) + " but has " +
                      std::to_string(len) + " components",
                  where);
    }
    if (!dim) dim = len;
    if (len != *dim || len == 0) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "line " + std::to_string(line_no) + ": expected dim " +
                      std::to_string(*dim) + ", got " + std::to_string(len),
                  where);
    }
    if (!seen.insert(row.key).second) {
      throw Error(ErrorCode::kDuplicateKey,
                  "line " + std::to_string(line_no) + ": duplicate key",
                  row.key);
    }
    values.insert(values.end(), row.vec.begin(), row.vec.end());
    keys.push_back(std::move(row.key));
  }
  if (!dim) throw ParseError("cache has no header and no rows", where, line_no);
  return EmbeddingMatrix(std::move(provider), *dim, std::move(keys),
                         std::move(values));
}

}  // namespace vedsum
