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

// Sentence embedding providers. Three interchangeable backends sit behind
// EmbeddingProvider:
//
//   hash   deterministic signed feature hashing (FNV-1a 64), no model needed
//   cache  vectors precomputed offline, stored as JSON lines
//   http   a live embedding service speaking POST <endpoint>/embed
//
// Vectors are opaque to everything downstream; the provider decides dim.

#ifndef VEDSUM_EMBED_H_
#define VEDSUM_EMBED_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "vedsum/corpus.h"

namespace vedsum {

// Dense row-major matrix with one keyed row per sentence. The constructor
// enforces the invariants: dim > 0, every row has dim components, all
// components finite, keys unique.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::string provider_name, std::size_t dim,
                  std::vector<std::string> keys, std::vector<double> values);

  const std::string& provider_name() const { return provider_name_; }
  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  const std::vector<std::string>& keys() const { return keys_; }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const EmbeddingMatrix&,
                         const EmbeddingMatrix&) = default;

 private:
  std::string provider_name_;
  std::size_t dim_ = 0;
  std::vector<std::string> keys_;
  std::vector<double> values_;
};

inline constexpr std::size_t kDefaultHashDim = 256;
inline constexpr std::size_t kDefaultHttpBatchSize = 32;

struct HashProviderSpec {
  std::size_t dim = kDefaultHashDim;
};
struct CacheProviderSpec {
  std::filesystem::path cache_path;
};
struct HttpProviderSpec {
  std::string endpoint_url;
  std::size_t batch_size = kDefaultHttpBatchSize;
};

struct ProviderSpec {
  std::string name;
  std::variant<HashProviderSpec, CacheProviderSpec, HttpProviderSpec> kind;

  static ProviderSpec hash(std::size_t dim = kDefaultHashDim,
                           std::string name = {});
  static ProviderSpec cache(std::filesystem::path path, std::string name = {});
  static ProviderSpec http(std::string endpoint_url, std::string name = {},
                           std::size_t batch_size = kDefaultHttpBatchSize);

  // "hash", "cache" or "http".
  std::string_view kind_name() const;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual const std::string& name() const = 0;

  // One row per sentence, in input order, keyed by SentenceRecord::key().
  // Throws kEmptyInput for an empty span.
  virtual EmbeddingMatrix embed(std::span<const SentenceRecord> sentences) = 0;
};

// Hash and cache providers are immutable after construction. The http
// provider serializes its requests internally. All three may be shared by
// concurrent callers.
std::unique_ptr<EmbeddingProvider> make_provider(const ProviderSpec& spec);

// One-shot convenience over make_provider(spec)->embed(sentences).
EmbeddingMatrix embed_sentences(const ProviderSpec& spec,
                                std::span<const SentenceRecord> sentences);

// Signed feature hashing. Tokens are the Unicode-whitespace pieces of the
// NFC-normalized, lowercased text; features are the tokens plus each
// adjacent pair joined by U+001F. Each feature's FNV-1a 64 value h adds
// +1 (top bit clear) or -1 (top bit set) at index h % dim. The result is
// L2-normalized unless it is all zeros.
std::vector<double> hash_embed(std::string_view text, std::size_t dim);

// Cache files: an optional header {"provider":<name>,"dim":<d>} followed by
// one {"key":...,"dim":<d>,"vec":[...]} object per LF-terminated line.
void write_cache(const EmbeddingMatrix& matrix,
                 const std::filesystem::path& path);
EmbeddingMatrix read_cache(const std::filesystem::path& path);

struct HttpEmbedding {
  std::size_t dim = 0;
  std::vector<std::vector<double>> vectors;
};

// Posts `texts` to <endpoint>/embed in requests of at most `batch_size`
// sentences and concatenates the responses in order.
HttpEmbedding http_embed(std::string_view endpoint,
                         std::span<const std::string> texts,
                         std::size_t batch_size = kDefaultHttpBatchSize);

}  // namespace vedsum

#endif  // VEDSUM_EMBED_H_
