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

#include "vedsum/embed.h"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "vedsum/error.h"
#include "vedsum/text.h"

namespace vedsum {
namespace {

constexpr std::string_view kBigramJoiner = "\x1f";

class HashProvider final : public EmbeddingProvider {
 public:
  HashProvider(std::string name, std::size_t dim)
      : name_(std::move(name)), dim_(dim) {}

  const std::string& name() const override { return name_; }

  EmbeddingMatrix embed(std::span<const SentenceRecord> sentences) override {
    if (sentences.empty()) {
      throw Error(ErrorCode::kEmptyInput, "no sentences to embed", name_);
    }
    std::vector<std::string> keys;
    std::vector<double> values;
    keys.reserve(sentences.size());
    values.reserve(sentences.size() * dim_);
    for (const auto& s : sentences) {
      keys.push_back(s.key());
      const auto v = hash_embed(s.text, dim_);
      values.insert(values.end(), v.begin(), v.end());
    }
    return EmbeddingMatrix(name_, dim_, std::move(keys), std::move(values));
  }

 private:
  std::string name_;
  std::size_t dim_;
};

class CacheProvider final : public EmbeddingProvider {
 public:
  CacheProvider(std::string name, const std::filesystem::path& path)
      : cache_(read_cache(path)), path_(path.string()) {
    name_ = name.empty() ? cache_.provider_name() : std::move(name);
    index_.reserve(cache_.rows());
    for (std::size_t i = 0; i < cache_.rows(); ++i) {
      index_.emplace(cache_.key(i), i);
    }
  }

  const std::string& name() const override { return name_; }

  EmbeddingMatrix embed(std::span<const SentenceRecord> sentences) override {
    if (sentences.empty()) {
      throw Error(ErrorCode::kEmptyInput, "no sentences to embed", name_);
    }
    const std::size_t dim = cache_.dim();
    std::vector<std::string> keys;
    std::vector<double> values;
    keys.reserve(sentences.size());
    values.reserve(sentences.size() * dim);
    for (const auto& s : sentences) {
      std::string key = s.key();
      auto it = index_.find(key);
      if (it == index_.end()) {
        throw Error(ErrorCode::kCacheMiss, "key not in cache " + path_, key);
      }
      const auto row = cache_.row(it->second);
      values.insert(values.end(), row.begin(), row.end());
      keys.push_back(std::move(key));
    }
    return EmbeddingMatrix(name_, dim, std::move(keys), std::move(values));
  }

 private:
  EmbeddingMatrix cache_;
  std::string path_;
  std::string name_;
  std::unordered_map<std::string, std::size_t> index_;
};

class HttpProvider final : public EmbeddingProvider {
 public:
  HttpProvider(std::string name, HttpProviderSpec spec)
      : name_(std::move(name)), spec_(std::move(spec)) {}

  const std::string& name() const override { return name_; }

  EmbeddingMatrix embed(std::span<const SentenceRecord> sentences) override {
    if (sentences.empty()) {
      throw Error(ErrorCode::kEmptyInput, "no sentences to embed", name_);
    }
    std::vector<std::string> texts;
    std::vector<std::string> keys;
    texts.reserve(sentences.size());
    keys.reserve(sentences.size());
    for (const auto& s : sentences) {
      texts.push_back(s.text);
      keys.push_back(s.key());
    }
    HttpEmbedding response;
    {
      std::lock_guard<std::mutex> lock(mu_);
      response = http_embed(spec_.endpoint_url, texts, spec_.batch_size);
    }
    std::vector<double> values;
    values.reserve(texts.size() * response.dim);
    for (const auto& v : response.vectors) {
      values.insert(values.end(), v.begin(), v.end());
    }
    return EmbeddingMatrix(name_, response.dim, std::move(keys),
                           std::move(values));
  }

 private:
  std::string name_;
  HttpProviderSpec spec_;
  std::mutex mu_;
};

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::string provider_name, std::size_t dim,
                                 std::vector<std::string> keys,
                                 std::vector<double> values)
    : provider_name_(std::move(provider_name)),
      dim_(dim),
      keys_(std::move(keys)),
      values_(std::move(values)) {
  if (dim_ == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding dim must be > 0",
                provider_name_);
  }
  if (values_.size() != keys_.size() * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(keys_.size() * dim_) +
                    " components, got " + std::to_string(values_.size()),
                provider_name_);
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kNonFiniteInput, "non-finite embedding component",
                  keys_[i / dim_]);
    }
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(keys_.size());
  for (const auto& k : keys_) {
    if (!seen.insert(k).second) {
      throw Error(ErrorCode::kDuplicateKey, "duplicate embedding key", k);
    }
  }
}

ProviderSpec ProviderSpec::hash(std::size_t dim, std::string name) {
  if (name.empty()) name = "hash-" + std::to_string(dim);
  return ProviderSpec{std::move(name), HashProviderSpec{dim}};
}

ProviderSpec ProviderSpec::cache(std::filesystem::path path, std::string name) {
  return ProviderSpec{std::move(name), CacheProviderSpec{std::move(path)}};
}

ProviderSpec ProviderSpec::http(std::string endpoint_url, std::string name,
                                std::size_t batch_size) {
  if (name.empty()) name = "http";
  return ProviderSpec{std::move(name),
                      HttpProviderSpec{std::move(endpoint_url), batch_size}};
}

std::string_view ProviderSpec::kind_name() const {
  switch (kind.index()) {
    case 0: return "hash";
    case 1: return "cache";
    default: return "http";
  }
}

std::unique_ptr<EmbeddingProvider> make_provider(const ProviderSpec& spec) {
  if (const auto* h = std::get_if<HashProviderSpec>(&spec.kind)) {
    if (h->dim < 2) {
      throw Error(ErrorCode::kInvalidArgument, "hash dim must be >= 2");
    }
    return std::make_unique<HashProvider>(spec.name, h->dim);
  }
  if (const auto* c = std::get_if<CacheProviderSpec>(&spec.kind)) {
    return std::make_unique<CacheProvider>(spec.name, c->cache_path);
  }
  const auto& h = std::get<HttpProviderSpec>(spec.kind);
  if (h.endpoint_url.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "http provider needs an endpoint");
  }
  if (h.batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "http batch size must be >= 1");
  }
  return std::make_unique<HttpProvider>(spec.name, h);
}

EmbeddingMatrix embed_sentences(const ProviderSpec& spec,
                                std::span<const SentenceRecord> sentences) {
  return make_provider(spec)->embed(sentences);
}

std::vector<double> hash_embed(std::string_view input, std::size_t dim) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidArgument, "hash dim must be >= 2");
  }
  std::vector<double> v(dim, 0.0);
  const auto tokens = text::split_whitespace(text::to_lower(text::nfc(input)));

  auto add = [&](std::uint64_t h) {
    v[h % dim] += (h >> 63) == 0 ? 1.0 : -1.0;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    add(text::fnv1a64(tokens[i]));
    if (i + 1 < tokens.size()) {
      std::uint64_t h = text::fnv1a64(tokens[i]);
      h = text::fnv1a64(kBigramJoiner, h);
      h = text::fnv1a64(tokens[i + 1], h);
      add(h);
    }
  }

  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq > 0.0) {
    const double norm = std::sqrt(sq);
    for (double& x : v) x /= norm;
  }
  return v;
}

}  // namespace vedsum
