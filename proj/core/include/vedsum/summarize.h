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

// Per-cluster extractive summarization: concatenate the cluster's documents,
// embed every sentence, cluster the vectors with K-means and keep the
// sentence closest to each centroid. The kept sentences are rendered in
// their original order, joined by single spaces.

#ifndef VEDSUM_SUMMARIZE_H_
#define VEDSUM_SUMMARIZE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vedsum/corpus.h"
#include "vedsum/embed.h"
#include "vedsum/error.h"
#include "vedsum/kmeans.h"

namespace vedsum {

inline constexpr std::size_t kDefaultSummarySentences = 4;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct SummarizerConfig {
  ProviderSpec provider = ProviderSpec::hash();
  // Desired number of summary sentences (the K of K-means).
  std::size_t k = kDefaultSummarySentences;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_iters = 300;
  double rel_tol = 1e-4;

  KMeansConfig kmeans_for(std::size_t sentence_count) const;
};

struct Summary {
  std::string cluster_id;
  // Distinct global indices, ascending.
  std::vector<std::size_t> selected;
  std::string text;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ClusterFailure {
  std::string cluster_id;
  ErrorCode code;
  std::string message;
};

struct SummaryBatch {
  std::vector<Summary> summaries;       // corpus cluster order
  std::vector<ClusterFailure> failures;  // corpus cluster order
};

// Errors from embedding or clustering are rethrown with the cluster id in
// the message.
Summary summarize_cluster(const Cluster& cluster,
                          const SummarizerConfig& config,
                          EmbeddingProvider& provider);
Summary summarize_cluster(const Cluster& cluster,
                          const SummarizerConfig& config);

// Worker count used when a caller passes jobs == 0.
std::size_t default_jobs();

// Summarizes every cluster with up to `jobs` concurrent workers. A failing
// cluster is recorded in `failures` and does not stop the batch; the output
// order never depends on scheduling.
SummaryBatch summarize_corpus(const Corpus& corpus,
                              const SummarizerConfig& config,
                              std::size_t jobs = 0);
SummaryBatch summarize_corpus(const Corpus& corpus,
                              const SummarizerConfig& config,
                              EmbeddingProvider& provider,
                              std::size_t jobs = 0);

// Writes <out>/<cluster_id>.sum.txt and <out>/summaries.jsonl.
void write_summaries(const std::vector<Summary>& summaries,
                     const std::filesystem::path& out_dir);

}  // namespace vedsum

#endif  // VEDSUM_SUMMARIZE_H_
