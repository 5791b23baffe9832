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

#include "vedsum/summarize.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <thread>

#include "json.hpp"

namespace vedsum {

KMeansConfig SummarizerConfig::kmeans_for(std::size_t sentence_count) const {
  KMeansConfig kc;
  kc.k = std::min(k, sentence_count);
  kc.seed = seed;
  kc.max_iters = max_iters;
  kc.rel_tol = rel_tol;
  return kc;
}

Summary summarize_cluster(const Cluster& cluster,
                          const SummarizerConfig& config,
                          EmbeddingProvider& provider) {
  if (config.k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1",
                cluster.cluster_id);
  }
  const std::vector<SentenceRecord> sentences = concatenate_cluster(cluster);
  try {
    const EmbeddingMatrix points = provider.embed(sentences);
    const KMeansResult fit =
        kmeans_fit(points, config.kmeans_for(sentences.size()));

    Summary summary;
    summary.cluster_id = cluster.cluster_id;
    summary.selected = nearest_to_centroids(fit, points);
    std::sort(summary.selected.begin(), summary.selected.end());
    for (std::size_t idx : summary.selected) {
      if (!summary.text.empty()) summary.text += ' ';
      summary.text += sentences[idx].text;
    }
    return summary;
  } catch (const Error& e) {
    throw e.with_context("cluster " + cluster.cluster_id);
  }
}

Summary summarize_cluster(const Cluster& cluster,
                          const SummarizerConfig& config) {
  auto provider = make_provider(config.provider);
  return summarize_cluster(cluster, config, *provider);
}

std::size_t default_jobs() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

SummaryBatch summarize_corpus(const Corpus& corpus,
                              const SummarizerConfig& config,
                              EmbeddingProvider& provider, std::size_t jobs) {
  const std::size_t n = corpus.clusters.size();
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min(jobs, std::max<std::size_t>(n, 1));

  std::vector<std::optional<Summary>> done(n);
  std::vector<std::optional<ClusterFailure>> failed(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const Cluster& cluster = corpus.clusters[i];
      try {
        done[i] = summarize_cluster(cluster, config, provider);
      } catch (const Error& e) {
        failed[i] = ClusterFailure{cluster.cluster_id, e.code(), e.what()};
      } catch (const std::exception& e) {
        failed[i] = ClusterFailure{cluster.cluster_id, ErrorCode::kIoError,
                                   e.what()};
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SummaryBatch batch;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) batch.summaries.push_back(std::move(*done[i]));
    if (failed[i]) batch.failures.push_back(std::move(*failed[i]));
  }
  return batch;
}

SummaryBatch summarize_corpus(const Corpus& corpus,
                              const SummarizerConfig& config,
                              std::size_t jobs) {
  auto provider = make_provider(config.provider);
  return summarize_corpus(corpus, config, *provider, jobs);
}

void write_summaries(const std::vector<Summary>& summaries,
                     const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream jsonl(out_dir / "summaries.jsonl",
                      std::ios::binary | std::ios::trunc);
  if (!jsonl) {
    throw Error(ErrorCode::kIoError, "cannot write summaries.jsonl",
                out_dir.string());
  }
  for (const auto& s : summaries) {
    const auto path = out_dir / (s.cluster_id + ".sum.txt");
    std::ofstream txt(path, std::ios::binary | std::ios::trunc);
    if (!txt) throw Error(ErrorCode::kIoError, "cannot write", path.string());
    txt << s.text << '\n';

    nlohmann::ordered_json row;
    row["cluster_id"] = s.cluster_id;
    row["selected"] = s.selected;
    row["text"] = s.text;
    jsonl << row.dump() << '\n';
  }
}

}  // namespace vedsum
