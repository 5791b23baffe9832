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

// Corpus-level evaluation. Every cluster summary is scored against all of
// its references, the best F per cluster is kept, and the corpus score is the
// plain mean of those per-cluster values (each cluster weighted equally).

#ifndef VEDSUM_HARNESS_H_
#define VEDSUM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vedsum/corpus.h"
#include "vedsum/rouge.h"
#include "vedsum/summarize.h"

namespace vedsum {

struct ClusterScore {
  std::string cluster_id;
  std::vector<std::size_t> selected;
  std::string summary_text;
  std::vector<std::string> reference_ids;
  BestRouge rouge1;
  BestRouge rouge2;
  // F against each reference, in reference order.
  std::vector<double> rouge1_f_per_reference;
  std::vector<double> rouge2_f_per_reference;
};

struct RunReport {
  std::string provider_name;
  SummarizerConfig config;
  bool lowercase = true;
  std::uint64_t corpus_fingerprint = 0;
  std::size_t clusters_total = 0;
  std::vector<ClusterScore> per_cluster;  // corpus cluster order
  std::vector<ClusterFailure> failures;
  // Means of per-cluster best F, as fractions in [0, 1].
  double avg_rouge1_f = 0.0;
  double avg_rouge2_f = 0.0;
};

struct EvaluateOptions {
  RougeOptions rouge;
  std::size_t jobs = 0;  // 0: default_jobs()
};

// Throws kBatchErrors when no cluster could be summarized; otherwise
// failures are listed in the report.
RunReport evaluate(const Corpus& corpus, const SummarizerConfig& config,
                   const EvaluateOptions& options = {});
RunReport evaluate(const Corpus& corpus, const SummarizerConfig& config,
                   EmbeddingProvider& provider,
                   const EvaluateOptions& options = {});

// Fraction -> percentage string with two decimals, rounded half-up on the
// exact binary value of fraction * 100 (0.774449 -> "77.44").
std::string format_percent(double fraction);
// Same rounding for a value already in percent (76.38 -> "76.38").
std::string format_percentage(double percent);

enum class RowSource { kComputed, kPublished };

struct PublishedRow {
  std::string name;
  double rouge1 = 0.0;  // percent
  double rouge2 = 0.0;  // percent
  std::string citation;
};

struct ComparisonRow {
  std::string name;
  double rouge1_pct = 0.0;
  double rouge2_pct = 0.0;
  RowSource source = RowSource::kComputed;
  std::string citation;
  bool best_rouge1 = false;
  bool best_rouge2 = false;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

// Merges computed reports with published rows, sorted by ROUGE-1 descending,
// then ROUGE-2 descending, then name. Every row holding a column maximum is
// marked. Throws kDuplicateName.
ComparisonTable compare(std::span<const RunReport> reports,
                        std::span<const PublishedRow> published);

struct SweepPoint {
  std::size_t k = 0;
  RunReport report;
};

// One evaluation per k with the provider and seed held fixed.
std::vector<SweepPoint> sweep_k(const Corpus& corpus,
                                const SummarizerConfig& config,
                                std::span<const std::size_t> k_values,
                                const EvaluateOptions& options = {});

}  // namespace vedsum

#endif  // VEDSUM_HARNESS_H_
