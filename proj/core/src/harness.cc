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

#include "vedsum/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "vedsum/error.h"

namespace vedsum {
namespace {

ClusterScore score_cluster(const Cluster& cluster, Summary summary,
                           const RougeOptions& rouge) {
  ClusterScore cs;
  cs.cluster_id = cluster.cluster_id;
  cs.selected = std::move(summary.selected);
  cs.summary_text = std::move(summary.text);

  std::vector<std::string> refs;
  refs.reserve(cluster.references.size());
  for (const auto& r : cluster.references) {
    cs.reference_ids.push_back(r.ref_id);
    refs.push_back(r.text);
  }
  cs.rouge1 = rouge_best_detail(cs.summary_text, refs, 1, rouge);
  cs.rouge2 = rouge_best_detail(cs.summary_text, refs, 2, rouge);
  for (const auto& r : refs) {
    cs.rouge1_f_per_reference.push_back(rouge_n(cs.summary_text, r, 1, rouge).f1);
    cs.rouge2_f_per_reference.push_back(rouge_n(cs.summary_text, r, 2, rouge).f1);
  }
  return cs;
}

}  // namespace

RunReport evaluate(const Corpus& corpus, const SummarizerConfig& config,
                   EmbeddingProvider& provider, const EvaluateOptions& options) {
  SummaryBatch batch = summarize_corpus(corpus, config, provider, options.jobs);

  RunReport report;
  report.provider_name = provider.name();
  report.config = config;
  report.lowercase = options.rouge.lowercase;
  report.corpus_fingerprint = corpus.fingerprint;
  report.clusters_total = corpus.clusters.size();
  report.failures = std::move(batch.failures);

  if (batch.summaries.empty()) {
    std::string detail;
    for (const auto& f : report.failures) {
      if (!detail.empty()) detail += "; ";
      detail += f.message;
    }
    throw Error(ErrorCode::kBatchErrors, "no cluster was summarized: " + detail);
  }

  // Summaries arrive in corpus order; scoring is cheap and kept sequential so
  // the reduction order is fixed.
  std::size_t ci = 0;
  for (Summary& s : batch.summaries) {
    while (corpus.clusters[ci].cluster_id != s.cluster_id) ++ci;
    report.per_cluster.push_back(
        score_cluster(corpus.clusters[ci], std::move(s), options.rouge));
  }

  double sum1 = 0.0;
  double sum2 = 0.0;
  for (const auto& cs : report.per_cluster) {
    sum1 += cs.rouge1.score.f1;
    sum2 += cs.rouge2.score.f1;
  }
  const double n = static_cast<double>(report.per_cluster.size());
  report.avg_rouge1_f = sum1 / n;
  report.avg_rouge2_f = sum2 / n;
  return report;
}

RunReport evaluate(const Corpus& corpus, const SummarizerConfig& config,
                   const EvaluateOptions& options) {
  auto provider = make_provider(config.provider);
  return evaluate(corpus, config, *provider, options);
}

std::string format_percent(double fraction) {
  return format_percentage(fraction * 100.0);
}

std::string format_percentage(double pct) {
  if (!std::isfinite(pct)) return "nan";
  // glibc prints exact decimal expansions, so the digit after the second
  // decimal decides half-up rounding without binary noise.
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.80f", std::fabs(pct));
  std::string s(buf);
  const std::size_t dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1, 2);
  if (s[dot + 3] >= '5') {
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
      if (i == 0) digits.insert(digits.begin(), '1');
    }
  }
  std::string out = digits.substr(0, digits.size() - 2) + "." +
                     digits.substr(digits.size() - 2);
  if (std::signbit(pct) && out != "0.00") out.insert(out.begin(), '-');
  return out;
}

ComparisonTable compare(std::span<const RunReport> reports,
                        std::span<const PublishedRow> published) {
  ComparisonTable table;
  std::set<std::string> names;
  auto add = [&](ComparisonRow row) {
    if (!names.insert(row.name).second) {
      throw Error(ErrorCode::kDuplicateName, "row name appears twice",
                  row.name);
    }
    table.rows.push_back(std::move(row));
  };
  for (const auto& r : reports) {
    ComparisonRow row;
    row.name = r.provider_name;
    row.rouge1_pct = r.avg_rouge1_f * 100.0;
    row.rouge2_pct = r.avg_rouge2_f * 100.0;
    row.source = RowSource::kComputed;
    add(std::move(row));
  }
  for (const auto& p : published) {
    ComparisonRow row;
    row.name = p.name;
    row.rouge1_pct = p.rouge1;
    row.rouge2_pct = p.rouge2;
    row.source = RowSource::kPublished;
    row.citation = p.citation;
    add(std::move(row));
  }

  std::sort(table.rows.begin(), table.rows.end(),
            [](const ComparisonRow& a, const ComparisonRow& b) {
              if (a.rouge1_pct != b.rouge1_pct) return a.rouge1_pct > b.rouge1_pct;
              if (a.rouge2_pct != b.rouge2_pct) return a.rouge2_pct > b.rouge2_pct;
              return a.name < b.name;
            });

  if (!table.rows.empty()) {
    double max1 = table.rows.front().rouge1_pct;
    double max2 = table.rows.front().rouge2_pct;
    for (const auto& row : table.rows) {
      max1 = std::max(max1, row.rouge1_pct);
      max2 = std::max(max2, row.rouge2_pct);
    }
    for (auto& row : table.rows) {
      row.best_rouge1 = row.rouge1_pct == max1;
      row.best_rouge2 = row.rouge2_pct == max2;
    }
  }
  return table;
}

std::vector<SweepPoint> sweep_k(const Corpus& corpus,
                                const SummarizerConfig& config,
                                std::span<const std::size_t> k_values,
                                const EvaluateOptions& options) {
  if (k_values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "k sweep needs at least one k");
  }
  for (std::size_t k : k_values) {
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  auto provider = make_provider(config.provider);
  std::vector<SweepPoint> out;
  out.reserve(k_values.size());
  for (std::size_t k : k_values) {
    SummarizerConfig c = config;
    c.k = k;
    out.push_back(SweepPoint{k, evaluate(corpus, c, *provider, options)});
  }
  return out;
}

}  // namespace vedsum
