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

#include <gtest/gtest.h>

#include <cmath>

#include "json.hpp"
#include "test_util.h"
#include "vedsum/error.h"
#include "vedsum/report_io.h"

namespace vedsum {
namespace {

using ::vedsum::testing::TempDir;
using ::vedsum::testing::write_file;

SummarizerConfig hash_config(std::size_t k, std::uint64_t seed = 42) {
  SummarizerConfig config;
  config.provider = ProviderSpec::hash(256);
  config.k = k;
  config.seed = seed;
  return config;
}

TEST(Evaluate, ReferenceEqualToFullTextScoresOneHundred) {
  TempDir tmp;
  write_file(tmp / "a/docs/d1.txt", "Trời mưa to. Đường ngập nước.");
  write_file(tmp / "a/docs/d2.txt", "Giao thông ùn tắc.");
  write_file(tmp / "a/refs/r1.txt",
             "Trời mưa to. Đường ngập nước. Giao thông ùn tắc.");
  write_file(tmp / "a/refs/r2.txt", "Không liên quan.");
  write_file(tmp / "b/docs/d1.txt", "Một. Hai. Ba. Bốn. Năm.");
  write_file(tmp / "b/refs/r1.txt", "Một. Hai. Ba. Bốn. Năm.");
  const Corpus corpus = load_corpus(tmp.path());
  const RunReport report = evaluate(corpus, hash_config(5));
  EXPECT_EQ(report.avg_rouge1_f, 1.0);
  EXPECT_EQ(report.avg_rouge2_f, 1.0);
  EXPECT_EQ(format_percent(report.avg_rouge1_f), "100.00");
}

TEST(Evaluate, SingleClusterAverageEqualsClusterScore) {
  TempDir tmp;
  write_file(tmp / "x/docs/d.txt",
             "Hà Nội mưa lớn. Nhiều tuyến phố ngập. Người dân đi lại khó.");
  write_file(tmp / "x/refs/r1.txt", "Hà Nội mưa lớn, phố ngập.");
  write_file(tmp / "x/refs/r2.txt", "Người dân đi lại khó khăn.");
  const RunReport report = evaluate(load_corpus(tmp.path()), hash_config(2));
  ASSERT_EQ(report.per_cluster.size(), 1u);
  EXPECT_EQ(report.avg_rouge1_f, report.per_cluster[0].rouge1.score.f1);
  EXPECT_EQ(report.avg_rouge2_f, report.per_cluster[0].rouge2.score.f1);
  EXPECT_EQ(report.provider_name, "hash-256");
}

TEST(Evaluate, MiniCorpusInvariants) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const RunReport report = evaluate(corpus, hash_config(4));
  ASSERT_EQ(report.per_cluster.size(), corpus.clusters.size());
  EXPECT_TRUE(report.failures.empty());
  EXPECT_EQ(report.clusters_total, 3u);
  EXPECT_EQ(report.corpus_fingerprint, corpus.fingerprint);
  double s1 = 0.0, s2 = 0.0;
  for (const auto& cs : report.per_cluster) {
    s1 += cs.rouge1.score.f1;
    s2 += cs.rouge2.score.f1;
    ASSERT_EQ(cs.rouge1_f_per_reference.size(), cs.reference_ids.size());
    for (double f : cs.rouge1_f_per_reference) EXPECT_GE(cs.rouge1.score.f1, f);
    for (double f : cs.rouge2_f_per_reference) EXPECT_GE(cs.rouge2.score.f1, f);
    EXPECT_EQ(cs.rouge1.score.f1,
              cs.rouge1_f_per_reference[cs.rouge1.reference_index]);
  }
  EXPECT_NEAR(report.avg_rouge1_f, s1 / 3.0, 1e-9);
  EXPECT_NEAR(report.avg_rouge2_f, s2 / 3.0, 1e-9);

  // Same inputs, any job count: same report bytes.
  const std::string a = report_json(report, "t");
  EXPECT_EQ(report_json(evaluate(corpus, hash_config(4), {.rouge = {}, .jobs = 1}), "t"), a);
  EXPECT_EQ(report_json(evaluate(corpus, hash_config(4), {.rouge = {}, .jobs = 3}), "t"), a);
}

TEST(Evaluate, AllClustersFailingIsBatchError) {
  TempDir tmp;
  write_file(tmp / "empty.jsonl", "{\"provider\":\"m\",\"dim\":2}\n");
  SummarizerConfig config;
  config.provider = ProviderSpec::cache(tmp / "empty.jsonl");
  try {
    evaluate(load_corpus(testing::mini_corpus()), config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBatchErrors);
  }
}

TEST(FormatPercent, HalfUpOnExactDecimal) {
  EXPECT_EQ(format_percentage(77.44), "77.44");
  EXPECT_EQ(format_percentage(52.01), "52.01");
  EXPECT_EQ(format_percentage(0.125), "0.13");    // exact tie rounds up
  // Exact expansions checked with Python's decimal.Decimal(float):
  // 99.995 is stored just above the tie, 1.005 / 2.675 / 77.445 just below.
  EXPECT_EQ(format_percentage(99.995), "100.00");
  EXPECT_EQ(format_percentage(1.005), "1.00");
  EXPECT_EQ(format_percentage(2.675), "2.67");
  EXPECT_EQ(format_percentage(77.445), "77.44");
  EXPECT_EQ(format_percentage(99.9951), "100.00");
  EXPECT_EQ(format_percentage(0.0), "0.00");
  EXPECT_EQ(format_percent(0.7744), "77.44");
  EXPECT_EQ(format_percent(1.0), "100.00");
  EXPECT_EQ(format_percent(2.0 / 3.0), "66.67");
}

RunReport named(const std::string& name, double r1, double r2) {
  RunReport r;
  r.provider_name = name;
  r.avg_rouge1_f = r1;
  r.avg_rouge2_f = r2;
  return r;
}

TEST(Compare, ComputedRowOutranksLowerPublishedRow) {
  const std::vector<RunReport> reports = {named("viBERT4news", 0.7744, 0.5201)};
  const std::vector<PublishedRow> published = {
      {"CFVi-2", 76.38, 49.43, "published"}, {"KL", 60.2, 40.4, "published"}};
  const auto table = compare(reports, published);
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_EQ(table.rows[0].name, "viBERT4news");
  EXPECT_EQ(table.rows[0].source, RowSource::kComputed);
  EXPECT_TRUE(table.rows[0].best_rouge1);
  EXPECT_TRUE(table.rows[0].best_rouge2);
  EXPECT_EQ(table.rows[1].name, "CFVi-2");
  EXPECT_EQ(table.rows[1].rouge1_pct, 76.38);
  EXPECT_EQ(table.rows[2].name, "KL");
  EXPECT_FALSE(table.rows[2].best_rouge1);
}

TEST(Compare, EmptyPublishedKeepsComputedRows) {
  const std::vector<RunReport> reports = {named("b", 0.5, 0.2),
                                          named("a", 0.6, 0.1)};
  const auto table = compare(reports, {});
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ(table.rows[0].name, "a");
  EXPECT_EQ(table.rows[0].rouge1_pct, 60.0);
  EXPECT_EQ(table.rows[1].name, "b");
  EXPECT_TRUE(table.rows[1].best_rouge2);
  EXPECT_TRUE(compare({}, {}).rows.empty());
}

TEST(Compare, TiesOrderByRouge2ThenName) {
  const std::vector<PublishedRow> published = {{"PhoBERT-large", 77.42, 50.89, ""},
                                               {"DistilBERT", 77.42, 50.76, ""},
                                               {"B", 70.0, 40.0, ""},
                                               {"A", 70.0, 40.0, ""}};
  const auto table = compare({}, published);
  EXPECT_EQ(table.rows[0].name, "PhoBERT-large");
  EXPECT_EQ(table.rows[1].name, "DistilBERT");
  EXPECT_EQ(table.rows[2].name, "A");
  EXPECT_EQ(table.rows[3].name, "B");
  EXPECT_TRUE(table.rows[0].best_rouge1);
  EXPECT_TRUE(table.rows[1].best_rouge1);
}

TEST(Compare, DuplicateNames) {
  const std::vector<RunReport> reports = {named("KL", 0.1, 0.1)};
  const std::vector<PublishedRow> published = {{"KL", 60.2, 40.4, ""}};
  try {
    compare(reports, published);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateName);
    EXPECT_EQ(e.subject(), "KL");
  }
}

TEST(SweepK, OneReportPerK) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const std::vector<std::size_t> ks = {2, 4, 6};
  const auto sweep = sweep_k(corpus, hash_config(4), ks);
  ASSERT_EQ(sweep.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(sweep[i].k, ks[i]);
    EXPECT_EQ(sweep[i].report.config.k, ks[i]);
    EXPECT_EQ(sweep[i].report.config.seed, 42u);
    for (const auto& cs : sweep[i].report.per_cluster) {
      EXPECT_EQ(cs.selected.size(), ks[i]);
    }
  }
  EXPECT_THROW(sweep_k(corpus, hash_config(4), {}), Error);
  const std::vector<std::size_t> zero = {0};
  EXPECT_THROW(sweep_k(corpus, hash_config(4), zero), Error);
}

TEST(SweepK, SingleSentenceClustersClamp) {
  TempDir tmp;
  write_file(tmp / "a/docs/d.txt", "Một câu.");
  write_file(tmp / "a/refs/r.txt", "Một câu.");
  write_file(tmp / "b/docs/d.txt", "Câu khác.");
  write_file(tmp / "b/refs/r.txt", "Câu khác hẳn.");
  const std::vector<std::size_t> ks = {1, 3};
  const auto sweep = sweep_k(load_corpus(tmp.path()), hash_config(4), ks);
  for (const auto& p : sweep) {
    for (const auto& cs : p.report.per_cluster) {
      EXPECT_EQ(cs.selected, (std::vector<std::size_t>{0}));
    }
  }
}

TEST(SweepK, MiniCorpusGoldenCurve) {
  const auto golden = nlohmann::json::parse(
      testing::read_file(testing::data_dir() / "golden/sweep_k.json"));
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const std::vector<std::size_t> ks = {1, 2, 3, 4, 5, 6};
  const auto sweep = sweep_k(corpus, hash_config(4), ks);
  EXPECT_EQ(nlohmann::json::parse(sweep_json(sweep)), golden);
}

}  // namespace
}  // namespace vedsum
