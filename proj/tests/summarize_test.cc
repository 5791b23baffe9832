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

#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "json.hpp"
#include "test_util.h"
#include "vedsum/error.h"

namespace vedsum {
namespace {

using ::vedsum::testing::TempDir;
using ::vedsum::testing::write_file;

Cluster make_cluster(const std::string& id,
                     const std::vector<std::vector<std::string>>& docs) {
  Cluster c;
  c.cluster_id = id;
  std::size_t global = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    Document doc;
    doc.doc_id = "d" + std::to_string(d + 1);
    for (std::size_t s = 0; s < docs[d].size(); ++s) {
      doc.sentences.push_back({id, doc.doc_id, s, global++, docs[d][s]});
    }
    c.documents.push_back(std::move(doc));
  }
  c.references.push_back({"r1", "tham chiếu"});
  return c;
}

SummarizerConfig hash_config(std::size_t k, std::uint64_t seed = 42) {
  SummarizerConfig config;
  config.provider = ProviderSpec::hash(256);
  config.k = k;
  config.seed = seed;
  return config;
}

TEST(SummarizeCluster, FewerSentencesThanKKeepsAllInOrder) {
  const Cluster c = make_cluster("c", {{"Một hai.", "Ba bốn."}, {"Năm sáu."}});
  const Summary s = summarize_cluster(c, hash_config(4));
  EXPECT_EQ(s.selected, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(s.text, "Một hai. Ba bốn. Năm sáu.");
}

TEST(SummarizeCluster, SingleSentence) {
  const Cluster c = make_cluster("c", {{"Chỉ một câu."}});
  for (std::size_t k : {1, 2, 9}) {
    const Summary s = summarize_cluster(c, hash_config(k));
    EXPECT_EQ(s.selected, (std::vector<std::size_t>{0}));
    EXPECT_EQ(s.text, "Chỉ một câu.");
  }
}

TEST(SummarizeCluster, ZeroKIsInvalid) {
  const Cluster c = make_cluster("c", {{"a."}});
  try {
    summarize_cluster(c, hash_config(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(SummarizeCluster, SelectionIsDistinctSortedAndSized) {
  std::vector<std::string> doc;
  for (int i = 0; i < 30; ++i) {
    doc.push_back("câu số " + std::to_string(i % 7) + " về chủ đề " +
                  std::to_string(i % 3) + ".");
  }
  const Cluster c = make_cluster("c", {doc});
  for (std::size_t k = 1; k <= 8; ++k) {
    const Summary s = summarize_cluster(c, hash_config(k, 1000 + k));
    ASSERT_EQ(s.selected.size(), k);
    EXPECT_TRUE(std::is_sorted(s.selected.begin(), s.selected.end()));
    EXPECT_EQ(std::set<std::size_t>(s.selected.begin(), s.selected.end()).size(),
              k);
    std::string text;
    for (std::size_t idx : s.selected) {
      if (!text.empty()) text += ' ';
      text += doc[idx];
    }
    EXPECT_EQ(s.text, text);
  }
}

TEST(SummarizeCluster, MiniCorpusGoldenC01) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const auto golden = nlohmann::json::parse(
      testing::read_file(testing::data_dir() / "golden/c01_summary_k4.json"));
  const Summary s = summarize_cluster(*corpus.find("c01"), hash_config(4, 42));
  EXPECT_EQ(s.cluster_id, "c01");
  EXPECT_EQ(s.selected, golden["selected"].get<std::vector<std::size_t>>());
  EXPECT_EQ(s.text, golden["text"].get<std::string>());
}

TEST(SummarizeCluster, MiniCorpusGoldenC01AtTwo) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const auto golden = nlohmann::json::parse(testing::read_file(
      testing::data_dir() / "golden/c01_k2_selection.json"));
  const Summary s = summarize_cluster(*corpus.find("c01"), hash_config(2, 42));
  EXPECT_EQ(s.selected, golden["selected"].get<std::vector<std::size_t>>());
}

TEST(SummarizeCorpus, OrderAndDeterminismAcrossJobs) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  const auto one = summarize_corpus(corpus, hash_config(4), 1);
  ASSERT_EQ(one.summaries.size(), 3u);
  EXPECT_TRUE(one.failures.empty());
  EXPECT_EQ(one.summaries[0].cluster_id, "c01");
  EXPECT_EQ(one.summaries[1].cluster_id, "c02");
  EXPECT_EQ(one.summaries[2].cluster_id, "c03");
  for (std::size_t jobs : {2, 3, 8}) {
    EXPECT_EQ(summarize_corpus(corpus, hash_config(4), jobs).summaries,
              one.summaries);
  }
}

TEST(SummarizeCorpus, CorruptCacheEntryIsIsolated) {
  const Corpus corpus = load_corpus(testing::mini_corpus());
  // Cache covering every sentence except the first one of c02.
  std::vector<std::string> keys;
  std::vector<double> values;
  for (const auto& c : corpus.clusters) {
    for (const auto& s : concatenate_cluster(c)) {
      if (c.cluster_id == "c02" && s.global_index == 0) continue;
      keys.push_back(s.key());
      const auto v = hash_embed(s.text, 16);
      values.insert(values.end(), v.begin(), v.end());
    }
  }
  TempDir tmp;
  write_cache(EmbeddingMatrix("hash-16", 16, keys, values), tmp / "c.jsonl");

  SummarizerConfig config;
  config.provider = ProviderSpec::cache(tmp / "c.jsonl");
  const auto batch = summarize_corpus(corpus, config, 2);
  ASSERT_EQ(batch.summaries.size(), 2u);
  EXPECT_EQ(batch.summaries[0].cluster_id, "c01");
  EXPECT_EQ(batch.summaries[1].cluster_id, "c03");
  ASSERT_EQ(batch.failures.size(), 1u);
  EXPECT_EQ(batch.failures[0].cluster_id, "c02");
  EXPECT_EQ(batch.failures[0].code, ErrorCode::kCacheMiss);
  EXPECT_NE(batch.failures[0].message.find("c02/d1/0"), std::string::npos);

  // Cache rows equal the hash vectors, so the surviving clusters match a
  // direct hash run.
  SummarizerConfig hashed = hash_config(4);
  hashed.provider = ProviderSpec::hash(16);
  const auto direct = summarize_corpus(corpus, hashed, 1);
  EXPECT_EQ(batch.summaries[0], direct.summaries[0]);
  EXPECT_EQ(batch.summaries[1], direct.summaries[2]);
}

TEST(SummarizeCorpus, TwoHundredSyntheticClusters) {
  // 200 clusters of ~49 sentences, about the size of the reference corpus.
  Corpus corpus;
  std::uint64_t state = 9;
  auto word = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return "w" + std::to_string((state >> 33) % 500);
  };
  for (int c = 0; c < 200; ++c) {
    std::vector<std::vector<std::string>> docs(3);
    for (auto& doc : docs) {
      for (int s = 0; s < 16; ++s) {
        std::string sent;
        for (int w = 0; w < 20; ++w) sent += (w ? " " : "") + word();
        doc.push_back(sent + ".");
      }
    }
    corpus.clusters.push_back(make_cluster("c" + std::to_string(c), docs));
  }
  const auto start = std::chrono::steady_clock::now();
  SummarizerConfig config;
  config.provider = ProviderSpec::hash(768);
  const auto batch = summarize_corpus(corpus, config);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  EXPECT_EQ(batch.summaries.size(), 200u);
  EXPECT_TRUE(batch.failures.empty());
  EXPECT_LT(secs, 60.0);
  RecordProperty("seconds", std::to_string(secs));
}

TEST(WriteSummaries, TextAndJsonl) {
  TempDir tmp;
  const std::vector<Summary> s = {{"c01", {0, 2}, "A. C."},
                                  {"c02", {1}, "Câu \"trích\"."}};
  write_summaries(s, tmp / "out");
  EXPECT_EQ(testing::read_file(tmp / "out/c01.sum.txt"), "A. C.\n");
  EXPECT_EQ(testing::read_file(tmp / "out/summaries.jsonl"),
            "{\"cluster_id\":\"c01\",\"selected\":[0,2],\"text\":\"A. C.\"}\n"
            "{\"cluster_id\":\"c02\",\"selected\":[1],"
            "\"text\":\"Câu \\\"trích\\\".\"}\n");
}

}  // namespace
}  // namespace vedsum
