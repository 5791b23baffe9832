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

#include "cli.h"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vedsum/corpus.h"
#include "vedsum/embed.h"
#include "vedsum/error.h"
#include "vedsum/harness.h"
#include "vedsum/report_io.h"
#include "vedsum/rouge.h"
#include "vedsum/summarize.h"

namespace fs = std::filesystem;

namespace vedsum::cli {
namespace {

struct Options {
  std::string corpus;
  std::string provider = "hash";
  std::size_t dim = kDefaultHashDim;
  std::string cache;
  std::string endpoint;
  std::string provider_name;
  std::size_t batch_size = kDefaultHttpBatchSize;
  std::size_t k = kDefaultSummarySentences;
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 0;
  std::string out;
  std::string baselines;
  std::vector<std::string> reports;
  std::string k_values = "1,2,3,4,5,6";
  bool no_lowercase = false;
  bool sentences_only = false;
  std::string cand;
  std::vector<std::string> refs;
  int n = 0;
};

std::string quoted(std::string_view s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    if (c == '\n') {
      q += "\\n";
      continue;
    }
    q += c;
  }
  return q + "\"";
}

void report_error(std::ostream& err, const Error& e) {
  err << "error: code=" << error_code_name(e.code());
  if (!e.subject().empty()) err << " subject=" << quoted(e.subject());
  err << " message=" << quoted(e.message()) << "\n";
}

void report_failures(std::ostream& err,
                     const std::vector<ClusterFailure>& failures) {
  for (const auto& f : failures) {
    err << "error: code=" << error_code_name(f.code)
        << " cluster=" << quoted(f.cluster_id)
        << " message=" << quoted(f.message) << "\n";
  }
}

void report_warnings(std::ostream& err, const Corpus& corpus) {
  for (const auto& w : corpus.warnings) {
    err << "warning: message=" << quoted(w) << "\n";
  }
}

void add_provider_flags(CLI::App* sub, Options& o) {
  sub->add_option("--provider", o.provider, "Embedding provider")
      ->check(CLI::IsMember({"hash", "cache", "http"}))
      ->capture_default_str();
  sub->add_option("--dim", o.dim, "Hash embedding dimension")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  sub->add_option("--cache", o.cache, "Embedding cache file (cache provider)");
  sub->add_option("--endpoint", o.endpoint, "Embedding service URL (http provider)")
      ->envname("VEDSUM_ENDPOINT");
  sub->add_option("--provider-name", o.provider_name,
                  "Name reported for this provider");
  sub->add_option("--batch-size", o.batch_size, "Sentences per HTTP request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_run_flags(CLI::App* sub, Options& o) {
  sub->add_option("--corpus", o.corpus, "Corpus root directory")->required();
  add_provider_flags(sub, o);
  sub->add_option("--k", o.k, "Summary sentences (K-means clusters)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "K-means seed")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Concurrent clusters (default: all cores)")
      ->check(CLI::PositiveNumber);
}

ProviderSpec provider_spec(const Options& o) {
  if (o.provider == "cache") {
    if (o.cache.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--provider cache needs --cache");
    }
    return ProviderSpec::cache(o.cache, o.provider_name);
  }
  if (o.provider == "http") {
    if (o.endpoint.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--provider http needs --endpoint or VEDSUM_ENDPOINT");
    }
    return ProviderSpec::http(o.endpoint, o.provider_name, o.batch_size);
  }
  return ProviderSpec::hash(o.dim, o.provider_name);
}

SummarizerConfig summarizer_config(const Options& o) {
  SummarizerConfig c;
  c.provider = provider_spec(o);
  c.k = o.k;
  c.seed = o.seed;
  return c;
}

std::vector<std::size_t> parse_k_values(const std::string& csv) {
  std::vector<std::size_t> ks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v == 0) {
      throw Error(ErrorCode::kInvalidArgument, "bad k value", item);
    }
    ks.push_back(static_cast<std::size_t>(v));
  }
  if (ks.empty()) throw Error(ErrorCode::kInvalidArgument, "no k values");
  return ks;
}

std::size_t jobs_of(const Options& o) {
  return o.jobs == 0 ? default_jobs() : o.jobs;
}

int cmd_summarize(const Options& o, std::ostream& out, std::ostream& err) {
  const SummarizerConfig config = summarizer_config(o);
  const Corpus corpus = load_corpus(o.corpus);
  report_warnings(err, corpus);
  SummaryBatch batch = summarize_corpus(corpus, config, jobs_of(o));
  report_failures(err, batch.failures);
  write_summaries(batch.summaries, o.out);
  out << "summarized " << batch.summaries.size() << " of "
      << corpus.clusters.size() << " clusters into " << o.out << "\n";
  if (batch.summaries.empty()) return kExitInvalid;
  return batch.failures.empty() ? kExitOk : kExitPartial;
}

int cmd_evaluate(const Options& o, std::ostream& out, std::ostream& err) {
  const SummarizerConfig config = summarizer_config(o);
  const Corpus corpus = load_corpus(o.corpus);
  report_warnings(err, corpus);
  EvaluateOptions eo;
  eo.rouge.lowercase = !o.no_lowercase;
  eo.jobs = jobs_of(o);
  const RunReport report = evaluate(corpus, config, eo);
  report_failures(err, report.failures);
  write_report(report, o.out, utc_timestamp());

  std::vector<Summary> summaries;
  for (const auto& cs : report.per_cluster) {
    summaries.push_back(Summary{cs.cluster_id, cs.selected, cs.summary_text});
  }
  write_summaries(summaries, o.out);

  out << "| Model | ROUGE-1 | ROUGE-2 |\n|---|---:|---:|\n"
      << table_row(report.provider_name, report.avg_rouge1_f,
                   report.avg_rouge2_f)
      << "\n";
  return report.failures.empty() ? kExitOk : kExitPartial;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const SummarizerConfig config = summarizer_config(o);
  const auto ks = parse_k_values(o.k_values);
  const Corpus corpus = load_corpus(o.corpus);
  report_warnings(err, corpus);
  EvaluateOptions eo;
  eo.rouge.lowercase = !o.no_lowercase;
  eo.jobs = jobs_of(o);
  const auto sweep = sweep_k(corpus, config, ks, eo);
  bool partial = false;
  for (const auto& p : sweep) {
    report_failures(err, p.report.failures);
    partial = partial || !p.report.failures.empty();
  }
  fs::create_directories(o.out);
  write_text_file(fs::path(o.out) / "sweep.json", sweep_json(sweep));
  const std::string md = sweep_markdown(sweep);
  write_text_file(fs::path(o.out) / "sweep.md", md);
  out << md;
  return partial ? kExitPartial : kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream&) {
  if (o.reports.empty() && o.baselines.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "compare needs --report and/or --baselines");
  }
  std::vector<RunReport> reports;
  for (const auto& path : o.reports) reports.push_back(read_report(path));
  std::vector<PublishedRow> published;
  if (!o.baselines.empty()) published = read_baselines(o.baselines);
  const ComparisonTable table = compare(reports, published);
  const std::string md = comparison_markdown(table);
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    write_text_file(fs::path(o.out) / "comparison.json", comparison_json(table));
    write_text_file(fs::path(o.out) / "comparison.md", md);
  }
  out << md;
  return kExitOk;
}

int cmd_embed_cache(const Options& o, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_corpus(o.corpus);
  report_warnings(err, corpus);
  std::vector<SentenceRecord> all;
  for (const auto& cluster : corpus.clusters) {
    auto s = concatenate_cluster(cluster);
    all.insert(all.end(), s.begin(), s.end());
  }
  fs::create_directories(o.out);
  {
    std::ofstream sents(fs::path(o.out) / "sentences.jsonl",
                        std::ios::binary | std::ios::trunc);
    if (!sents) {
      throw Error(ErrorCode::kIoError, "cannot write sentences.jsonl", o.out);
    }
    for (const auto& s : all) {
      nlohmann::ordered_json row;
      row["key"] = s.key();
      row["text"] = s.text;
      sents << row.dump() << '\n';
    }
  }
  out << "wrote " << all.size() << " sentences to "
      << (fs::path(o.out) / "sentences.jsonl").string() << "\n";
  if (o.sentences_only) return kExitOk;

  const EmbeddingMatrix matrix = embed_sentences(provider_spec(o), all);
  const fs::path cache_path = fs::path(o.out) / "embeddings.jsonl";
  write_cache(matrix, cache_path);
  out << "wrote " << matrix.rows() << " vectors (dim " << matrix.dim()
      << ") to " << cache_path.string() << "\n";
  return kExitOk;
}

void print_score(std::ostream& out, const RougeScore& s) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "ROUGE-%d P=%.4f R=%.4f F=%.4f", s.n,
                s.precision, s.recall, s.f1);
  out << buf;
}

int cmd_rouge(const Options& o, std::ostream& out, std::ostream&) {
  const std::string cand = read_text_file(o.cand);
  std::vector<std::string> refs;
  for (const auto& r : o.refs) refs.push_back(read_text_file(r));
  RougeOptions ro;
  ro.lowercase = !o.no_lowercase;
  std::vector<int> orders = o.n == 0 ? std::vector<int>{1, 2}
                                     : std::vector<int>{o.n};
  for (int n : orders) {
    const BestRouge best = rouge_best_detail(cand, refs, n, ro);
    print_score(out, best.score);
    if (refs.size() > 1) out << " best_reference=" << o.refs[best.reference_index];
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Extractive multi-document summarization and ROUGE evaluation",
               "vedsum"};
  app.require_subcommand(1);

  auto* summarize = app.add_subcommand("summarize", "Summarize every cluster");
  add_run_flags(summarize, o);
  summarize->add_option("--out", o.out, "Output directory")->required();

  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Summarize and score against references");
  add_run_flags(evaluate_cmd, o);
  evaluate_cmd->add_option("--out", o.out, "Output directory")->required();
  evaluate_cmd->add_flag("--no-lowercase", o.no_lowercase,
                         "Score case-sensitively");

  auto* sweep = app.add_subcommand("sweep-k", "Evaluate several values of k");
  add_run_flags(sweep, o);
  sweep->add_option("--out", o.out, "Output directory")->required();
  sweep->add_option("--k-values", o.k_values, "Comma-separated k values")
      ->capture_default_str();
  sweep->add_flag("--no-lowercase", o.no_lowercase, "Score case-sensitively");

  auto* compare_cmd =
      app.add_subcommand("compare", "Merge reports with published baselines");
  compare_cmd->add_option("--report", o.reports, "report.json (repeatable)")
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--baselines", o.baselines, "baselines.json")
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--out", o.out, "Output directory");

  auto* embed_cache =
      app.add_subcommand("embed-cache", "Export sentences and embeddings");
  embed_cache->add_option("--corpus", o.corpus, "Corpus root directory")
      ->required();
  add_provider_flags(embed_cache, o);
  embed_cache->add_option("--out", o.out, "Output directory")->required();
  embed_cache->add_flag("--sentences-only", o.sentences_only,
                        "Only write sentences.jsonl");

  auto* rouge = app.add_subcommand("rouge", "Score one candidate file");
  rouge->add_option("--cand", o.cand, "Candidate summary file")
      ->required()
      ->check(CLI::ExistingFile);
  rouge->add_option("--ref", o.refs, "Reference file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  rouge->add_option("--n", o.n, "ROUGE order (default: 1 and 2)")
      ->check(CLI::IsMember({1, 2}));
  rouge->add_flag("--no-lowercase", o.no_lowercase, "Score case-sensitively");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: code=Usage message=" << quoted(e.what()) << "\n";
    err << app.help();
    return kExitInvalid;
  }

  try {
    if (summarize->parsed()) return cmd_summarize(o, out, err);
    if (evaluate_cmd->parsed()) return cmd_evaluate(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (compare_cmd->parsed()) return cmd_compare(o, out, err);
    if (embed_cache->parsed()) return cmd_embed_cache(o, out, err);
    if (rouge->parsed()) return cmd_rouge(o, out, err);
  } catch (const Error& e) {
    report_error(err, e);
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: code=Internal message=" << quoted(e.what()) << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace vedsum::cli
