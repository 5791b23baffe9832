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

#include "vedsum/report_io.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "vedsum/error.h"

namespace vedsum {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json provider_json(const ProviderSpec& spec) {
  ordered_json j;
  j["kind"] = spec.kind_name();
  j["name"] = spec.name;
  if (const auto* h = std::get_if<HashProviderSpec>(&spec.kind)) {
    j["dim"] = h->dim;
  } else if (const auto* c = std::get_if<CacheProviderSpec>(&spec.kind)) {
    j["cache_path"] = c->cache_path.generic_string();
  } else {
    const auto& h = std::get<HttpProviderSpec>(spec.kind);
    j["endpoint"] = h.endpoint_url;
    j["batch_size"] = h.batch_size;
  }
  return j;
}

ProviderSpec provider_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.value("name", std::string());
  if (kind == "hash") return ProviderSpec::hash(j.at("dim").get<std::size_t>(), name);
  if (kind == "cache") {
    return ProviderSpec::cache(j.at("cache_path").get<std::string>(), name);
  }
  if (kind == "http") {
    return ProviderSpec::http(j.at("endpoint").get<std::string>(), name,
                              j.value("batch_size", kDefaultHttpBatchSize));
  }
  throw Error(ErrorCode::kParseError, "unknown provider kind", kind);
}

ordered_json score_json(const BestRouge& best, const ClusterScore& cs,
                        const std::vector<double>& per_ref) {
  ordered_json j;
  j["precision"] = best.score.precision;
  j["recall"] = best.score.recall;
  j["f1"] = best.score.f1;
  j["best_reference"] = cs.reference_ids.at(best.reference_index);
  j["f1_per_reference"] = per_ref;
  return j;
}

BestRouge score_from_json(const nlohmann::json& j, int n,
                          const std::vector<std::string>& ref_ids,
                          std::vector<double>& per_ref) {
  BestRouge best;
  best.score.n = n;
  best.score.precision = j.at("precision").get<double>();
  best.score.recall = j.at("recall").get<double>();
  best.score.f1 = j.at("f1").get<double>();
  const std::string ref = j.at("best_reference").get<std::string>();
  for (std::size_t i = 0; i < ref_ids.size(); ++i) {
    if (ref_ids[i] == ref) best.reference_index = i;
  }
  per_ref = j.at("f1_per_reference").get<std::vector<double>>();
  return best;
}

ErrorCode error_code_from_name(std::string_view name) {
  for (int c = 0; c <= static_cast<int>(ErrorCode::kBatchErrors); ++c) {
    if (error_code_name(static_cast<ErrorCode>(c)) == name) {
      return static_cast<ErrorCode>(c);
    }
  }
  return ErrorCode::kIoError;
}

std::string bold_if(bool bold, const std::string& s) {
  return bold ? "**" + s + "**" : s;
}

std::string pct_value(double pct) { return format_percentage(pct); }

}  // namespace

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string report_json(const RunReport& report, std::string_view generated_at) {
  ordered_json j;
  j["provider_name"] = report.provider_name;
  j[std::string(kTimestampField)] = generated_at;
  j["corpus_fingerprint"] = fingerprint_hex(report.corpus_fingerprint);

  ordered_json config;
  config["provider"] = provider_json(report.config.provider);
  config["k"] = report.config.k;
  config["seed"] = report.config.seed;
  config["max_iters"] = report.config.max_iters;
  config["rel_tol"] = report.config.rel_tol;
  j["config"] = std::move(config);

  ordered_json scoring;
  scoring["lowercase"] = report.lowercase;
  scoring["text_form"] = "as-provided";
  scoring["aggregation"] = "mean over clusters of best F across references";
  j["scoring"] = std::move(scoring);

  j["clusters_total"] = report.clusters_total;
  j["clusters_scored"] = report.per_cluster.size();
  j["avg_rouge1_f"] = report.avg_rouge1_f;
  j["avg_rouge2_f"] = report.avg_rouge2_f;
  j["avg_rouge1_pct"] = format_percent(report.avg_rouge1_f);
  j["avg_rouge2_pct"] = format_percent(report.avg_rouge2_f);

  ordered_json clusters = ordered_json::array();
  for (const auto& cs : report.per_cluster) {
    ordered_json c;
    c["cluster_id"] = cs.cluster_id;
    c["selected"] = cs.selected;
    c["summary"] = cs.summary_text;
    c["references"] = cs.reference_ids;
    c["rouge1"] = score_json(cs.rouge1, cs, cs.rouge1_f_per_reference);
    c["rouge2"] = score_json(cs.rouge2, cs, cs.rouge2_f_per_reference);
    clusters.push_back(std::move(c));
  }
  j["per_cluster"] = std::move(clusters);

  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json e;
    e["cluster_id"] = f.cluster_id;
    e["error"] = error_code_name(f.code);
    e["message"] = f.message;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    RunReport r;
    r.provider_name = j.at("provider_name").get<std::string>();
    r.corpus_fingerprint = std::stoull(
        j.at("corpus_fingerprint").get<std::string>(), nullptr, 16);
    const auto& config = j.at("config");
    r.config.provider = provider_from_json(config.at("provider"));
    r.config.k = config.at("k").get<std::size_t>();
    r.config.seed = config.at("seed").get<std::uint64_t>();
    r.config.max_iters = config.at("max_iters").get<std::size_t>();
    r.config.rel_tol = config.at("rel_tol").get<double>();
    r.lowercase = j.at("scoring").at("lowercase").get<bool>();
    r.clusters_total = j.at("clusters_total").get<std::size_t>();
    r.avg_rouge1_f = j.at("avg_rouge1_f").get<double>();
    r.avg_rouge2_f = j.at("avg_rouge2_f").get<double>();
    for (const auto& c : j.at("per_cluster")) {
      ClusterScore cs;
      cs.cluster_id = c.at("cluster_id").get<std::string>();
      cs.selected = c.at("selected").get<std::vector<std::size_t>>();
      cs.summary_text = c.at("summary").get<std::string>();
      cs.reference_ids = c.at("references").get<std::vector<std::string>>();
      cs.rouge1 = score_from_json(c.at("rouge1"), 1, cs.reference_ids,
                                  cs.rouge1_f_per_reference);
      cs.rouge2 = score_from_json(c.at("rouge2"), 2, cs.reference_ids,
                                  cs.rouge2_f_per_reference);
      r.per_cluster.push_back(std::move(cs));
    }
    for (const auto& f : j.at("failures")) {
      r.failures.push_back(
          ClusterFailure{f.at("cluster_id").get<std::string>(),
                         error_code_from_name(f.at("error").get<std::string>()),
                         f.at("message").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParseError, "malformed corpus fingerprint");
  }
}

std::string table_row(std::string_view name, double rouge1_fraction,
                      double rouge2_fraction) {
  std::string row = "| ";
  row += name;
  row += " | " + format_percent(rouge1_fraction) + " | " +
         format_percent(rouge2_fraction) + " |";
  return row;
}

std::string report_markdown(const RunReport& r) {
  std::ostringstream md;
  md << "# Evaluation report\n\n";
  md << "| Model | ROUGE-1 | ROUGE-2 |\n|---|---:|---:|\n";
  md << table_row(r.provider_name, r.avg_rouge1_f, r.avg_rouge2_f) << "\n\n";
  md << "Scores are F-measures in percent: per cluster the best F over all "
        "references, averaged over clusters.\n\n";
  md << "- provider: " << r.config.provider.kind_name() << " ("
     << r.provider_name << ")\n";
  md << "- k: " << r.config.k << ", seed: " << r.config.seed << "\n";
  md << "- clusters scored: " << r.per_cluster.size() << " of "
     << r.clusters_total << "\n";
  md << "- lowercase: " << (r.lowercase ? "yes" : "no") << "\n";
  md << "- corpus fingerprint: " << fingerprint_hex(r.corpus_fingerprint)
     << "\n\n";

  md << "## Per cluster\n\n";
  md << "| Cluster | Sentences | R1 P | R1 R | R1 F | R2 P | R2 R | R2 F | Best ref (R1/R2) |\n";
  md << "|---|---|---:|---:|---:|---:|---:|---:|---|\n";
  for (const auto& cs : r.per_cluster) {
    std::string sel;
    for (std::size_t i : cs.selected) {
      if (!sel.empty()) sel += ",";
      sel += std::to_string(i);
    }
    md << "| " << cs.cluster_id << " | " << sel << " | "
       << format_percent(cs.rouge1.score.precision) << " | "
       << format_percent(cs.rouge1.score.recall) << " | "
       << format_percent(cs.rouge1.score.f1) << " | "
       << format_percent(cs.rouge2.score.precision) << " | "
       << format_percent(cs.rouge2.score.recall) << " | "
       << format_percent(cs.rouge2.score.f1) << " | "
       << cs.reference_ids[cs.rouge1.reference_index] << "/"
       << cs.reference_ids[cs.rouge2.reference_index] << " |\n";
  }
  if (!r.failures.empty()) {
    md << "\n## Failures\n\n";
    for (const auto& f : r.failures) {
      md << "- " << f.cluster_id << ": " << f.message << "\n";
    }
  }
  return md.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write", path.string());
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed", path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open", path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void write_report(const RunReport& report, const std::filesystem::path& out_dir,
                  std::string_view generated_at) {
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir / "report.json", report_json(report, generated_at));
  write_text_file(out_dir / "report.md", report_markdown(report));
}

RunReport read_report(const std::filesystem::path& path) {
  try {
    return report_from_json(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), e.message(), path.string());
  }
}

std::vector<PublishedRow> read_baselines(const std::filesystem::path& path) {
  const std::string body = read_text_file(path);
  std::vector<PublishedRow> rows;
  try {
    const auto j = nlohmann::json::parse(body);
    const auto& list = j.is_object() ? j.at("rows") : j;
    if (!list.is_array()) {
      throw Error(ErrorCode::kParseError, "baselines must be an array",
                  path.string());
    }
    for (const auto& r : list) {
      if (r.value("source", std::string("published")) != "published") {
        throw Error(ErrorCode::kParseError,
                    "baseline rows must have source \"published\"",
                    path.string());
      }
      rows.push_back(PublishedRow{r.at("name").get<std::string>(),
                                  r.at("rouge1").get<double>(),
                                  r.at("rouge2").get<double>(),
                                  r.value("citation", std::string())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what(), path.string());
  }
  return rows;
}

std::string comparison_json(const ComparisonTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json j;
    j["name"] = row.name;
    j["rouge1"] = row.rouge1_pct;
    j["rouge2"] = row.rouge2_pct;
    j["rouge1_display"] = pct_value(row.rouge1_pct);
    j["rouge2_display"] = pct_value(row.rouge2_pct);
    j["source"] = row.source == RowSource::kComputed ? "computed" : "published";
    if (!row.citation.empty()) j["citation"] = row.citation;
    j["best_rouge1"] = row.best_rouge1;
    j["best_rouge2"] = row.best_rouge2;
    rows.push_back(std::move(j));
  }
  ordered_json out;
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string comparison_markdown(const ComparisonTable& table) {
  std::ostringstream md;
  md << "| Model | ROUGE-1 | ROUGE-2 | Source |\n|---|---:|---:|---|\n";
  for (const auto& row : table.rows) {
    md << "| " << row.name << " | "
       << bold_if(row.best_rouge1, pct_value(row.rouge1_pct)) << " | "
       << bold_if(row.best_rouge2, pct_value(row.rouge2_pct)) << " | "
       << (row.source == RowSource::kComputed ? "computed" : "published");
    if (!row.citation.empty()) md << " (" << row.citation << ")";
    md << " |\n";
  }
  return md.str();
}

std::string sweep_json(std::span<const SweepPoint> sweep) {
  ordered_json points = ordered_json::array();
  for (const auto& p : sweep) {
    ordered_json j;
    j["k"] = p.k;
    j["avg_rouge1_f"] = p.report.avg_rouge1_f;
    j["avg_rouge2_f"] = p.report.avg_rouge2_f;
    j["avg_rouge1_pct"] = format_percent(p.report.avg_rouge1_f);
    j["avg_rouge2_pct"] = format_percent(p.report.avg_rouge2_f);
    j["clusters_scored"] = p.report.per_cluster.size();
    points.push_back(std::move(j));
  }
  ordered_json out;
  out["provider_name"] =
      sweep.empty() ? std::string() : sweep.front().report.provider_name;
  out["seed"] = sweep.empty() ? 0 : sweep.front().report.config.seed;
  out["points"] = std::move(points);
  return out.dump(2) + "\n";
}

std::string sweep_markdown(std::span<const SweepPoint> sweep) {
  std::ostringstream md;
  md << "| k | ROUGE-1 | ROUGE-2 |\n|---:|---:|---:|\n";
  for (const auto& p : sweep) {
    md << "| " << p.k << " | " << format_percent(p.report.avg_rouge1_f)
       << " | " << format_percent(p.report.avg_rouge2_f) << " |\n";
  }
  return md.str();
}

}  // namespace vedsum
