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

// On-disk forms of reports: report.json / report.md, comparison tables,
// k sweeps and the published-baselines file.
//
// report.json is deterministic for a given corpus and configuration except
// for the single "generated_at" line, which holds the wall-clock timestamp.

#ifndef VEDSUM_REPORT_IO_H_
#define VEDSUM_REPORT_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vedsum/harness.h"

namespace vedsum {

inline constexpr std::string_view kTimestampField = "generated_at";

// UTC, ISO 8601, second resolution.
std::string utc_timestamp();

std::string report_json(const RunReport& report, std::string_view generated_at);
RunReport report_from_json(std::string_view json);
std::string report_markdown(const RunReport& report);

// Writes <out>/report.json and <out>/report.md.
void write_report(const RunReport& report, const std::filesystem::path& out_dir,
                  std::string_view generated_at);
RunReport read_report(const std::filesystem::path& path);

// Table row formatted like "| name | 77.44 | 52.01 |".
std::string table_row(std::string_view name, double rouge1_fraction,
                      double rouge2_fraction);

// Rows of {"name","rouge1","rouge2","source":"published","citation"}.
std::vector<PublishedRow> read_baselines(const std::filesystem::path& path);

std::string comparison_json(const ComparisonTable& table);
std::string comparison_markdown(const ComparisonTable& table);

std::string sweep_json(std::span<const SweepPoint> sweep);
std::string sweep_markdown(std::span<const SweepPoint> sweep);

void write_text_file(const std::filesystem::path& path, std::string_view body);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace vedsum

#endif  // VEDSUM_REPORT_IO_H_
