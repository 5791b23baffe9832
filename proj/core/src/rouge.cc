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

#include "vedsum/rouge.h"

#include <algorithm>

#include "vedsum/error.h"
#include "vedsum/text.h"

namespace vedsum {
namespace {

void check_n(int n) {
  if (n != 1 && n != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "ROUGE order must be 1 or 2, got " + std::to_string(n));
  }
}

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::size_t NGramBag::total() const {
  std::size_t t = 0;
  for (const auto& [gram, count] : counts) t += count;
  return t;
}

std::vector<std::string> tokenize_for_rouge(std::string_view input,
                                            const RougeOptions& options) {
  std::string normalized = text::nfc(input);
  if (options.lowercase) normalized = text::to_lower(normalized);

  std::vector<std::string> tokens;
  for (const std::string& piece : text::split_whitespace(normalized)) {
    const std::u32string cps = text::decode_utf8(piece);
    std::size_t begin = 0;
    std::size_t end = cps.size();
    while (begin < end && text::is_punctuation(cps[begin])) ++begin;
    while (end > begin && text::is_punctuation(cps[end - 1])) --end;
    if (begin == end) continue;
    tokens.push_back(
        text::encode_utf8(std::u32string_view(cps).substr(begin, end - begin)));
  }
  return tokens;
}

NGramBag ngram_bag(std::span<const std::string> tokens, int n) {
  check_n(n);
  NGramBag bag;
  bag.n = n;
  const std::size_t width = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    ++bag.counts[NGram(tokens.begin() + i, tokens.begin() + i + width)];
  }
  return bag;
}

RougeScore rouge_n_tokens(std::span<const std::string> candidate,
                          std::span<const std::string> reference, int n) {
  const NGramBag cand = ngram_bag(candidate, n);
  const NGramBag ref = ngram_bag(reference, n);

  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand.counts) {
    auto it = ref.counts.find(gram);
    if (it != ref.counts.end()) overlap += std::min(count, it->second);
  }

  RougeScore s;
  s.n = n;
  s.precision = safe_ratio(overlap, cand.total());
  s.recall = safe_ratio(overlap, ref.total());
  const double sum = s.precision + s.recall;
  s.f1 = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
  return s;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   int n, const RougeOptions& options) {
  check_n(n);
  return rouge_n_tokens(tokenize_for_rouge(candidate, options),
                        tokenize_for_rouge(reference, options), n);
}

BestRouge rouge_best_detail(std::string_view candidate,
                            std::span<const std::string> references, int n,
                            const RougeOptions& options) {
  if (references.empty()) {
    throw Error(ErrorCode::kEmptyReferences, "no references to score against");
  }
  check_n(n);
  const auto cand = tokenize_for_rouge(candidate, options);
  BestRouge best;
  for (std::size_t i = 0; i < references.size(); ++i) {
    const RougeScore s =
        rouge_n_tokens(cand, tokenize_for_rouge(references[i], options), n);
    if (i == 0 || s.f1 > best.score.f1) {
      best.score = s;
      best.reference_index = i;
    }
  }
  return best;
}

RougeScore rouge_best(std::string_view candidate,
                      std::span<const std::string> references, int n,
                      const RougeOptions& options) {
  return rouge_best_detail(candidate, references, n, options).score;
}

}  // namespace vedsum
