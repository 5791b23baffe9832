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

// ROUGE-N with clipped n-gram counts and multi-reference best-F selection.

#ifndef VEDSUM_ROUGE_H_
#define VEDSUM_ROUGE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vedsum {

struct RougeScore {
  int n = 1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const RougeScore&, const RougeScore&) = default;
};

struct RougeOptions {
  bool lowercase = true;
};

using NGram = std::vector<std::string>;

struct NGramBag {
  int n = 1;
  std::map<NGram, std::size_t> counts;

  // max(0, tokens - n + 1).
  std::size_t total() const;
};

// NFC, optional lowercasing, split on Unicode whitespace, strip leading and
// trailing punctuation (category P) from each token, drop empty tokens.
std::vector<std::string> tokenize_for_rouge(std::string_view text,
                                            const RougeOptions& options = {});

NGramBag ngram_bag(std::span<const std::string> tokens, int n);

// Throws kInvalidArgument unless n is 1 or 2.
RougeScore rouge_n_tokens(std::span<const std::string> candidate,
                          std::span<const std::string> reference, int n);
RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   int n, const RougeOptions& options = {});

struct BestRouge {
  RougeScore score;
  std::size_t reference_index = 0;
};

// The full (P, R, F) triple of the reference with the highest F; ties go to
// the lowest reference index. Throws kEmptyReferences.
BestRouge rouge_best_detail(std::string_view candidate,
                            std::span<const std::string> references, int n,
                            const RougeOptions& options = {});
RougeScore rouge_best(std::string_view candidate,
                      std::span<const std::string> references, int n,
                      const RougeOptions& options = {});

}  // namespace vedsum

#endif  // VEDSUM_ROUGE_H_
