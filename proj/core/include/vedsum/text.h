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

// Unicode helpers shared by the corpus loader, the hashing embedder and the
// ROUGE tokenizer. Strings are UTF-8 throughout; properties come from ICU.

#ifndef VEDSUM_TEXT_H_
#define VEDSUM_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vedsum::text {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t h = kFnvOffsetBasis) {
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

bool is_valid_utf8(std::string_view s);

// Throws Error(kEncodingError) on malformed input.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

std::string nfc(std::string_view s);
// Full Unicode lowercase mapping, root locale.
std::string to_lower(std::string_view s);

bool is_whitespace(char32_t c);
// General category P*.
bool is_punctuation(char32_t c);

// Splits on runs of Unicode White_Space; never returns empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);
std::string trim(std::string_view s);

}  // namespace vedsum::text

#endif  // VEDSUM_TEXT_H_
