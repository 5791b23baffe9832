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

#include "vedsum/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "vedsum/error.h"

namespace vedsum::text {
namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw Error(ErrorCode::kIoError, "ICU NFC normalizer unavailable");
  }
  return *norm;
}

}  // namespace

bool is_valid_utf8(std::string_view s) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0) return false;
  }
  return true;
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0) {
      throw Error(ErrorCode::kEncodingError,
                  "invalid UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    std::uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      throw Error(ErrorCode::kEncodingError, "unencodable code point");
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

std::string nfc(std::string_view s) {
  const auto& norm = nfc_instance();
  UErrorCode status = U_ZERO_ERROR;
  // Fast path: most corpus text is already NFC.
  if (norm.isNormalizedUTF8(s, status) && U_SUCCESS(status)) {
    return std::string(s);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(s);
  icu::UnicodeString normalized = norm.normalize(in, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kEncodingError, "NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view s) {
  bool ascii = true;
  for (char c : s) {
    if (static_cast<std::uint8_t>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  std::string out;
  if (ascii) {
    out.reserve(s.size());
    for (char c : s) {
      out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c);
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(s);
  u.toLower(icu::Locale::getRoot());
  u.toUTF8String(out);
  return out;
}

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  int32_t start = -1;
  while (i < len) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    const bool ws = c >= 0 && u_isUWhiteSpace(c);
    if (ws) {
      if (start >= 0) {
        out.emplace_back(s.substr(start, at - start));
        start = -1;
      }
    } else if (start < 0) {
      start = at;
    }
  }
  if (start >= 0) out.emplace_back(s.substr(start));
  return out;
}

std::string trim(std::string_view s) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t first = len;
  int32_t last = 0;
  int32_t i = 0;
  while (i < len) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0 || !u_isUWhiteSpace(c)) {
      if (first == len) first = at;
      last = i;
    }
  }
  if (first >= last) return {};
  return std::string(s.substr(first, last - first));
}

}  // namespace vedsum::text
