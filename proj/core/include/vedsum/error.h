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

#ifndef VEDSUM_ERROR_H_
#define VEDSUM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vedsum {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  // corpus
  kMissingDirectory,
  kEmptyCluster,
  kEncodingError,
  // embed
  kEmptyInput,
  kCacheMiss,
  kDimensionMismatch,
  kTransportError,
  kProtocolError,
  kParseError,
  kDuplicateKey,
  // kmeans
  kKTooLarge,
  kNonFiniteInput,
  // rouge / harness
  kEmptyReferences,
  kDuplicateName,
  kBatchErrors,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported with this exception. `subject` names the
// offending path, key, url or cluster id when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& message() const noexcept { return message_; }

  // Copy of this error with `context` prepended to the message.
  Error with_context(std::string_view context) const;

 private:
  ErrorCode code_;
  std::string message_;
  std::string subject_;
};

// ParseError carrying the 1-based line number of the failing record.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string subject, std::size_t line);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace vedsum

#endif  // VEDSUM_ERROR_H_
