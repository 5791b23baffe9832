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

#include "vedsum/error.h"

#include <utility>

namespace vedsum {
namespace {

std::string compose(ErrorCode code, const std::string& message,
                    const std::string& subject) {
  std::string out(error_code_name(code));
  out += ": ";
  out += message;
  if (!subject.empty()) {
    out += " [";
    out += subject;
    out += "]";
  }
  return out;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMissingDirectory: return "MissingDirectory";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kCacheMiss: return "CacheMiss";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTransportError: return "TransportError";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kEmptyReferences: return "EmptyReferences";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kBatchErrors: return "BatchErrors";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string subject)
    : std::runtime_error(compose(code, message, subject)),
      code_(code),
      message_(std::move(message)),
      subject_(std::move(subject)) {}

Error Error::with_context(std::string_view context) const {
  std::string message(context);
  message += ": ";
  message += message_;
  return Error(code_, std::move(message), subject_);
}

ParseError::ParseError(std::string message, std::string subject,
                       std::size_t line)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + message,
            std::move(subject)),
      line_(line) {}

}  // namespace vedsum
