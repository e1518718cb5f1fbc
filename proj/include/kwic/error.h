// Copyright 2026 The KWIC Annotator Authors.
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

#ifndef KWIC_ERROR_H_
#define KWIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kwic {

// Every failure the library reports. The HTTP layer maps each code to exactly
// one status, so adding a code here forces a decision there (-Werror=switch).
enum class ErrorCode {
  // core model
  kDuplicateDocument,
  kInvalidLabel,
  kInvalidText,
  kInvalidDocument,
  // annotation engine
  kEmptySelection,
  kInvalidSelection,
  kOverlappingMention,
  kUnknownCategory,
  kUnknownEntity,
  kUnknownMention,
  kSelfMerge,
  kCategoryMismatch,
  kEntityTrashed,
  kSameLocation,
  // serializer
  kParseError,
  kImportError,
  // reconciliation
  kInvalidQid,
  kNotFound,
  kReconciliationUnavailable,
  // metadata store
  kValidationError,
  kUnknownDocument,
  kStorageError,
  kConflictError,
  kInvalidCredentials,
  kTokenExpired,
  kInvalidToken,
  // service
  kBadRequest,
};

// Machine-readable name, e.g. "OverlappingMention".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const { return code_; }

  // Offending input field, when the error is about one.
  const std::string &field() const { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace kwic

#endif  // KWIC_ERROR_H_
