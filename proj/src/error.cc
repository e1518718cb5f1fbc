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

#include "kwic/error.h"

namespace kwic {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateDocument: return "DuplicateDocument";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kInvalidText: return "InvalidText";
    case ErrorCode::kInvalidDocument: return "InvalidDocument";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kOverlappingMention: return "OverlappingMention";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kUnknownMention: return "UnknownMention";
    case ErrorCode::kSelfMerge: return "SelfMerge";
    case ErrorCode::kCategoryMismatch: return "CategoryMismatch";
    case ErrorCode::kEntityTrashed: return "EntityTrashed";
    case ErrorCode::kSameLocation: return "SameLocation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kImportError: return "ImportError";
    case ErrorCode::kInvalidQid: return "InvalidQid";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kReconciliationUnavailable:
      return "ReconciliationUnavailable";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownDocument: return "UnknownDocument";
    case ErrorCode::kStorageError: return "StorageError";
    case ErrorCode::kConflictError: return "ConflictError";
    case ErrorCode::kInvalidCredentials: return "InvalidCredentials";
    case ErrorCode::kTokenExpired: return "TokenExpired";
    case ErrorCode::kInvalidToken: return "InvalidToken";
    case ErrorCode::kBadRequest: return "BadRequest";
  }
  return "Unknown";
}

}  // namespace kwic
