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

// Bibliographic description attached to a document.

#ifndef KWIC_METADATA_H_
#define KWIC_METADATA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kwic {

enum class PublicationStatus { kPublished, kUnpublished };

// "published" / "unpublished". Parsing also accepts "edited" / "unedited".
std::string_view PublicationStatusName(PublicationStatus status);
std::optional<PublicationStatus> ParsePublicationStatus(std::string_view name);

struct MetadataRecord {
  std::string document_number;  // "001" .. "999"
  std::string author_role;
  std::string researcher_curator;
  std::string abstract;
  std::vector<std::string> document_type;
  std::vector<std::string> document_subject;
  std::optional<PublicationStatus> publication_status;
  std::vector<std::string> provenance;
  std::string event_place;
  std::string event_date;  // "DD-MM-YYYY", "YYYY" or empty
  std::string additional_notes;

  bool operator==(const MetadataRecord &) const = default;
};

bool IsValidDocumentNumber(std::string_view number);

enum class EventDateShape { kNone, kYear, kDayMonthYear };

// Classifies a date string; kNone for the empty string. Returns nullopt when
// the string has neither shape or names a day that does not exist.
std::optional<EventDateShape> ClassifyEventDate(std::string_view date);

// Throws ValidationError naming the first offending field.
void ValidateMetadata(const MetadataRecord &record);

// Suggestion lists for the open-vocabulary fields.
struct Vocabulary {
  std::vector<std::string> author_role;
  std::vector<std::string> document_type;
  std::vector<std::string> document_subject;
};

Vocabulary DefaultVocabulary();

}  // namespace kwic

#endif  // KWIC_METADATA_H_
