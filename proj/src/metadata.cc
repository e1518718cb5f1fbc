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

#include "kwic/metadata.h"

#include <algorithm>
#include <chrono>

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

std::string_view PublicationStatusName(PublicationStatus status) {
  switch (status) {
    case PublicationStatus::kPublished: return "published";
    case PublicationStatus::kUnpublished: return "unpublished";
  }
  return "unpublished";
}

std::optional<PublicationStatus> ParsePublicationStatus(std::string_view name) {
  if (name == "published" || name == "edited") {
    return PublicationStatus::kPublished;
  }
  if (name == "unpublished" || name == "unedited") {
    return PublicationStatus::kUnpublished;
  }
  return std::nullopt;
}

namespace {

bool AllDigits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

int ToInt(std::string_view digits) {
  int value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

[[noreturn]] void Invalid(const char *field, const std::string &message) {
  throw Error(ErrorCode::kValidationError, message, field);
}

void CheckList(const char *field, const std::vector<std::string> &values) {
  for (const std::string &v : values) {
    if (!IsValidUtf8(v) || TrimUtf8(v).empty()) {
      Invalid(field, std::string(field) + " entries must be non-empty text");
    }
  }
}

void CheckText(const char *field, const std::string &value) {
  if (!IsValidUtf8(value)) {
    Invalid(field, std::string(field) + " is not valid UTF-8");
  }
}

}  // namespace

bool IsValidDocumentNumber(std::string_view number) {
  if (number.size() != 3 || !AllDigits(number)) return false;
  const int value = ToInt(number);
  return value >= 1 && value <= 999;
}

std::optional<EventDateShape> ClassifyEventDate(std::string_view date) {
  if (date.empty()) return EventDateShape::kNone;
  if (date.size() == 4 && AllDigits(date)) {
    if (ToInt(date) == 0) return std::nullopt;
    return EventDateShape::kYear;
  }
  if (date.size() == 10 && date[2] == '-' && date[5] == '-' &&
      AllDigits(date.substr(0, 2)) && AllDigits(date.substr(3, 2)) &&
      AllDigits(date.substr(6, 4))) {
    const int year = ToInt(date.substr(6, 4));
    if (year == 0) return std::nullopt;
    const std::chrono::year_month_day ymd{
        std::chrono::year{year},
        std::chrono::month{static_cast<unsigned>(ToInt(date.substr(3, 2)))},
        std::chrono::day{static_cast<unsigned>(ToInt(date.substr(0, 2)))}};
    if (!ymd.ok()) return std::nullopt;
    return EventDateShape::kDayMonthYear;
  }
  return std::nullopt;
}

void ValidateMetadata(const MetadataRecord &record) {
  if (!IsValidDocumentNumber(record.document_number)) {
    Invalid("document_number",
            "document_number must be three digits from 001 to 999, got \"" +
                record.document_number + "\"");
  }
  CheckText("author_role", record.author_role);
  CheckText("researcher_curator", record.researcher_curator);
  CheckText("abstract", record.abstract);
  CheckList("document_type", record.document_type);
  CheckList("document_subject", record.document_subject);
  CheckList("provenance", record.provenance);
  CheckText("event_place", record.event_place);
  if (!ClassifyEventDate(record.event_date)) {
    Invalid("event_date",
            "event_date must be DD-MM-YYYY or YYYY, got \"" +
                record.event_date + "\"");
  }
  CheckText("additional_notes", record.additional_notes);
}

Vocabulary DefaultVocabulary() {
  Vocabulary v;
  v.author_role = {"Author", "Co-author", "Editor", "Recipient", "Speaker",
                   "Translator"};
  v.document_type = {"Article", "Interview", "Letter", "Note", "Report",
                     "Speech", "Telegram"};
  v.document_subject = {"Culture", "Economy", "Foreign policy", "Politics",
                        "Religion", "Society"};
  return v;
}

}  // namespace kwic
