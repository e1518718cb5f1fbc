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

#include <gtest/gtest.h>

#include "kwic/error.h"
#include "support/generators.h"

namespace kwic {
namespace {

MetadataRecord Minimal() {
  MetadataRecord md;
  md.document_number = "001";
  return md;
}

std::string FailingField(const MetadataRecord &md) {
  try {
    ValidateMetadata(md);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationError);
    return e.field();
  }
  return "";
}

TEST(DocumentNumber, Boundaries) {
  EXPECT_FALSE(IsValidDocumentNumber("000"));
  EXPECT_TRUE(IsValidDocumentNumber("001"));
  EXPECT_TRUE(IsValidDocumentNumber("999"));
  for (const char *bad : {"", "1", "01", "1000", "0001", "abc", "0a1", " 01",
                          "-01", "+01", "１２３"}) {
    EXPECT_FALSE(IsValidDocumentNumber(bad)) << bad;
  }
}

TEST(EventDate, Shapes) {
  EXPECT_EQ(ClassifyEventDate(""), EventDateShape::kNone);
  EXPECT_EQ(ClassifyEventDate("1978"), EventDateShape::kYear);
  EXPECT_EQ(ClassifyEventDate("0001"), EventDateShape::kYear);
  EXPECT_FALSE(ClassifyEventDate("0000"));
  EXPECT_EQ(ClassifyEventDate("09-05-1978"), EventDateShape::kDayMonthYear);
  EXPECT_EQ(ClassifyEventDate("29-02-2000"), EventDateShape::kDayMonthYear);
  EXPECT_EQ(ClassifyEventDate("29-02-1996"), EventDateShape::kDayMonthYear);
  for (const char *bad : {"29-02-1900", "29-02-1978", "31-04-1978", "00-01-1978",
                          "01-00-1978", "01-13-1978", "32-01-1978",
                          "01-01-0000", "1978-05-09", "9-5-1978", "09/05/1978",
                          "978", "19780", " 1978", "anno"}) {
    EXPECT_FALSE(ClassifyEventDate(bad)) << bad;
  }
}

TEST(Metadata, MinimalRecordIsValid) {
  EXPECT_EQ(FailingField(Minimal()), "");
}

TEST(Metadata, ReportsOffendingField) {
  MetadataRecord md = Minimal();
  md.document_number = "1";
  EXPECT_EQ(FailingField(md), "document_number");
  md = Minimal();
  md.event_date = "31-02-1950";
  EXPECT_EQ(FailingField(md), "event_date");
  md = Minimal();
  md.document_type = {"Speech", "  "};
  EXPECT_EQ(FailingField(md), "document_type");
  md = Minimal();
  md.provenance = {""};
  EXPECT_EQ(FailingField(md), "provenance");
  md = Minimal();
  md.abstract = "\xC3";
  EXPECT_EQ(FailingField(md), "abstract");
}

TEST(Metadata, RandomRecordsValidate) {
  testing::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    EXPECT_NO_THROW(ValidateMetadata(testing::RandomMetadata(rng)));
  }
}

TEST(PublicationStatus, NamesAndAliases) {
  EXPECT_EQ(ParsePublicationStatus("published"), PublicationStatus::kPublished);
  EXPECT_EQ(ParsePublicationStatus("edited"), PublicationStatus::kPublished);
  EXPECT_EQ(ParsePublicationStatus("unpublished"), PublicationStatus::kUnpublished);
  EXPECT_EQ(ParsePublicationStatus("unedited"), PublicationStatus::kUnpublished);
  EXPECT_FALSE(ParsePublicationStatus("Published"));
  EXPECT_EQ(PublicationStatusName(PublicationStatus::kPublished), "published");
}

TEST(Vocabulary, NonEmptySuggestions) {
  const Vocabulary v = DefaultVocabulary();
  EXPECT_FALSE(v.author_role.empty());
  EXPECT_FALSE(v.document_type.empty());
  EXPECT_FALSE(v.document_subject.empty());
}

}  // namespace
}  // namespace kwic
