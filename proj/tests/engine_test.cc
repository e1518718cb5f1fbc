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

#include "kwic/engine.h"

#include <gtest/gtest.h>

#include "kwic/error.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace kwic {
namespace {

using testing::InvariantViolations;

constexpr char kText[] =
    "La DC vince. La DC governa con Aldo Moro.\nA Roma la DC e il PCI.";

Span Find(const Document &doc, std::u32string_view needle, int nth = 0) {
  size_t pos = doc.text().find(needle);
  while (nth-- > 0) pos = doc.text().find(needle, pos + 1);
  return {pos, pos + needle.size()};
}

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadRequest;
}

class EngineTest : public ::testing::Test {
 protected:
  Document doc_ = NewDocument("d", kText);
};

TEST_F(EngineTest, MarkCreatesThenReusesEntity) {
  const MarkResult first = MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  EXPECT_EQ(first.mention.id, "mention-1");
  EXPECT_EQ(first.entity.id, "#DC");
  EXPECT_EQ(first.entity.label, "DC");
  const MarkResult second =
      MarkSelection(doc_, Find(doc_, U"DC", 1), "Organizations");
  EXPECT_EQ(second.entity.id, "#DC");
  EXPECT_EQ(doc_.entities().size(), 1u);
  // Same text in another category gets its own entity.
  const MarkResult third = MarkSelection(doc_, Find(doc_, U"DC", 2), "People");
  EXPECT_EQ(third.entity.id, "#DC-2");
  EXPECT_TRUE(InvariantViolations(doc_).empty());
}

TEST_F(EngineTest, MarkUsesAliases) {
  MarkSelection(doc_, Find(doc_, U"Aldo Moro"), "People");
  RelabelEntity(doc_, "#AldoMoro", "Moro, Aldo");
  AddAlias(doc_, "#AldoMoro", "PCI");
  const MarkResult r = MarkSelection(doc_, Find(doc_, U"PCI"), "People");
  EXPECT_EQ(r.entity.id, "#AldoMoro");
}

TEST_F(EngineTest, MarkErrors) {
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  EXPECT_EQ(CodeOf([&] { MarkSelection(doc_, Find(doc_, U"La DC"), "People"); }),
            ErrorCode::kOverlappingMention);
  EXPECT_EQ(CodeOf([&] { MarkSelection(doc_, {2, 3}, "People"); }),
            ErrorCode::kEmptySelection);
  EXPECT_EQ(CodeOf([&] { MarkSelection(doc_, {5, 5}, "People"); }),
            ErrorCode::kEmptySelection);
  EXPECT_EQ(CodeOf([&] { MarkSelection(doc_, {5, 500}, "People"); }),
            ErrorCode::kInvalidSelection);
  EXPECT_EQ(CodeOf([&] { MarkSelection(doc_, {6, 11}, "Ships"); }),
            ErrorCode::kUnknownCategory);
  EXPECT_EQ(doc_.mentions().size(), 1u);
}

TEST_F(EngineTest, ExtendToWord) {
  const Span vince = Find(doc_, U"vince");
  EXPECT_EQ(ExtendToWord(doc_, {vince.start + 1, vince.start + 2}), vince);
  EXPECT_EQ(ExtendToWord(doc_, vince), vince);
  // A selection ending after the period is already on a boundary.
  EXPECT_EQ(ExtendToWord(doc_, {vince.start, vince.end + 1}),
            (Span{vince.start, vince.end + 1}));
  const Document elision = NewDocument("e", "dell'Italia è");
  EXPECT_EQ(ExtendToWord(elision, {6, 7}), (Span{0, 11}));
  EXPECT_TRUE(IsWordBoundary(elision.text(), 0));
  EXPECT_FALSE(IsWordBoundary(elision.text(), 4));
}

TEST_F(EngineTest, HighlightAllWholeWordCaseSensitive) {
  Document doc = NewDocument("h", "DC, DCA, dc e DC. xDC DC");
  const auto created = HighlightAllInstances(doc, {0, 1}, "Organizations");
  ASSERT_EQ(created.size(), 3u);
  EXPECT_EQ(created[0].span, (Span{0, 2}));
  EXPECT_EQ(created[1].span, (Span{14, 16}));
  EXPECT_EQ(created[2].span, (Span{22, 24}));
  EXPECT_EQ(doc.Occurrences("#DC"), 3u);
  EXPECT_TRUE(HighlightAllInstances(doc, {0, 2}, "Organizations").empty());
}

TEST_F(EngineTest, HighlightAllSkipsOverlaps) {
  MarkSelection(doc_, Find(doc_, U"La DC"), "Organizations");
  const auto created =
      HighlightAllInstances(doc_, Find(doc_, U"DC", 1), "Organizations");
  EXPECT_EQ(created.size(), 2u);
  const Document before = doc_;
  EXPECT_EQ(CodeOf([&] { HighlightAllInstances(doc_, {2, 3}, "People"); }),
            ErrorCode::kEmptySelection);
  EXPECT_EQ(doc_, before);
}

TEST_F(EngineTest, HighlightAllMatchesOracleOnRandomDocuments) {
  testing::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const Document base = testing::RandomDocument(rng, "r");
    for (const Span &word : testing::WordSpans(base.text())) {
      Document work = base;
      const auto want = testing::OracleHighlightAll(base, word);
      ASSERT_TRUE(want);
      std::vector<Span> got;
      for (const Mention &m : HighlightAllInstances(work, word, "Places")) {
        got.push_back(m.span);
      }
      ASSERT_EQ(got, *want);
    }
  }
}

TEST_F(EngineTest, MergeFoldsSourceIntoTarget) {
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  MarkSelection(doc_, Find(doc_, U"PCI"), "Organizations");
  MarkSelection(doc_, Find(doc_, U"Aldo Moro"), "People");
  const Entity merged = MergeEntities(doc_, "#PCI", "#DC");
  EXPECT_EQ(merged.aliases, std::vector<std::string>{"PCI"});
  EXPECT_EQ(doc_.Occurrences("#DC"), 2u);
  EXPECT_EQ(doc_.FindEntity("#PCI"), nullptr);
  EXPECT_EQ(CodeOf([&] { MergeEntities(doc_, "#DC", "#DC"); }), ErrorCode::kSelfMerge);
  EXPECT_EQ(CodeOf([&] { MergeEntities(doc_, "#AldoMoro", "#DC"); }),
            ErrorCode::kCategoryMismatch);
  EXPECT_EQ(CodeOf([&] { MergeEntities(doc_, "#X", "#DC"); }),
            ErrorCode::kUnknownEntity);
  MoveTo(doc_, "#AldoMoro", Location::kScrap);
  MarkSelection(doc_, Find(doc_, U"Roma"), "People");
  EXPECT_EQ(CodeOf([&] { MergeEntities(doc_, "#Roma", "#AldoMoro"); }),
            ErrorCode::kEntityTrashed);
  EXPECT_TRUE(InvariantViolations(doc_).empty());
}

TEST_F(EngineTest, MoveMentionTrashesOrphans) {
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  MarkSelection(doc_, Find(doc_, U"PCI"), "Organizations");
  const Mention moved = MoveMention(doc_, "mention-1", "#PCI");
  EXPECT_EQ(moved.entity_id, "#PCI");
  EXPECT_EQ(doc_.FindEntity("#DC")->location, Location::kTrash);
  EXPECT_EQ(CodeOf([&] { MoveMention(doc_, "mention-9", "#PCI"); }),
            ErrorCode::kUnknownMention);
  EXPECT_EQ(CodeOf([&] { MoveMention(doc_, "mention-2", "#DC"); }),
            ErrorCode::kEntityTrashed);
}

TEST_F(EngineTest, RelabelKeepsIdAndTracksSortKey) {
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  Entity e = RelabelEntity(doc_, "#DC", "Democrazia Cristiana");
  EXPECT_EQ(e.id, "#DC");
  EXPECT_EQ(e.sort_key, "Democrazia Cristiana");
  SetSortKey(doc_, "#DC", "Cristiana");
  e = RelabelEntity(doc_, "#DC", "DC (partito)");
  EXPECT_EQ(e.sort_key, "Cristiana");
  EXPECT_EQ(SetSortKey(doc_, "#DC", "").sort_key, "DC (partito)");
  EXPECT_EQ(CodeOf([&] { RelabelEntity(doc_, "#DC", "  "); }), ErrorCode::kInvalidLabel);
}

TEST_F(EngineTest, TrashSuppressesAndRestoreIsIdentity) {
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  MarkSelection(doc_, Find(doc_, U"Roma"), "Places");
  const Document before = doc_;
  MoveTo(doc_, "#DC", Location::kTrash);
  EXPECT_TRUE(doc_.IsSuppressed(doc_.mentions()[0]));
  EXPECT_EQ(testing::VisibleMentionCount(doc_), 1u);
  EXPECT_EQ(CodeOf([&] { MoveTo(doc_, "#DC", Location::kTrash); }),
            ErrorCode::kSameLocation);
  MoveTo(doc_, "#DC", Location::kActive);
  EXPECT_EQ(doc_, before);

  MoveTo(doc_, "#DC", Location::kTrash);
  EXPECT_EQ(EmptyTrash(doc_), 1u);
  EXPECT_EQ(doc_.mentions().size(), 1u);
  EXPECT_EQ(EmptyTrash(doc_), 0u);
}

TEST_F(EngineTest, StatusAndAliases) {
  SetStatus(doc_, DocumentStatus::kFinished);
  EXPECT_EQ(doc_.status(), DocumentStatus::kFinished);
  MarkSelection(doc_, Find(doc_, U"DC"), "Organizations");
  AddAlias(doc_, "#DC", "DC");  // the label itself is not an alias
  AddAlias(doc_, "#DC", " Democristiani ");
  AddAlias(doc_, "#DC", "Democristiani");
  EXPECT_EQ(doc_.FindEntity("#DC")->aliases,
            std::vector<std::string>{"Democristiani"});
  EXPECT_EQ(CodeOf([&] { AddAlias(doc_, "#DC", ""); }), ErrorCode::kInvalidLabel);
}

}  // namespace
}  // namespace kwic
