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

#include "kwic/wikidata.h"

#include <gtest/gtest.h>

#include "kwic/engine.h"
#include "kwic/error.h"

namespace kwic {
namespace {

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kBadRequest;
}

class WikidataTest : public ::testing::Test {
 protected:
  std::shared_ptr<FixtureTransport> transport_ = std::make_shared<FixtureTransport>(
      std::filesystem::path(KWIC_TEST_DATA_DIR) / "fixtures" / "wikidata");
  WikidataClient client_{transport_};

  void TearDown() override { EXPECT_EQ(LiveRequestCount(), 0u); }
};

TEST_F(WikidataTest, SearchRanksCandidates) {
  const auto hits = client_.Search("  Democrazia Cristiana ");
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0], (WikidataCandidate{"Q815348", "Democrazia Cristiana",
                                        "partito politico italiano (1943-1994)", 1}));
  EXPECT_EQ(hits[1].qid, "Q3706053");
  EXPECT_EQ(hits[2].match_score, 3);
  EXPECT_TRUE(transport_->unmatched().empty());
}

TEST_F(WikidataTest, EmptySearch) {
  EXPECT_TRUE(client_.Search("Zzyzx inesistente").empty());
  EXPECT_TRUE(transport_->unmatched().empty());
}

TEST_F(WikidataTest, SearchErrors) {
  EXPECT_EQ(CodeOf([&] { client_.Search("  "); }), ErrorCode::kInvalidLabel);
  EXPECT_EQ(CodeOf([&] { client_.Search("DC", -1); }), ErrorCode::kValidationError);
  // Anything without a recording answers 404, which is an outage for search.
  EXPECT_EQ(CodeOf([&] { client_.Search("DC", 5); }),
            ErrorCode::kReconciliationUnavailable);
  ASSERT_EQ(transport_->unmatched().size(), 1u);
  EXPECT_EQ(transport_->unmatched()[0].query.at("limit"), "5");
}

TEST_F(WikidataTest, SearchTruncatesToLimit) {
  FixtureTransport &t = *transport_;
  t.Add({"/w/api.php",
         {{"action", "wbsearchentities"}, {"search", "DC"}, {"language", "it"},
          {"limit", "2"}, {"format", "json"}, {"type", "item"}}},
        {200, R"({"search":[{"id":"Q1"},{"id":"bogus"},{"id":"Q2"},{"id":"Q3"}]})"});
  const auto hits = client_.Search("DC", 2);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[1].qid, "Q2");
  EXPECT_EQ(hits[1].match_score, 2);
}

TEST_F(WikidataTest, DetailsWithTreccani) {
  const EntityDetails d = client_.FetchDetails("Q815348");
  EXPECT_EQ(d.label, "Democrazia Cristiana");
  EXPECT_EQ(d.description, "partito politico italiano (1943-1994)");
  EXPECT_EQ(d.treccani_id, "democrazia-cristiana");
}

TEST_F(WikidataTest, DetailsFallBackAndMissingTreccani) {
  const EntityDetails d = client_.FetchDetails("Q3706053");
  EXPECT_EQ(d.label, "Christian Democracy (2002)");
  EXPECT_EQ(d.description, "");
  EXPECT_EQ(d.treccani_id, kTreccaniNotDetected);
}

TEST_F(WikidataTest, DetailsErrors) {
  EXPECT_EQ(CodeOf([&] { client_.FetchDetails("815348"); }), ErrorCode::kInvalidQid);
  EXPECT_EQ(CodeOf([&] { client_.FetchDetails("Q1"); }), ErrorCode::kNotFound);
  EXPECT_EQ(CodeOf([&] { client_.FetchDetails("Q4115189"); }),
            ErrorCode::kReconciliationUnavailable);
  transport_->Add({"/wiki/Special:EntityData/Q7.json", {}}, {200, "<html>"});
  EXPECT_EQ(CodeOf([&] { client_.FetchDetails("Q7"); }),
            ErrorCode::kReconciliationUnavailable);
  transport_->Add({"/wiki/Special:EntityData/Q8.json", {}},
                  {200, R"({"entities":{"Q8":{"id":"Q8","missing":""}}})"});
  EXPECT_EQ(CodeOf([&] { client_.FetchDetails("Q8"); }), ErrorCode::kNotFound);
}

TEST_F(WikidataTest, LinkAndUnlink) {
  Document doc = NewDocument("w", "La DC vince.");
  MarkSelection(doc, {3, 5}, "Organizations");
  LinkResult r = LinkEntity(doc, "#DC", "Q815348", &client_);
  EXPECT_TRUE(r.details_fetched);
  EXPECT_EQ(r.entity.wikidata_id, "Q815348");
  EXPECT_EQ(r.entity.treccani_id, "democrazia-cristiana");
  EXPECT_EQ(*doc.FindEntity("#DC"), r.entity);

  r = LinkEntity(doc, "#DC", "Q3706053", &client_);
  EXPECT_EQ(r.entity.treccani_id, kTreccaniNotDetected);

  // The link stands even when the details cannot be fetched.
  r = LinkEntity(doc, "#DC", "Q4115189", &client_);
  EXPECT_FALSE(r.details_fetched);
  EXPECT_EQ(r.entity.wikidata_id, "Q4115189");
  EXPECT_EQ(r.entity.treccani_id, std::nullopt);

  r = LinkEntity(doc, "#DC", "Q815348", nullptr);
  EXPECT_FALSE(r.details_fetched);

  const Document before = doc;
  EXPECT_EQ(CodeOf([&] { LinkEntity(doc, "#DC", "Q0x", &client_); }),
            ErrorCode::kInvalidQid);
  EXPECT_EQ(CodeOf([&] { LinkEntity(doc, "#X", "Q1", &client_); }),
            ErrorCode::kUnknownEntity);
  EXPECT_EQ(doc, before);

  const Entity e = UnlinkEntity(doc, "#DC");
  EXPECT_EQ(e.wikidata_id, std::nullopt);
  EXPECT_EQ(e.treccani_id, std::nullopt);
  EXPECT_EQ(CodeOf([&] { UnlinkEntity(doc, "#X"); }), ErrorCode::kUnknownEntity);
}

TEST(FixtureTransportTest, QueryOrderDoesNotMatter) {
  FixtureTransport t;
  t.Add({"/p", {{"b", "2"}, {"a", "1"}}}, {200, "ok"});
  HttpRequest r{"/p", {}};
  r.query["a"] = "1";
  r.query["b"] = "2";
  EXPECT_EQ(t.Get(r).body, "ok");
  r.query["c"] = "3";
  EXPECT_EQ(t.Get(r).status, 404);
  EXPECT_EQ(t.calls(), 2u);
  EXPECT_EQ(t.unmatched().size(), 1u);
}

}  // namespace
}  // namespace kwic
