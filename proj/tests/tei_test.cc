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

#include "kwic/tei.h"

#include <gtest/gtest.h>

#include "kwic/engine.h"
#include "support/generators.h"
#include "support/golden.h"
#include "support/oracles.h"

namespace kwic {
namespace {

using testing::XmlElement;

std::vector<XmlElement> Named(const std::string &xml, const std::string &name) {
  auto elements = testing::XmlElements(xml);
  EXPECT_TRUE(elements.has_value()) << xml;
  std::vector<XmlElement> out;
  if (!elements) return out;
  for (XmlElement &e : *elements) {
    if (e.name == name) out.push_back(std::move(e));
  }
  return out;
}

MetadataRecord Sample() {
  MetadataRecord md;
  md.document_number = "007";
  md.author_role = "Speaker";
  md.researcher_curator = "A. & B.";
  md.abstract = "Discorso <inedito>";
  md.document_type = {"Speech"};
  md.document_subject = {"Politics", "Society"};
  md.publication_status = PublicationStatus::kUnpublished;
  md.provenance = {"Archivio \"centrale\""};
  md.event_place = "Roma";
  md.event_date = "28-02-1978";
  md.additional_notes = "";
  return md;
}

TEST(TeiExport, DcExampleUsesOrgNameWithBothPointers) {
  const std::string xml = ExportTei(testing::DcExample(), {});
  const auto orgs = Named(xml, "orgName");
  ASSERT_EQ(orgs.size(), 1u);
  EXPECT_EQ(orgs[0].text, "DC");
  EXPECT_EQ(orgs[0].attributes.at("ref"),
            "#DemocraziaCristiana http://www.wikidata.org/entity/Q815348");
  ASSERT_EQ(Named(xml, "p").size() >= 1, true);
}

TEST(TeiExport, HeaderCarriesMetadata) {
  const std::string xml = ExportTei(testing::DcExample(), Sample());
  ASSERT_TRUE(testing::WellFormedXml(xml));
  EXPECT_EQ(Named(xml, "idno").at(0).text, "007");
  EXPECT_EQ(Named(xml, "name").at(0).text, "A. & B.");
  EXPECT_EQ(Named(xml, "bibl").at(0).text, "Archivio \"centrale\"");
  const auto dates = Named(xml, "date");
  ASSERT_EQ(dates.size(), 1u);
  EXPECT_EQ(dates[0].attributes.at("when"), "1978-02-28");
  EXPECT_EQ(Named(xml, "term").size(), 3u);
  EXPECT_EQ(Named(xml, "TEI").at(0).attributes.at("xmlns"),
            "http://www.tei-c.org/ns/1.0");
}

TEST(TeiExport, LineBreaksAndUnmappedCategories) {
  std::vector<Category> categories = DefaultCategories();
  categories.push_back({"Ships", CategoryKind::kMention, "ship", "schema:Vehicle"});
  Document doc("navi", U"la nave\nAndrea Doria\x01 salpa", categories);
  MarkSelection(doc, {8, 20}, "Ships");
  const std::string xml = ExportTei(doc, {});
  std::string error;
  ASSERT_TRUE(testing::WellFormedXml(xml, &error)) << error;
  EXPECT_EQ(Named(xml, "lb").size(), 1u);
  const auto rs = Named(xml, "rs");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].attributes.at("type"), "ship");
  EXPECT_EQ(rs[0].attributes.at("ref"), "#AndreaDoria");
  EXPECT_EQ(rs[0].text, "Andrea Doria");
  EXPECT_NE(xml.find("\xEF\xBF\xBD salpa"), std::string::npos);
}

TEST(TeiExport, SuppressedMentionsArePlainText) {
  Document doc = NewDocument("s", "Roma e Milano");
  MarkSelection(doc, {0, 4}, "Places");
  MarkSelection(doc, {7, 13}, "Places");
  MoveTo(doc, "#Roma", Location::kTrash);
  const std::string xml = ExportTei(doc, {});
  const auto places = Named(xml, "placeName");
  ASSERT_EQ(places.size(), 2u);  // one in the header, one in the body
  EXPECT_EQ(places[1].text, "Milano");
}

TEST(TeiExport, RandomCorpusIsWellFormed) {
  testing::Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const Document doc = testing::RandomDocument(rng, "<doc & " + std::to_string(i));
    const std::string xml = ExportTei(doc, testing::RandomMetadata(rng));
    std::string error;
    ASSERT_TRUE(testing::WellFormedXml(xml, &error)) << error << "\n" << xml;
    size_t refs = 0;
    for (size_t p = xml.find(" ref=\"#"); p != std::string::npos;
         p = xml.find(" ref=\"#", p + 1)) {
      ++refs;
    }
    ASSERT_EQ(refs, testing::VisibleMentionCount(doc));
  }
}

TEST(TeiEscape, Basics) {
  EXPECT_EQ(EscapeXml("<a href=\"x\">&</a>"),
            "&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;");
  EXPECT_EQ(EscapeXml("a\rb"), "a&#13;b");
  EXPECT_EQ(EscapeXml(std::string("a\0b", 3)), "a\xEF\xBF\xBD" "b");
  EXPECT_EQ(EscapeXml("\xFF"), "\xEF\xBF\xBD");
}

}  // namespace
}  // namespace kwic
