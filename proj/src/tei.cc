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

#include "kwic/rdfa.h"
#include "kwic/unicode.h"

namespace kwic {

TeiMapping DefaultTeiMapping() {
  return {
      {"People", "persName"},
      {"Places", "placeName"},
      {"Organizations", "orgName"},
      {"Quotations", "quote"},
      {"Bibliographic references", "bibl"},
  };
}

namespace {

bool IsXmlChar(char32_t c) {
  return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) ||
         (c >= 0xE000 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0x10FFFF);
}

void AppendEscaped(std::string &out, std::u32string_view text) {
  for (char32_t c : text) {
    switch (c) {
      case U'&': out += "&amp;"; break;
      case U'<': out += "&lt;"; break;
      case U'>': out += "&gt;"; break;
      case U'"': out += "&quot;"; break;
      case U'\r': out += "&#13;"; break;
      default: out += EncodeUtf8(IsXmlChar(c) ? c : U'�');
    }
  }
}

// Lenient: bytes that are not UTF-8 become U+FFFD rather than throwing.
std::u32string DecodeLenient(std::string_view utf8) {
  if (IsValidUtf8(utf8)) return DecodeUtf8(utf8);
  std::u32string out;
  for (unsigned char c : utf8) out.push_back(c < 0x80 ? c : U'�');
  return out;
}

std::string Escaped(std::string_view utf8) {
  std::string out;
  AppendEscaped(out, DecodeLenient(utf8));
  return out;
}

// <when> attribute value in ISO form.
std::string IsoDate(const std::string &date) {
  switch (ClassifyEventDate(date).value_or(EventDateShape::kNone)) {
    case EventDateShape::kNone: return "";
    case EventDateShape::kYear: return date;
    case EventDateShape::kDayMonthYear:
      return date.substr(6, 4) + "-" + date.substr(3, 2) + "-" +
             date.substr(0, 2);
  }
  return "";
}

void Line(std::string &out, int depth, std::string_view content) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += content;
  out += '\n';
}

void TextElement(std::string &out, int depth, std::string_view open,
                 std::string_view close, std::string_view value) {
  std::string line(open);
  line += Escaped(value);
  line += close;
  Line(out, depth, line);
}

void Keywords(std::string &out, const char *scheme,
              const std::vector<std::string> &terms) {
  if (terms.empty()) return;
  Line(out, 4, std::string("<keywords scheme=\"#") + scheme + "\">");
  for (const std::string &term : terms) {
    TextElement(out, 5, "<term>", "</term>", term);
  }
  Line(out, 4, "</keywords>");
}

void Header(std::string &out, const Document &doc, const MetadataRecord &md) {
  Line(out, 1, "<teiHeader>");
  Line(out, 2, "<fileDesc>");
  Line(out, 3, "<titleStmt>");
  TextElement(out, 4, "<title>", "</title>", doc.id());
  Line(out, 4, "<respStmt>");
  Line(out, 5, "<resp>curator</resp>");
  TextElement(out, 5, "<name>", "</name>", md.researcher_curator);
  Line(out, 4, "</respStmt>");
  Line(out, 3, "</titleStmt>");

  Line(out, 3, "<publicationStmt>");
  TextElement(out, 4, "<idno type=\"document-number\">", "</idno>",
              md.document_number);
  TextElement(out, 4, "<p>", "</p>",
              md.publication_status
                  ? std::string(PublicationStatusName(*md.publication_status))
                  : std::string());
  Line(out, 3, "</publicationStmt>");

  Line(out, 3, "<notesStmt>");
  TextElement(out, 4, "<note type=\"author-role\">", "</note>", md.author_role);
  TextElement(out, 4, "<note type=\"additional-notes\">", "</note>",
              md.additional_notes);
  Line(out, 3, "</notesStmt>");

  Line(out, 3, "<sourceDesc>");
  if (md.provenance.empty()) {
    Line(out, 4, "<p/>");
  } else {
    for (const std::string &p : md.provenance) {
      TextElement(out, 4, "<bibl>", "</bibl>", p);
    }
  }
  Line(out, 3, "</sourceDesc>");
  Line(out, 2, "</fileDesc>");

  Line(out, 2, "<profileDesc>");
  Line(out, 3, "<abstract>");
  TextElement(out, 4, "<p>", "</p>", md.abstract);
  Line(out, 3, "</abstract>");
  Line(out, 3, "<creation>");
  const std::string when = IsoDate(md.event_date);
  if (when.empty()) {
    Line(out, 4, "<date/>");
  } else {
    TextElement(out, 4, "<date when=\"" + when + "\">", "</date>",
                md.event_date);
  }
  TextElement(out, 4, "<placeName>", "</placeName>", md.event_place);
  Line(out, 3, "</creation>");
  if (!md.document_type.empty() || !md.document_subject.empty()) {
    Line(out, 3, "<textClass>");
    Keywords(out, "document-type", md.document_type);
    Keywords(out, "document-subject", md.document_subject);
    Line(out, 3, "</textClass>");
  }
  Line(out, 2, "</profileDesc>");
  Line(out, 1, "</teiHeader>");
}

void AppendBodyText(std::string &out, std::u32string_view text) {
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != U'\n') continue;
    AppendEscaped(out, text.substr(start, i - start));
    out += "<lb/>\n";
    start = i + 1;
  }
  AppendEscaped(out, text.substr(start));
}

}  // namespace

std::string EscapeXml(std::string_view utf8) { return Escaped(utf8); }

std::string ExportTei(const Document &doc, const MetadataRecord &metadata,
                      const TeiMapping &mapping) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<TEI xmlns=\"http://www.tei-c.org/ns/1.0\">\n";
  Header(out, doc, metadata);
  Line(out, 1, "<text>");
  Line(out, 2, "<body>");
  out += "      <p>";

  const std::u32string_view text = doc.text();
  size_t cursor = 0;
  for (const Mention &m : doc.mentions()) {
    if (doc.IsSuppressed(m)) continue;
    const Entity &entity = *doc.FindEntity(m.entity_id);
    const Category &category = *doc.FindCategory(m.category);
    AppendBodyText(out, text.substr(cursor, m.span.start - cursor));

    std::string element;
    std::string extra;
    if (auto it = mapping.find(m.category); it != mapping.end()) {
      element = it->second;
    } else {
      element = "rs";
      extra = " type=\"" + Escaped(category.display_class) + "\"";
    }
    std::string ref = entity.id;
    if (entity.wikidata_id) {
      ref += " ";
      ref += kWikidataEntityBase;
      ref += *entity.wikidata_id;
    }
    out += "<" + element + extra + " ref=\"" + Escaped(ref) + "\">";
    AppendBodyText(out, doc.Slice(m.span));
    out += "</" + element + ">";
    cursor = m.span.end;
  }
  AppendBodyText(out, text.substr(cursor));
  out += "</p>\n";
  Line(out, 2, "</body>");
  Line(out, 1, "</text>");
  out += "</TEI>\n";
  return out;
}

}  // namespace kwic
