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

// RDFa-HTML serialization of annotated documents.
//
// Each visible mention becomes
//
//   <span id="mention-1" typeof="foaf:Organization" about="#mention-1"
//         class="mention organization" property="dcterms:references"
//         resource="#DemocraziaCristiana">DC</span>
//
// (on one line, attributes in exactly this order) and each non-trashed entity
// becomes a group of head metas: typeof, rdfs:label, then dcterms:relation
// when linked to Wikidata. Sort keys that differ from the label, aliases,
// Treccani ids and the scrap location follow as kwic:* metas so that a render
// can be parsed back without loss. Trashed entities and their mentions are
// left out entirely.
//
// The body text sits in <div class="document-text">, whose content is taken
// literally on parse. Plain HTML without that container is read with the
// usual whitespace collapsing and block elements turned into line breaks.

#ifndef KWIC_RDFA_H_
#define KWIC_RDFA_H_

#include <string>
#include <string_view>
#include <vector>

#include "kwic/model.h"

namespace kwic {

inline constexpr std::string_view kWikidataEntityBase =
    "http://www.wikidata.org/entity/";

// Deterministic: equal documents render byte-identically.
std::string RenderRdfa(const Document &doc);

struct ParseOptions {
  // Overrides the <title> of the input when non-empty.
  std::string doc_id;
  std::vector<Category> categories = DefaultCategories();
};

struct ParseResult {
  Document document;
  std::vector<std::string> warnings;
};

// Throws ParseError (with line and column) for malformed mention spans.
// A span whose entity has no head metas gets a synthesized entity labelled
// with the id minus its '#', plus a "DanglingEntity" warning.
ParseResult ParseRdfa(std::string_view html, const ParseOptions &options = {});

std::string EscapeHtmlText(std::string_view utf8);
std::string EscapeHtmlAttribute(std::string_view utf8);
// Named (a common subset), decimal and hex character references.
std::string DecodeHtmlEntities(std::string_view text);

}  // namespace kwic

#endif  // KWIC_RDFA_H_
