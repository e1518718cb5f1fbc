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

// TEI P5 export.
//
// Mentions become inline name elements chosen per category (see
// DefaultTeiMapping); categories without a mapping fall back to
// <rs type="display_class">. Each element carries ref="#entity_id", with the
// Wikidata IRI appended as a second pointer when the entity is linked.

#ifndef KWIC_TEI_H_
#define KWIC_TEI_H_

#include <map>
#include <string>

#include "kwic/metadata.h"
#include "kwic/model.h"

namespace kwic {

// Category name -> TEI element name.
using TeiMapping = std::map<std::string, std::string, std::less<>>;

TeiMapping DefaultTeiMapping();

// Always well-formed XML 1.0. Characters XML cannot carry are replaced with
// U+FFFD.
std::string ExportTei(const Document &doc, const MetadataRecord &metadata,
                      const TeiMapping &mapping = DefaultTeiMapping());

std::string EscapeXml(std::string_view utf8);

}  // namespace kwic

#endif  // KWIC_TEI_H_
