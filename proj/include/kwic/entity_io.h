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

// Entity list interchange, for reusing curated authority lists across
// documents:
//
//   {"schema_version": 1,
//    "entities": [{"id": "#DemocraziaCristiana", "label": "...",
//                  "sort_key": "...", "category": "Organizations",
//                  "wikidata_id": "Q815348" | null,
//                  "treccani_id": "..." | null, "aliases": [...]}]}

#ifndef KWIC_ENTITY_IO_H_
#define KWIC_ENTITY_IO_H_

#include <string>
#include <string_view>

#include "kwic/model.h"

namespace kwic {

inline constexpr int kEntitySchemaVersion = 1;

// Active and scrap entities, in document order.
std::string ExportEntities(const Document &doc);

struct ImportSummary {
  size_t added = 0;
  size_t updated = 0;
};

// Merges the payload into `doc` by entity id. Matching entities take the
// imported label and sort key, non-null link fields overwrite, aliases are
// unioned. New entities arrive active. Atomic: throws ImportError (schema,
// duplicate ids, category change) or UnknownCategory with `doc` untouched.
ImportSummary ImportEntities(Document &doc, std::string_view payload);

}  // namespace kwic

#endif  // KWIC_ENTITY_IO_H_
