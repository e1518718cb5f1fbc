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

// JSON encodings used by the store and the HTTP API.
//
// DocumentToJson holds the complete annotated state, trash included, so
// that DocumentFromJson(DocumentToJson(d)) == d for every valid document.

#ifndef KWIC_JSON_CODEC_H_
#define KWIC_JSON_CODEC_H_

#include "json.hpp"
#include "kwic/concordance.h"
#include "kwic/metadata.h"
#include "kwic/model.h"

namespace kwic {

inline constexpr int kDocumentFormatVersion = 1;

nlohmann::json CategoryToJson(const Category &category);
Category CategoryFromJson(const nlohmann::json &j);

nlohmann::json EntityToJson(const Entity &entity);
nlohmann::json MentionToJson(const Mention &mention);

nlohmann::json DocumentToJson(const Document &doc);
// Throws InvalidDocument for anything that is not a valid saved state.
Document DocumentFromJson(const nlohmann::json &j);

nlohmann::json MetadataToJson(const MetadataRecord &record);
// Shape errors are ValidationError naming the field. Does not run
// ValidateMetadata.
MetadataRecord MetadataFromJson(const nlohmann::json &j);

nlohmann::json ConcordanceEntryToJson(const ConcordanceEntry &entry);
nlohmann::json EntityListingToJson(const EntityListing &listing);

}  // namespace kwic

#endif  // KWIC_JSON_CODEC_H_
