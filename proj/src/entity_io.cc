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

#include "kwic/entity_io.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

using json = nlohmann::json;

std::string ExportEntities(const Document &doc) {
  json entities = json::array();
  for (const Entity &e : doc.entities()) {
    if (e.location == Location::kTrash) continue;
    entities.push_back({
        {"id", e.id},
        {"label", e.label},
        {"sort_key", e.sort_key},
        {"category", e.category},
        {"wikidata_id", e.wikidata_id ? json(*e.wikidata_id) : json(nullptr)},
        {"treccani_id", e.treccani_id ? json(*e.treccani_id) : json(nullptr)},
        {"aliases", e.aliases},
    });
  }
  json out = {{"schema_version", kEntitySchemaVersion},
              {"entities", std::move(entities)}};
  return out.dump(2) + "\n";
}

namespace {

[[noreturn]] void Bad(const std::string &message, std::string field = {}) {
  throw Error(ErrorCode::kImportError, message, std::move(field));
}

std::string RequireString(const json &object, const char *key, size_t index) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    Bad("entities[" + std::to_string(index) + "]." + key +
            " must be a string",
        key);
  }
  std::string value = it->get<std::string>();
  if (!IsValidUtf8(value)) Bad(std::string(key) + " is not valid UTF-8", key);
  return value;
}

std::optional<std::string> OptionalString(const json &object, const char *key,
                                          size_t index) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    Bad("entities[" + std::to_string(index) + "]." + key +
            " must be a string or null",
        key);
  }
  return it->get<std::string>();
}

Entity ParseEntity(const json &item, size_t index) {
  if (!item.is_object()) {
    Bad("entities[" + std::to_string(index) + "] must be an object");
  }
  Entity e;
  e.id = RequireString(item, "id", index);
  if (!IsValidEntityId(e.id)) Bad("malformed entity id: " + e.id, "id");
  e.label = TrimUtf8(RequireString(item, "label", index));
  if (e.label.empty()) Bad("empty label for " + e.id, "label");
  e.category = RequireString(item, "category", index);
  if (item.contains("sort_key")) {
    e.sort_key = RequireString(item, "sort_key", index);
  }
  if (e.sort_key.empty()) e.sort_key = e.label;
  e.wikidata_id = OptionalString(item, "wikidata_id", index);
  if (e.wikidata_id && !IsValidQid(*e.wikidata_id)) {
    Bad("malformed wikidata_id: " + *e.wikidata_id, "wikidata_id");
  }
  e.treccani_id = OptionalString(item, "treccani_id", index);
  if (e.treccani_id && !e.wikidata_id) {
    Bad("treccani_id requires wikidata_id for " + e.id, "treccani_id");
  }
  if (auto it = item.find("aliases"); it != item.end() && !it->is_null()) {
    if (!it->is_array()) Bad("aliases must be an array", "aliases");
    for (const json &a : *it) {
      if (!a.is_string()) Bad("aliases must hold strings", "aliases");
      std::string alias = TrimUtf8(a.get<std::string>());
      if (alias.empty() || alias == e.label ||
          std::find(e.aliases.begin(), e.aliases.end(), alias) !=
              e.aliases.end()) {
        continue;
      }
      e.aliases.push_back(std::move(alias));
    }
  }
  return e;
}

}  // namespace

ImportSummary ImportEntities(Document &doc, std::string_view payload) {
  json root;
  try {
    root = json::parse(payload);
  } catch (const json::parse_error &e) {
    Bad(std::string("payload is not JSON: ") + e.what());
  }
  if (!root.is_object()) Bad("payload must be an object");
  auto version = root.find("schema_version");
  if (version == root.end() || !version->is_number_integer() ||
      version->get<int>() != kEntitySchemaVersion) {
    Bad("unsupported schema_version", "schema_version");
  }
  auto list = root.find("entities");
  if (list == root.end() || !list->is_array()) {
    Bad("entities must be an array", "entities");
  }

  std::vector<Entity> incoming;
  std::set<std::string> ids;
  for (size_t i = 0; i < list->size(); ++i) {
    Entity e = ParseEntity((*list)[i], i);
    if (!ids.insert(e.id).second) Bad("duplicate entity id " + e.id, "id");
    incoming.push_back(std::move(e));
  }

  // Validate against the target before touching it.
  for (const Entity &e : incoming) {
    if (doc.FindCategory(e.category) == nullptr) {
      throw Error(ErrorCode::kUnknownCategory,
                  "unknown category: " + e.category, "category");
    }
    if (const Entity *existing = doc.FindEntity(e.id);
        existing != nullptr && existing->category != e.category) {
      Bad("entity " + e.id + " is " + existing->category + " here, not " +
              e.category,
          "category");
    }
  }

  Document staged = doc;
  ImportSummary summary;
  for (Entity &e : incoming) {
    if (Entity *existing = staged.mutable_entity(e.id)) {
      existing->label = e.label;
      existing->sort_key = e.sort_key;
      if (e.wikidata_id) {
        existing->wikidata_id = e.wikidata_id;
        existing->treccani_id = e.treccani_id;
      }
      for (std::string &alias : e.aliases) {
        if (alias == existing->label ||
            std::find(existing->aliases.begin(), existing->aliases.end(),
                      alias) != existing->aliases.end()) {
          continue;
        }
        existing->aliases.push_back(std::move(alias));
      }
      std::erase(existing->aliases, existing->label);
      ++summary.updated;
    } else {
      e.location = Location::kActive;
      staged.AddEntity(std::move(e));
      ++summary.added;
    }
  }
  staged.CheckInvariants();
  doc = std::move(staged);
  return summary;
}

}  // namespace kwic
