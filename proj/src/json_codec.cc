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

#include "kwic/json_codec.h"

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

using json = nlohmann::json;

namespace {

json OptionalToJson(const std::optional<std::string> &value) {
  return value ? json(*value) : json(nullptr);
}

[[noreturn]] void BadDocument(const std::string &message) {
  throw Error(ErrorCode::kInvalidDocument, "saved state: " + message);
}

template <typename T>
T Get(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end()) BadDocument(std::string("missing ") + key);
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    BadDocument(std::string("bad type for ") + key);
  }
}

std::optional<std::string> GetOptional(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) BadDocument(std::string("bad type for ") + key);
  return it->get<std::string>();
}

}  // namespace

json CategoryToJson(const Category &c) {
  return {{"name", c.name},
          {"kind", CategoryKindName(c.kind)},
          {"display_class", c.display_class},
          {"rdfa_type", c.rdfa_type},
          {"rdfa_property", c.rdfa_property}};
}

Category CategoryFromJson(const json &j) {
  if (!j.is_object()) BadDocument("category must be an object");
  Category c;
  c.name = Get<std::string>(j, "name");
  const auto kind = ParseCategoryKind(Get<std::string>(j, "kind"));
  if (!kind) BadDocument("bad category kind");
  c.kind = *kind;
  c.display_class = Get<std::string>(j, "display_class");
  c.rdfa_type = Get<std::string>(j, "rdfa_type");
  if (j.contains("rdfa_property")) {
    c.rdfa_property = Get<std::string>(j, "rdfa_property");
  }
  return c;
}

json EntityToJson(const Entity &e) {
  return {{"id", e.id},
          {"label", e.label},
          {"sort_key", e.sort_key},
          {"category", e.category},
          {"wikidata_id", OptionalToJson(e.wikidata_id)},
          {"treccani_id", OptionalToJson(e.treccani_id)},
          {"location", LocationName(e.location)},
          {"aliases", e.aliases}};
}

json MentionToJson(const Mention &m) {
  return {{"id", m.id},
          {"start", m.span.start},
          {"end", m.span.end},
          {"entity_id", m.entity_id},
          {"category", m.category},
          {"kind", CategoryKindName(m.kind)}};
}

json DocumentToJson(const Document &doc) {
  json categories = json::array();
  for (const Category &c : doc.categories()) {
    categories.push_back(CategoryToJson(c));
  }
  json entities = json::array();
  for (const Entity &e : doc.entities()) entities.push_back(EntityToJson(e));
  json mentions = json::array();
  for (const Mention &m : doc.mentions()) {
    mentions.push_back({{"id", m.id},
                        {"start", m.span.start},
                        {"end", m.span.end},
                        {"entity_id", m.entity_id}});
  }
  return {{"format_version", kDocumentFormatVersion},
          {"doc_id", doc.id()},
          {"text", doc.TextUtf8()},
          {"status", DocumentStatusName(doc.status())},
          {"metadata_id", OptionalToJson(doc.metadata_id())},
          {"next_mention_number", doc.next_mention_number()},
          {"categories", std::move(categories)},
          {"entities", std::move(entities)},
          {"mentions", std::move(mentions)}};
}

Document DocumentFromJson(const json &j) {
  if (!j.is_object()) BadDocument("not an object");
  if (Get<int>(j, "format_version") != kDocumentFormatVersion) {
    BadDocument("unsupported format_version");
  }
  std::vector<Category> categories;
  for (const json &c : Get<json>(j, "categories")) {
    categories.push_back(CategoryFromJson(c));
  }
  try {
    Document doc(Get<std::string>(j, "doc_id"),
                 DecodeUtf8(Get<std::string>(j, "text")),
                 std::move(categories));
    const auto status = ParseDocumentStatus(Get<std::string>(j, "status"));
    if (!status) BadDocument("bad status");
    doc.set_status(*status);
    doc.set_metadata_id(GetOptional(j, "metadata_id"));

    // Mentions of trashed entities are legal in a saved state, so entities
    // are added active and moved to their location afterwards.
    std::vector<std::pair<std::string, Location>> locations;
    for (const json &item : Get<json>(j, "entities")) {
      Entity e;
      e.id = Get<std::string>(item, "id");
      e.label = Get<std::string>(item, "label");
      e.sort_key = Get<std::string>(item, "sort_key");
      e.category = Get<std::string>(item, "category");
      e.wikidata_id = GetOptional(item, "wikidata_id");
      e.treccani_id = GetOptional(item, "treccani_id");
      e.aliases = Get<std::vector<std::string>>(item, "aliases");
      const auto location = ParseLocation(Get<std::string>(item, "location"));
      if (!location) BadDocument("bad location for " + e.id);
      locations.emplace_back(e.id, *location);
      doc.AddEntity(std::move(e));
    }
    for (const json &item : Get<json>(j, "mentions")) {
      Mention m;
      m.id = Get<std::string>(item, "id");
      m.span = {Get<size_t>(item, "start"), Get<size_t>(item, "end")};
      m.entity_id = Get<std::string>(item, "entity_id");
      doc.AddMention(std::move(m));
    }
    for (const auto &[id, location] : locations) {
      doc.mutable_entity(id)->location = location;
    }
    const auto counter = Get<uint64_t>(j, "next_mention_number");
    if (counter < doc.next_mention_number()) {
      BadDocument("next_mention_number is below an existing mention id");
    }
    doc.set_next_mention_number(counter);
    doc.CheckInvariants();
    return doc;
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kInvalidDocument) throw;
    BadDocument(e.what());
  }
}

json MetadataToJson(const MetadataRecord &r) {
  return {{"document_number", r.document_number},
          {"author_role", r.author_role},
          {"researcher_curator", r.researcher_curator},
          {"abstract", r.abstract},
          {"document_type", r.document_type},
          {"document_subject", r.document_subject},
          {"publication_status",
           r.publication_status
               ? json(PublicationStatusName(*r.publication_status))
               : json(nullptr)},
          {"provenance", r.provenance},
          {"event_place", r.event_place},
          {"event_date", r.event_date},
          {"additional_notes", r.additional_notes}};
}

namespace {

[[noreturn]] void BadField(const char *field, const std::string &message) {
  throw Error(ErrorCode::kValidationError, message, field);
}

std::string FieldString(const json &j, const char *key, bool required) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    if (required) BadField(key, std::string(key) + " is required");
    return {};
  }
  if (!it->is_string()) BadField(key, std::string(key) + " must be a string");
  return it->get<std::string>();
}

std::vector<std::string> FieldList(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (it->is_string()) return {it->get<std::string>()};
  if (!it->is_array()) BadField(key, std::string(key) + " must be a list");
  std::vector<std::string> out;
  for (const json &v : *it) {
    if (!v.is_string()) BadField(key, std::string(key) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

MetadataRecord MetadataFromJson(const json &j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kValidationError, "metadata must be an object");
  }
  MetadataRecord r;
  auto number = j.find("document_number");
  if (number != j.end() && number->is_number_integer()) {
    BadField("document_number", "document_number must be a zero-padded string");
  }
  r.document_number = FieldString(j, "document_number", true);
  r.author_role = FieldString(j, "author_role", false);
  r.researcher_curator = FieldString(j, "researcher_curator", false);
  r.abstract = FieldString(j, "abstract", false);
  r.document_type = FieldList(j, "document_type");
  r.document_subject = FieldList(j, "document_subject");
  const std::string status = FieldString(j, "publication_status", false);
  if (!status.empty()) {
    r.publication_status = ParsePublicationStatus(status);
    if (!r.publication_status) {
      BadField("publication_status",
               "publication_status must be published or unpublished");
    }
  }
  r.provenance = FieldList(j, "provenance");
  r.event_place = FieldString(j, "event_place", false);
  r.event_date = FieldString(j, "event_date", false);
  r.additional_notes = FieldString(j, "additional_notes", false);
  return r;
}

json ConcordanceEntryToJson(const ConcordanceEntry &e) {
  return {{"mention_id", e.mention_id},
          {"keyword", e.keyword},
          {"left_context", e.left_context},
          {"right_context", e.right_context},
          {"line", e.line},
          {"style", ConcordanceStyleName(e.style)},
          {"position", e.position},
          {"text", e.text}};
}

json EntityListingToJson(const EntityListing &l) {
  json j = EntityToJson(l.entity);
  j["occurrences"] = l.occurrences;
  j["wikidata_linked"] = l.wikidata_linked;
  return j;
}

}  // namespace kwic
