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

#include <algorithm>
#include <string>

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {
namespace {

void CheckBounds(std::u32string_view text, Span selection) {
  if (selection.start > selection.end || selection.end > text.size()) {
    throw Error(ErrorCode::kInvalidSelection,
                "selection [" + std::to_string(selection.start) + ", " +
                    std::to_string(selection.end) + ") outside text of length " +
                    std::to_string(text.size()),
                "span");
  }
}

const Category &RequireCategory(const Document &doc, std::string_view name) {
  const Category *category = doc.FindCategory(name);
  if (category == nullptr) {
    throw Error(ErrorCode::kUnknownCategory,
                "unknown category: " + std::string(name), "category");
  }
  return *category;
}

const Entity &RequireEntity(const Document &doc, std::string_view id,
                            const char *field = "entity_id") {
  const Entity *entity = doc.FindEntity(id);
  if (entity == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + std::string(id), field);
  }
  return *entity;
}

// True for "#Base-N" with N >= 2.
bool IsNumberedVariant(std::string_view id, std::string_view base) {
  if (id.size() <= base.size() + 1 || !id.starts_with(base) ||
      id[base.size()] != '-') {
    return false;
  }
  std::string_view digits = id.substr(base.size() + 1);
  return std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

const Entity *FindReusableEntity(const Document &doc, const std::string &label,
                                 const std::string &slug,
                                 const std::string &category) {
  for (const Entity &e : doc.entities()) {
    if (e.location != Location::kActive || e.category != category) continue;
    if (std::find(e.aliases.begin(), e.aliases.end(), label) !=
        e.aliases.end()) {
      return &e;
    }
  }
  for (const Entity &e : doc.entities()) {
    if (e.location != Location::kActive || e.category != category) continue;
    if (e.id == slug || IsNumberedVariant(e.id, slug)) return &e;
  }
  return nullptr;
}

// Returns the id of the entity the given surface text binds to, creating the
// entity if needed.
std::string ResolveOrCreateEntity(Document &doc, std::u32string_view surface,
                                  const Category &category) {
  const std::string label = EncodeUtf8(Trim(surface));
  const std::string slug = EntityIdFromLabel(label);
  if (const Entity *existing =
          FindReusableEntity(doc, label, slug, category.name)) {
    return existing->id;
  }
  Entity entity;
  entity.id = doc.UniqueEntityId(slug);
  entity.label = label;
  entity.sort_key = label;
  entity.category = category.name;
  std::string id = entity.id;
  doc.AddEntity(std::move(entity));
  return id;
}

void AddAliasIfNew(Entity &entity, const std::string &alias) {
  if (alias == entity.label) return;
  if (std::find(entity.aliases.begin(), entity.aliases.end(), alias) !=
      entity.aliases.end()) {
    return;
  }
  entity.aliases.push_back(alias);
}

}  // namespace

MarkResult MarkSelection(Document &doc, Span selection,
                         std::string_view category) {
  CheckBounds(doc.text(), selection);
  const Category &cat = RequireCategory(doc, category);
  if (selection.empty() || Trim(doc.Slice(selection)).empty()) {
    throw Error(ErrorCode::kEmptySelection, "selection is empty", "span");
  }
  if (doc.OverlapsAnyMention(selection)) {
    throw Error(ErrorCode::kOverlappingMention,
                "selection overlaps an existing mention", "span");
  }
  const std::string entity_id =
      ResolveOrCreateEntity(doc, doc.Slice(selection), cat);
  MarkResult result;
  result.mention = doc.AddMention(selection, entity_id);
  result.entity = *doc.FindEntity(entity_id);
  return result;
}

bool IsWordBoundary(std::u32string_view text, size_t pos) {
  if (pos == 0 || pos >= text.size()) return true;
  return !(IsWordChar(text[pos - 1]) && IsWordChar(text[pos]));
}

Span ExtendToWord(std::u32string_view text, Span selection) {
  CheckBounds(text, selection);
  Span out = selection;
  while (!IsWordBoundary(text, out.start)) --out.start;
  while (!IsWordBoundary(text, out.end)) ++out.end;
  return out;
}

Span ExtendToWord(const Document &doc, Span selection) {
  return ExtendToWord(doc.text(), selection);
}

std::vector<Mention> HighlightAllInstances(Document &doc, Span selection,
                                           std::string_view category) {
  CheckBounds(doc.text(), selection);
  const Category &cat = RequireCategory(doc, category);
  if (selection.empty()) {
    throw Error(ErrorCode::kEmptySelection, "selection is empty", "span");
  }
  const std::u32string_view text = doc.text();
  const Span normalized = ExtendToWord(text, selection);
  const std::u32string_view needle = text.substr(
      normalized.start, normalized.length());
  if (Trim(needle).empty()) {
    throw Error(ErrorCode::kEmptySelection, "selection is blank", "span");
  }

  std::vector<Span> accepted;
  for (size_t pos = text.find(needle); pos != std::u32string_view::npos;
       pos = text.find(needle, pos + 1)) {
    const Span candidate{pos, pos + needle.size()};
    if (!IsWordBoundary(text, candidate.start) ||
        !IsWordBoundary(text, candidate.end)) {
      continue;
    }
    if (doc.OverlapsAnyMention(candidate)) continue;
    if (!accepted.empty() && accepted.back().Overlaps(candidate)) continue;
    accepted.push_back(candidate);
  }
  if (accepted.empty()) return {};

  const std::string entity_id = ResolveOrCreateEntity(doc, needle, cat);
  std::vector<Mention> created;
  created.reserve(accepted.size());
  for (const Span &span : accepted) {
    created.push_back(doc.AddMention(span, entity_id));
  }
  return created;
}

Entity MergeEntities(Document &doc, std::string_view source,
                     std::string_view target) {
  const Entity &src = RequireEntity(doc, source, "source");
  const Entity &dst = RequireEntity(doc, target, "target");
  if (src.id == dst.id) {
    throw Error(ErrorCode::kSelfMerge, "cannot merge an entity into itself",
                "target");
  }
  if (src.location != Location::kActive || dst.location != Location::kActive) {
    throw Error(ErrorCode::kEntityTrashed,
                "both entities must be active to merge", "source");
  }
  if (src.category != dst.category) {
    throw Error(ErrorCode::kCategoryMismatch,
                "cannot merge " + src.category + " into " + dst.category,
                "target");
  }
  // Copies: the views may point into the entities about to be removed.
  const std::string source_id = src.id;
  const std::string target_id = dst.id;
  const std::string source_label = src.label;
  const std::vector<std::string> source_aliases = src.aliases;
  for (const Mention *m : doc.MentionsOf(source_id)) {
    doc.RebindMention(m->id, target_id);
  }
  Entity &merged = *doc.mutable_entity(target_id);
  AddAliasIfNew(merged, source_label);
  for (const std::string &alias : source_aliases) AddAliasIfNew(merged, alias);
  doc.RemoveEntity(source_id);
  return *doc.FindEntity(target_id);
}

Mention MoveMention(Document &doc, std::string_view mention_id,
                    std::string_view target) {
  const Mention *mention = doc.FindMention(mention_id);
  if (mention == nullptr) {
    throw Error(ErrorCode::kUnknownMention,
                "unknown mention: " + std::string(mention_id), "mention_id");
  }
  const Entity &dst = RequireEntity(doc, target, "target");
  if (mention->entity_id == dst.id) return *mention;
  if (dst.location != Location::kActive) {
    throw Error(ErrorCode::kEntityTrashed,
                "target entity is not active: " + dst.id, "target");
  }
  if (dst.category != mention->category) {
    throw Error(ErrorCode::kCategoryMismatch,
                "cannot move a " + mention->category + " mention to " +
                    dst.category,
                "target");
  }
  const std::string former = mention->entity_id;
  doc.RebindMention(mention_id, target);
  if (doc.Occurrences(former) == 0) {
    doc.mutable_entity(former)->location = Location::kTrash;
  }
  return *doc.FindMention(mention_id);
}

Entity RelabelEntity(Document &doc, std::string_view entity_id,
                     std::string_view new_label) {
  RequireEntity(doc, entity_id);
  const std::string label = TrimUtf8(new_label);
  if (label.empty()) {
    throw Error(ErrorCode::kInvalidLabel, "label is empty", "label");
  }
  Entity &entity = *doc.mutable_entity(entity_id);
  if (entity.sort_key == entity.label) entity.sort_key = label;
  entity.label = label;
  std::erase(entity.aliases, label);
  return entity;
}

Entity SetSortKey(Document &doc, std::string_view entity_id,
                  std::string_view key) {
  RequireEntity(doc, entity_id);
  Entity &entity = *doc.mutable_entity(entity_id);
  entity.sort_key = key.empty() ? entity.label : std::string(key);
  return entity;
}

Entity MoveTo(Document &doc, std::string_view entity_id, Location destination) {
  const Entity &current = RequireEntity(doc, entity_id);
  if (current.location == destination) {
    throw Error(ErrorCode::kSameLocation,
                current.id + " is already in " +
                    std::string(LocationName(destination)),
                "destination");
  }
  Entity &entity = *doc.mutable_entity(entity_id);
  entity.location = destination;
  return entity;
}

size_t EmptyTrash(Document &doc) {
  std::vector<std::string> trashed;
  for (const Entity &e : doc.entities()) {
    if (e.location == Location::kTrash) trashed.push_back(e.id);
  }
  for (const std::string &id : trashed) doc.RemoveEntity(id);
  return trashed.size();
}

void SetStatus(Document &doc, DocumentStatus status) { doc.set_status(status); }

Entity AddAlias(Document &doc, std::string_view entity_id,
                std::string_view alias) {
  RequireEntity(doc, entity_id);
  const std::string trimmed = TrimUtf8(alias);
  if (trimmed.empty()) {
    throw Error(ErrorCode::kInvalidLabel, "alias is empty", "alias");
  }
  Entity &entity = *doc.mutable_entity(entity_id);
  AddAliasIfNew(entity, trimmed);
  return entity;
}

}  // namespace kwic
