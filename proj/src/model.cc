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

#include "kwic/model.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

std::string_view CategoryKindName(CategoryKind kind) {
  switch (kind) {
    case CategoryKind::kMention: return "mention";
    case CategoryKind::kReference: return "reference";
  }
  return "mention";
}

std::optional<CategoryKind> ParseCategoryKind(std::string_view name) {
  if (name == "mention") return CategoryKind::kMention;
  if (name == "reference") return CategoryKind::kReference;
  return std::nullopt;
}

std::vector<Category> DefaultCategories() {
  return {
      {"People", CategoryKind::kMention, "person", "foaf:Person"},
      {"Places", CategoryKind::kMention, "place", "dcterms:Location"},
      {"Organizations", CategoryKind::kMention, "organization",
       "foaf:Organization"},
      {"Bibliographic references", CategoryKind::kReference, "bibliography",
       "dcterms:BibliographicResource"},
      {"Quotations", CategoryKind::kReference, "quotation",
       "schema:Quotation"},
  };
}

void ValidateCategories(const std::vector<Category> &categories) {
  std::set<std::string> names, classes;
  for (const Category &c : categories) {
    if (c.name.empty() || c.display_class.empty() || c.rdfa_type.empty() ||
        c.rdfa_property.empty()) {
      throw Error(ErrorCode::kValidationError,
                  "category fields must be non-empty", "categories");
    }
    for (char ch : c.display_class) {
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '"') {
        throw Error(ErrorCode::kValidationError,
                    "display class must be a single token: " + c.name,
                    "categories");
      }
    }
    if (!names.insert(c.name).second ||
        !classes.insert(c.display_class).second) {
      throw Error(ErrorCode::kValidationError,
                  "duplicate category: " + c.name, "categories");
    }
  }
}

std::string_view DocumentStatusName(DocumentStatus status) {
  switch (status) {
    case DocumentStatus::kToBeStarted: return "ToBeStarted";
    case DocumentStatus::kInProgress: return "InProgress";
    case DocumentStatus::kFinished: return "Finished";
  }
  return "ToBeStarted";
}

std::optional<DocumentStatus> ParseDocumentStatus(std::string_view name) {
  if (name == "ToBeStarted") return DocumentStatus::kToBeStarted;
  if (name == "InProgress") return DocumentStatus::kInProgress;
  if (name == "Finished") return DocumentStatus::kFinished;
  return std::nullopt;
}

std::string_view LocationName(Location location) {
  switch (location) {
    case Location::kActive: return "active";
    case Location::kScrap: return "scrap";
    case Location::kTrash: return "trash";
  }
  return "active";
}

std::optional<Location> ParseLocation(std::string_view name) {
  if (name == "active") return Location::kActive;
  if (name == "scrap") return Location::kScrap;
  if (name == "trash") return Location::kTrash;
  return std::nullopt;
}

std::string EntityIdFromLabel(std::string_view label) {
  const std::u32string text = DecodeUtf8(label);
  std::u32string slug = U"#";
  bool word_start = true;
  for (char32_t c : text) {
    if (IsSpace(c)) {
      word_start = true;
      continue;
    }
    slug.push_back(word_start ? ToTitle(c) : c);
    word_start = false;
  }
  if (slug.size() == 1) {
    throw Error(ErrorCode::kInvalidLabel, "label is empty", "label");
  }
  return EncodeUtf8(slug);
}

bool IsValidEntityId(std::string_view id) {
  if (id.size() < 2 || id[0] != '#' || !IsValidUtf8(id)) return false;
  for (char32_t c : DecodeUtf8(id)) {
    if (IsSpace(c)) return false;
  }
  return true;
}

namespace {

std::optional<uint64_t> ParsePositive(std::string_view digits) {
  if (digits.empty() || digits[0] == '0') return std::nullopt;
  uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::optional<uint64_t> ParseMentionNumber(std::string_view id) {
  constexpr std::string_view kPrefix = "mention-";
  if (!id.starts_with(kPrefix)) return std::nullopt;
  return ParsePositive(id.substr(kPrefix.size()));
}

std::string MentionIdFor(uint64_t number) {
  return "mention-" + std::to_string(number);
}

bool IsValidQid(std::string_view qid) {
  return qid.size() >= 2 && qid[0] == 'Q' &&
         ParsePositive(qid.substr(1)).has_value();
}

Document::Document(std::string doc_id, std::u32string text,
                   std::vector<Category> categories)
    : id_(std::move(doc_id)),
      text_(std::move(text)),
      categories_(std::move(categories)) {
  if (id_.empty()) {
    throw Error(ErrorCode::kValidationError, "document id is empty", "doc_id");
  }
  for (char32_t c : text_) {
    if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      throw Error(ErrorCode::kInvalidText, "text holds a non-scalar value");
    }
  }
  ValidateCategories(categories_);
}

std::string Document::TextUtf8() const { return EncodeUtf8(text_); }

std::u32string_view Document::Slice(Span span) const {
  return std::u32string_view(text_).substr(span.start, span.length());
}

void Document::set_next_mention_number(uint64_t number) {
  next_mention_number_ = std::max(next_mention_number_, number);
}

const Category *Document::FindCategory(std::string_view name) const {
  for (const Category &c : categories_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Category *Document::FindCategoryByClass(
    std::string_view display_class) const {
  for (const Category &c : categories_) {
    if (c.display_class == display_class) return &c;
  }
  return nullptr;
}

const Entity *Document::FindEntity(std::string_view id) const {
  for (const Entity &e : entities_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Entity *Document::FindEntityMutable(std::string_view id) {
  for (Entity &e : entities_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Entity *Document::mutable_entity(std::string_view id) {
  return FindEntityMutable(id);
}

const Mention *Document::FindMention(std::string_view id) const {
  for (const Mention &m : mentions_) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

size_t Document::Occurrences(std::string_view entity_id) const {
  return std::count_if(
      mentions_.begin(), mentions_.end(),
      [&](const Mention &m) { return m.entity_id == entity_id; });
}

std::vector<const Mention *> Document::MentionsOf(
    std::string_view entity_id) const {
  std::vector<const Mention *> out;
  for (const Mention &m : mentions_) {
    if (m.entity_id == entity_id) out.push_back(&m);
  }
  return out;
}

bool Document::IsSuppressed(const Mention &mention) const {
  const Entity *entity = FindEntity(mention.entity_id);
  return entity == nullptr || entity->location == Location::kTrash;
}

bool Document::OverlapsAnyMention(Span span) const {
  // Mentions are sorted and disjoint, so only the neighbours of the insertion
  // point can overlap.
  auto it = std::lower_bound(
      mentions_.begin(), mentions_.end(), span.start,
      [](const Mention &m, size_t start) { return m.span.end <= start; });
  return it != mentions_.end() && it->span.Overlaps(span);
}

std::string Document::UniqueEntityId(std::string_view base) const {
  if (FindEntity(base) == nullptr) return std::string(base);
  for (int suffix = 2;; ++suffix) {
    std::string candidate = std::string(base) + "-" + std::to_string(suffix);
    if (FindEntity(candidate) == nullptr) return candidate;
  }
}

void Document::AddEntity(Entity entity) {
  if (!IsValidEntityId(entity.id)) {
    throw Error(ErrorCode::kInvalidDocument,
                "malformed entity id: " + entity.id, "entity_id");
  }
  if (FindEntity(entity.id) != nullptr) {
    throw Error(ErrorCode::kInvalidDocument,
                "duplicate entity id: " + entity.id, "entity_id");
  }
  if (Trim(DecodeUtf8(entity.label)).empty()) {
    throw Error(ErrorCode::kInvalidLabel, "label is empty", "label");
  }
  if (FindCategory(entity.category) == nullptr) {
    throw Error(ErrorCode::kUnknownCategory,
                "unknown category: " + entity.category, "category");
  }
  if (entity.wikidata_id && !IsValidQid(*entity.wikidata_id)) {
    throw Error(ErrorCode::kInvalidQid,
                "malformed Wikidata id: " + *entity.wikidata_id, "qid");
  }
  if (!entity.wikidata_id && entity.treccani_id) {
    throw Error(ErrorCode::kInvalidDocument,
                "Treccani id without Wikidata link on " + entity.id);
  }
  if (entity.sort_key.empty()) entity.sort_key = entity.label;
  entities_.push_back(std::move(entity));
}

const Mention &Document::AddMention(Span span, std::string_view entity_id) {
  Mention mention;
  mention.id = MentionIdFor(next_mention_number_);
  mention.span = span;
  mention.entity_id = std::string(entity_id);
  return AddMention(std::move(mention));
}

const Mention &Document::AddMention(Mention mention) {
  const std::optional<uint64_t> number = ParseMentionNumber(mention.id);
  if (!number) {
    throw Error(ErrorCode::kInvalidDocument,
                "malformed mention id: " + mention.id, "mention_id");
  }
  if (FindMention(mention.id) != nullptr) {
    throw Error(ErrorCode::kInvalidDocument,
                "duplicate mention id: " + mention.id, "mention_id");
  }
  if (mention.span.end > text_.size()) {
    throw Error(ErrorCode::kInvalidSelection, "span outside the text", "span");
  }
  if (mention.span.empty()) {
    throw Error(ErrorCode::kEmptySelection, "empty span", "span");
  }
  if (OverlapsAnyMention(mention.span)) {
    throw Error(ErrorCode::kOverlappingMention,
                "span overlaps an existing mention", "span");
  }
  const Entity *entity = FindEntity(mention.entity_id);
  if (entity == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + mention.entity_id, "entity_id");
  }
  if (entity->location == Location::kTrash) {
    throw Error(ErrorCode::kEntityTrashed,
                "entity is in the trash: " + entity->id, "entity_id");
  }
  const Category *category = FindCategory(entity->category);
  mention.category = category->name;
  mention.kind = category->kind;
  next_mention_number_ = std::max(next_mention_number_, *number + 1);
  return InsertMention(std::move(mention));
}

const Mention &Document::InsertMention(Mention mention) {
  auto it = std::lower_bound(mentions_.begin(), mentions_.end(),
                             mention.span.start,
                             [](const Mention &m, size_t start) {
                               return m.span.start < start;
                             });
  return *mentions_.insert(it, std::move(mention));
}

void Document::RebindMention(std::string_view mention_id,
                             std::string_view entity_id) {
  auto it = std::find_if(mentions_.begin(), mentions_.end(),
                         [&](const Mention &m) { return m.id == mention_id; });
  if (it == mentions_.end()) {
    throw Error(ErrorCode::kUnknownMention,
                "unknown mention: " + std::string(mention_id), "mention_id");
  }
  const Entity *entity = FindEntity(entity_id);
  if (entity == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + std::string(entity_id), "entity_id");
  }
  if (entity->category != it->category) {
    throw Error(ErrorCode::kCategoryMismatch,
                "mention category differs from " + entity->id, "entity_id");
  }
  it->entity_id = entity->id;
}

void Document::RemoveEntity(std::string_view id_view) {
  // `id_view` may alias an id that erase_if overwrites.
  const std::string id(id_view);
  std::erase_if(mentions_, [&](const Mention &m) { return m.entity_id == id; });
  std::erase_if(entities_, [&](const Entity &e) { return e.id == id; });
}

void Document::CheckInvariants() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::kInvalidDocument, what);
  };
  std::set<std::string> entity_ids;
  for (const Entity &e : entities_) {
    if (!IsValidEntityId(e.id)) fail("malformed entity id " + e.id);
    if (!entity_ids.insert(e.id).second) fail("duplicate entity " + e.id);
    if (FindCategory(e.category) == nullptr) fail("bad category on " + e.id);
    if (!e.wikidata_id && e.treccani_id) fail("orphan Treccani id on " + e.id);
  }
  std::set<std::string> mention_ids;
  uint64_t max_number = 0;
  for (size_t i = 0; i < mentions_.size(); ++i) {
    const Mention &m = mentions_[i];
    const std::optional<uint64_t> number = ParseMentionNumber(m.id);
    if (!number) fail("malformed mention id " + m.id);
    max_number = std::max(max_number, *number);
    if (!mention_ids.insert(m.id).second) fail("duplicate mention " + m.id);
    if (m.span.empty() || m.span.end > text_.size()) fail("bad span " + m.id);
    if (i > 0 && mentions_[i - 1].span.end > m.span.start) {
      fail("overlapping mentions at " + m.id);
    }
    const Entity *e = FindEntity(m.entity_id);
    if (e == nullptr) fail("dangling entity reference in " + m.id);
    if (e->category != m.category) fail("stale category on " + m.id);
    if (FindCategory(m.category)->kind != m.kind) fail("stale kind " + m.id);
  }
  if (max_number >= next_mention_number_) fail("mention counter behind ids");
}

Document NewDocument(std::string doc_id, std::string_view utf8_text,
                     std::vector<Category> categories) {
  return Document(std::move(doc_id), DecodeUtf8(utf8_text),
                  std::move(categories));
}

}  // namespace kwic
