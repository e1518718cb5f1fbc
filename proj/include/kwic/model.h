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

// Document, mention, entity and category model shared by every module.
//
// Text is stored as UTF-32; all spans are half-open ranges of Unicode scalar
// values. Mentions are kept sorted by start offset and never overlap. Entities
// are per document and kept in creation order, which is also the order in
// which they are serialized.

#ifndef KWIC_MODEL_H_
#define KWIC_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kwic {

struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool empty() const { return start >= end; }
  bool Overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span &) const = default;
};

enum class CategoryKind { kMention, kReference };

// "mention" or "reference"; also the class prefix in serialized spans.
std::string_view CategoryKindName(CategoryKind kind);
std::optional<CategoryKind> ParseCategoryKind(std::string_view name);

struct Category {
  std::string name;
  CategoryKind kind = CategoryKind::kMention;
  std::string display_class;
  std::string rdfa_type;
  std::string rdfa_property = "dcterms:references";

  bool operator==(const Category &) const = default;
};

// People, Places, Organizations (mentions); Bibliographic references and
// Quotations (references).
std::vector<Category> DefaultCategories();

// Names and display classes must be unique and non-empty.
void ValidateCategories(const std::vector<Category> &categories);

enum class DocumentStatus { kToBeStarted, kInProgress, kFinished };

std::string_view DocumentStatusName(DocumentStatus status);
std::optional<DocumentStatus> ParseDocumentStatus(std::string_view name);

enum class Location { kActive, kScrap, kTrash };

std::string_view LocationName(Location location);
std::optional<Location> ParseLocation(std::string_view name);

inline constexpr std::string_view kTreccaniNotDetected = "Not Detected";

struct Entity {
  std::string id;
  std::string label;
  std::string sort_key;
  std::string category;
  std::optional<std::string> wikidata_id;
  std::optional<std::string> treccani_id;
  Location location = Location::kActive;
  std::vector<std::string> aliases;

  bool operator==(const Entity &) const = default;
};

struct Mention {
  std::string id;
  Span span;
  std::string entity_id;
  // Denormalized from the bound entity; kept in sync by Document.
  std::string category;
  CategoryKind kind = CategoryKind::kMention;

  bool operator==(const Mention &) const = default;
};

// "#" + label with whitespace removed and each word title-cased.
// Throws InvalidLabel for an empty or whitespace-only label.
std::string EntityIdFromLabel(std::string_view label);

bool IsValidEntityId(std::string_view id);
// "mention-N" with N a positive integer without leading zeros.
std::optional<uint64_t> ParseMentionNumber(std::string_view id);
std::string MentionIdFor(uint64_t number);
// "Q" followed by a positive integer.
bool IsValidQid(std::string_view qid);

class Document {
 public:
  Document(std::string doc_id, std::u32string text,
           std::vector<Category> categories = DefaultCategories());

  const std::string &id() const { return id_; }
  const std::u32string &text() const { return text_; }
  std::string TextUtf8() const;
  std::u32string_view Slice(Span span) const;

  const std::vector<Mention> &mentions() const { return mentions_; }
  const std::vector<Entity> &entities() const { return entities_; }
  const std::vector<Category> &categories() const { return categories_; }

  DocumentStatus status() const { return status_; }
  void set_status(DocumentStatus status) { status_ = status; }

  const std::optional<std::string> &metadata_id() const {
    return metadata_id_;
  }
  void set_metadata_id(std::optional<std::string> id) {
    metadata_id_ = std::move(id);
  }

  uint64_t next_mention_number() const { return next_mention_number_; }
  // Only moves forward; ids of purged mentions are never handed out again.
  void set_next_mention_number(uint64_t number);

  const Category *FindCategory(std::string_view name) const;
  const Category *FindCategoryByClass(std::string_view display_class) const;
  const Entity *FindEntity(std::string_view id) const;
  const Mention *FindMention(std::string_view id) const;

  // Callers must not change the id or category through this pointer.
  Entity *mutable_entity(std::string_view id);

  size_t Occurrences(std::string_view entity_id) const;
  std::vector<const Mention *> MentionsOf(std::string_view entity_id) const;
  // A mention is suppressed while its entity sits in the trash.
  bool IsSuppressed(const Mention &mention) const;
  bool OverlapsAnyMention(Span span) const;

  // Smallest free id among base, base-2, base-3, ...
  std::string UniqueEntityId(std::string_view base) const;

  // Validated mutation primitives. The annotation engine is built on these.
  void AddEntity(Entity entity);
  // Allocates the next "mention-N" id.
  const Mention &AddMention(Span span, std::string_view entity_id);
  // Uses mention.id verbatim; category and kind are taken from the entity.
  const Mention &AddMention(Mention mention);
  void RebindMention(std::string_view mention_id, std::string_view entity_id);
  void RemoveEntity(std::string_view id);

  // Re-checks every invariant; throws InvalidDocument.
  void CheckInvariants() const;

  bool operator==(const Document &) const = default;

 private:
  Entity *FindEntityMutable(std::string_view id);
  const Mention &InsertMention(Mention mention);

  std::string id_;
  std::u32string text_;
  std::vector<Category> categories_;
  std::vector<Mention> mentions_;
  std::vector<Entity> entities_;
  DocumentStatus status_ = DocumentStatus::kToBeStarted;
  std::optional<std::string> metadata_id_;
  uint64_t next_mention_number_ = 1;
};

// Empty mentions, status ToBeStarted, no metadata. Throws InvalidText for
// ill-formed UTF-8.
Document NewDocument(std::string doc_id, std::string_view utf8_text,
                     std::vector<Category> categories = DefaultCategories());

}  // namespace kwic

#endif  // KWIC_MODEL_H_
