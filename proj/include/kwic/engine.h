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

// Annotation engine: every mutation of a document's markup state.
//
// Callers must serialize mutations of a single document; the functions here
// take no locks. All functions validate first and mutate only on success, so
// a thrown Error leaves the document untouched.

#ifndef KWIC_ENGINE_H_
#define KWIC_ENGINE_H_

#include <string_view>
#include <vector>

#include "kwic/model.h"

namespace kwic {

struct MarkResult {
  Mention mention;
  Entity entity;
};

// Marks `selection` as a mention of `category`. The entity is resolved from
// the selected text: an active entity of that category listing it as an
// alias, else the active entity whose id is its slug (or a numbered variant
// of that slug), else a new entity labelled with the selected text.
MarkResult MarkSelection(Document &doc, Span selection,
                         std::string_view category);

// A position is a word boundary unless word characters sit on both sides.
bool IsWordBoundary(std::u32string_view text, size_t pos);

// Smallest selection containing `selection` whose ends are word boundaries.
Span ExtendToWord(std::u32string_view text, Span selection);
Span ExtendToWord(const Document &doc, Span selection);

// Normalizes the selection with ExtendToWord, then marks every whole-word,
// case-sensitive occurrence of the selected string as a mention of one shared
// entity. Occurrences overlapping an existing mention, or an occurrence
// accepted earlier in the left-to-right scan, are skipped. Returns the new
// mentions in text order.
std::vector<Mention> HighlightAllInstances(Document &doc, Span selection,
                                           std::string_view category);

// Rebinds all mentions of `source` to `target` and deletes `source`; the
// target inherits the source's label and aliases as aliases.
Entity MergeEntities(Document &doc, std::string_view source,
                     std::string_view target);

// An entity left without mentions moves to the trash.
Mention MoveMention(Document &doc, std::string_view mention_id,
                    std::string_view target);

// The entity id is stable; the sort key follows the label only while it
// still equals the old label.
Entity RelabelEntity(Document &doc, std::string_view entity_id,
                     std::string_view new_label);

// An empty key resets the sort key to the label.
Entity SetSortKey(Document &doc, std::string_view entity_id,
                  std::string_view key);

// Trash suppresses the entity's mentions in serialized output without
// deleting them; moving back restores them.
Entity MoveTo(Document &doc, std::string_view entity_id, Location destination);

// Permanently removes trashed entities with their mentions.
size_t EmptyTrash(Document &doc);

void SetStatus(Document &doc, DocumentStatus status);

Entity AddAlias(Document &doc, std::string_view entity_id,
                std::string_view alias);

}  // namespace kwic

#endif  // KWIC_ENGINE_H_
