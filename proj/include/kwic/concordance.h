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

// KWIC / KWOC / KWAC concordances over an entity's mentions.
//
// The context of a mention is the newline-delimited line containing it. A
// word is a whitespace-delimited token that still has characters left after
// stripping punctuation from both edges; punctuation-only tokens are carried
// along in the context text but never counted. The left and right contexts
// hold at most `window_words` words each, cut at whole tokens.
//
//   KWIC  left <TAB> keyword <TAB> right
//   KWOC  keyword — line
//   KWAC  keyword right / left

#ifndef KWIC_CONCORDANCE_H_
#define KWIC_CONCORDANCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kwic/model.h"

namespace kwic {

enum class ConcordanceStyle { kKwic, kKwoc, kKwac };

std::string_view ConcordanceStyleName(ConcordanceStyle style);
std::optional<ConcordanceStyle> ParseConcordanceStyle(std::string_view name);

enum class ConcordanceSort { kKeywordThenRight, kPosition };

std::string_view ConcordanceSortName(ConcordanceSort sort);
std::optional<ConcordanceSort> ParseConcordanceSort(std::string_view name);

struct ConcordanceConfig {
  ConcordanceStyle style = ConcordanceStyle::kKwic;
  size_t window_words = 5;
  ConcordanceSort sort = ConcordanceSort::kKeywordThenRight;
  bool case_fold_sort = true;
  std::string kwoc_separator = " — ";
  std::string kwac_separator = " / ";
};

struct ConcordanceEntry {
  std::string mention_id;
  std::string keyword;
  std::string left_context;
  std::string right_context;
  std::string line;
  ConcordanceStyle style = ConcordanceStyle::kKwic;
  size_t position = 0;
  // The entry rendered in its style on a single line.
  std::string text;

  bool operator==(const ConcordanceEntry &) const = default;
};

// One entry per non-suppressed mention of the entity, sorted per `config`.
// Throws UnknownEntity, or ValidationError when window_words is zero.
std::vector<ConcordanceEntry> BuildIndex(const Document &doc,
                                         std::string_view entity_id,
                                         const ConcordanceConfig &config);

ConcordanceEntry BuildEntry(const Document &doc, const Mention &mention,
                            const ConcordanceConfig &config);

// Words of `text` per the segmentation rule above.
std::vector<std::u32string> SegmentWords(std::u32string_view text);

struct EntityListing {
  Entity entity;
  size_t occurrences = 0;
  bool wikidata_linked = false;
};

// Active entities of the category, ordered case-insensitively by sort key.
std::vector<EntityListing> ListEntities(const Document &doc,
                                        std::string_view category);

}  // namespace kwic

#endif  // KWIC_CONCORDANCE_H_
