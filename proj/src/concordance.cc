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

#include "kwic/concordance.h"

#include <algorithm>
#include <tuple>

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

std::string_view ConcordanceStyleName(ConcordanceStyle style) {
  switch (style) {
    case ConcordanceStyle::kKwic: return "KWIC";
    case ConcordanceStyle::kKwoc: return "KWOC";
    case ConcordanceStyle::kKwac: return "KWAC";
  }
  return "KWIC";
}

std::optional<ConcordanceStyle> ParseConcordanceStyle(std::string_view name) {
  if (name == "KWIC" || name == "kwic") return ConcordanceStyle::kKwic;
  if (name == "KWOC" || name == "kwoc") return ConcordanceStyle::kKwoc;
  if (name == "KWAC" || name == "kwac") return ConcordanceStyle::kKwac;
  return std::nullopt;
}

std::string_view ConcordanceSortName(ConcordanceSort sort) {
  switch (sort) {
    case ConcordanceSort::kKeywordThenRight: return "keyword_then_right";
    case ConcordanceSort::kPosition: return "position";
  }
  return "keyword_then_right";
}

std::optional<ConcordanceSort> ParseConcordanceSort(std::string_view name) {
  if (name == "keyword_then_right" || name == "keyword") {
    return ConcordanceSort::kKeywordThenRight;
  }
  if (name == "position") return ConcordanceSort::kPosition;
  return std::nullopt;
}

namespace {

struct Token {
  size_t start = 0;  // absolute offsets into the document text
  size_t end = 0;
  bool is_word = false;
};

// Whitespace-delimited tokens of text[begin, end).
std::vector<Token> Tokenize(std::u32string_view text, size_t begin,
                            size_t end) {
  std::vector<Token> tokens;
  size_t i = begin;
  while (i < end) {
    while (i < end && IsSpace(text[i])) ++i;
    if (i == end) break;
    Token token;
    token.start = i;
    while (i < end && !IsSpace(text[i])) ++i;
    token.end = i;
    size_t a = token.start, b = token.end;
    while (a < b && IsPunct(text[a])) ++a;
    while (b > a && IsPunct(text[b - 1])) --b;
    token.is_word = a < b;
    tokens.push_back(token);
  }
  return tokens;
}

std::vector<Token> WordsOnly(std::vector<Token> tokens) {
  std::erase_if(tokens, [](const Token &t) { return !t.is_word; });
  return tokens;
}

std::string Field(std::u32string_view text, size_t begin, size_t end) {
  return EncodeUtf8(Trim(text.substr(begin, end - begin)));
}

// Tabs and line breaks inside a field would break the one-line rendering.
std::string Flatten(std::string s) {
  for (char &c : s) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return s;
}

std::string Render(const ConcordanceEntry &e, const ConcordanceConfig &cfg) {
  const std::string keyword = Flatten(e.keyword);
  const std::string left = Flatten(e.left_context);
  const std::string right = Flatten(e.right_context);
  switch (e.style) {
    case ConcordanceStyle::kKwic:
      return left + "\t" + keyword + "\t" + right;
    case ConcordanceStyle::kKwoc:
      return keyword + cfg.kwoc_separator + Flatten(e.line);
    case ConcordanceStyle::kKwac: {
      std::string out = keyword;
      if (!right.empty()) out += " " + right;
      if (!left.empty()) out += cfg.kwac_separator + left;
      return out;
    }
  }
  return keyword;
}

}  // namespace

std::vector<std::u32string> SegmentWords(std::u32string_view text) {
  std::vector<std::u32string> words;
  for (const Token &t : Tokenize(text, 0, text.size())) {
    if (!t.is_word) continue;
    size_t a = t.start, b = t.end;
    while (a < b && IsPunct(text[a])) ++a;
    while (b > a && IsPunct(text[b - 1])) --b;
    words.emplace_back(text.substr(a, b - a));
  }
  return words;
}

ConcordanceEntry BuildEntry(const Document &doc, const Mention &mention,
                            const ConcordanceConfig &config) {
  const std::u32string_view text = doc.text();
  const size_t window = config.window_words;

  size_t line_start = mention.span.start;
  while (line_start > 0 && text[line_start - 1] != U'\n') --line_start;
  size_t line_end = text.find(U'\n', mention.span.end);
  if (line_end == std::u32string_view::npos) line_end = text.size();

  ConcordanceEntry entry;
  entry.mention_id = mention.id;
  entry.keyword = EncodeUtf8(doc.Slice(mention.span));
  entry.style = config.style;
  entry.position = mention.span.start;
  entry.line = Field(text, line_start, line_end);

  const std::vector<Token> left =
      WordsOnly(Tokenize(text, line_start, mention.span.start));
  if (left.size() <= window) {
    entry.left_context = Field(text, line_start, mention.span.start);
  } else {
    entry.left_context =
        Field(text, left[left.size() - window].start, mention.span.start);
  }

  const std::vector<Token> right =
      WordsOnly(Tokenize(text, mention.span.end, line_end));
  if (right.size() <= window) {
    entry.right_context = Field(text, mention.span.end, line_end);
  } else {
    entry.right_context = Field(text, mention.span.end, right[window - 1].end);
  }

  entry.text = Render(entry, config);
  return entry;
}

std::vector<ConcordanceEntry> BuildIndex(const Document &doc,
                                         std::string_view entity_id,
                                         const ConcordanceConfig &config) {
  if (doc.FindEntity(entity_id) == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + std::string(entity_id), "entity_id");
  }
  if (config.window_words == 0) {
    throw Error(ErrorCode::kValidationError, "window must be at least 1",
                "window_words");
  }

  struct Keyed {
    std::u32string keyword;
    std::u32string right;
    ConcordanceEntry entry;
  };
  std::vector<Keyed> keyed;
  for (const Mention *m : doc.MentionsOf(entity_id)) {
    if (doc.IsSuppressed(*m)) continue;
    Keyed k;
    k.entry = BuildEntry(doc, *m, config);
    k.keyword = DecodeUtf8(k.entry.keyword);
    k.right = DecodeUtf8(k.entry.right_context);
    if (config.case_fold_sort) {
      k.keyword = FoldCase(k.keyword);
      k.right = FoldCase(k.right);
    }
    keyed.push_back(std::move(k));
  }

  if (config.sort == ConcordanceSort::kPosition) {
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const Keyed &a, const Keyed &b) {
                       return a.entry.position < b.entry.position;
                     });
  } else {
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const Keyed &a, const Keyed &b) {
                       return std::tie(a.keyword, a.right, a.entry.position) <
                              std::tie(b.keyword, b.right, b.entry.position);
                     });
  }

  std::vector<ConcordanceEntry> entries;
  entries.reserve(keyed.size());
  for (Keyed &k : keyed) entries.push_back(std::move(k.entry));
  return entries;
}

std::vector<EntityListing> ListEntities(const Document &doc,
                                        std::string_view category) {
  if (doc.FindCategory(category) == nullptr) {
    throw Error(ErrorCode::kUnknownCategory,
                "unknown category: " + std::string(category), "category");
  }
  std::vector<std::pair<std::u32string, EntityListing>> rows;
  for (const Entity &e : doc.entities()) {
    if (e.location != Location::kActive || e.category != category) continue;
    EntityListing listing;
    listing.entity = e;
    listing.occurrences = doc.Occurrences(e.id);
    listing.wikidata_linked = e.wikidata_id.has_value();
    rows.emplace_back(FoldCase(DecodeUtf8(e.sort_key)), std::move(listing));
  }
  std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return std::tie(a.first, a.second.entity.sort_key, a.second.entity.id) <
           std::tie(b.first, b.second.entity.sort_key, b.second.entity.id);
  });
  std::vector<EntityListing> out;
  out.reserve(rows.size());
  for (auto &row : rows) out.push_back(std::move(row.second));
  return out;
}

}  // namespace kwic
