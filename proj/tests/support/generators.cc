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

#include "support/generators.h"

#include <algorithm>
#include <cstdio>

#include "kwic/engine.h"
#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic::testing {

size_t Uniform(Rng &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

bool Chance(Rng &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

namespace {

const std::vector<std::string> kWords = {
    "La",        "DC",        "vince",     "Democrazia", "Cristiana",
    "Moro",      "Aldo",      "Roma",      "l'Italia",   "dell'Italia",
    "città",     "perché",    "Élite",     "Partito",    "partito",
    "PCI",       "governo",   "1978",      "naïve",      "Straße",
    "über",      "日本",      "a",         "e",          "il",
    "del",       "Senato",    "senato",    "Zaccagnini", "Andreotti",
    "Berlinguer", "anni",     "Moro's",    "l’onorevole", "x1",
};

const std::vector<std::string> kOddTokens = {
    "—", "-", ",", ".", ";", "!?", "...", "«discorso»", "(nota)",
    "“citazione”", "<b>", "A&B", "\"q\"", "&amp;", "<!--", "]]>", "'",
    "Moro,", "(Roma)", "DC.",
};

const std::vector<std::string> kSeparators = {
    " ", " ", " ", " ", " ", " ", "  ", "\n", " \t", "\n\n", ", ", " - ",
};

}  // namespace

std::string RandomText(Rng &rng, size_t max_bytes) {
  const size_t target = Uniform(rng, 0, max_bytes);
  std::string text;
  while (true) {
    std::string piece = Chance(rng, 0.15) ? Pick(rng, kOddTokens)
                                          : Pick(rng, kWords);
    if (!text.empty()) piece = Pick(rng, kSeparators) + piece;
    if (text.size() + piece.size() > target) break;
    text += piece;
  }
  if (Chance(rng, 0.1) && text.size() + 1 <= max_bytes) text += "\n";
  if (Chance(rng, 0.1) && text.size() + 1 <= max_bytes) text.insert(0, " ");
  return text;
}

std::vector<Span> WordSpans(std::u32string_view text) {
  std::vector<Span> spans;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsWordChar(text[i])) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < text.size() && IsWordChar(text[i])) ++i;
    spans.push_back({start, i});
  }
  return spans;
}

namespace {

std::string RandomCategory(Rng &rng, const Document &doc) {
  return doc.categories()[Uniform(rng, 0, doc.categories().size() - 1)].name;
}

}  // namespace

Document RandomDocument(Rng &rng, const std::string &doc_id,
                        const CorpusOptions &options) {
  Document doc = NewDocument(doc_id, RandomText(rng, options.max_bytes));
  const std::vector<Span> words = WordSpans(doc.text());
  if (words.empty()) return doc;

  const size_t goal = Uniform(rng, 0, options.max_mentions);
  for (int attempt = 0; attempt < 80 && doc.mentions().size() < goal;
       ++attempt) {
    const size_t index = Uniform(rng, 0, words.size() - 1);
    const Span word = words[index];
    const std::string category = Chance(rng, 0.7)
                                     ? doc.categories()[Uniform(rng, 0, 2)].name
                                     : RandomCategory(rng, doc);
    Document before = doc;
    try {
      switch (Uniform(rng, 0, 5)) {
        case 0:
        case 1:
          MarkSelection(doc, word, category);
          break;
        case 2: {
          // Two or three consecutive words.
          const size_t last =
              std::min(words.size() - 1, index + Uniform(rng, 1, 2));
          MarkSelection(doc, {word.start, words[last].end}, category);
          break;
        }
        case 3: {
          // Partial word, widened by extend-to-word half of the time.
          const size_t a = Uniform(rng, word.start, word.end - 1);
          const size_t b = Uniform(rng, a + 1, word.end);
          Span span{a, b};
          if (Chance(rng, 0.5)) span = ExtendToWord(doc, span);
          MarkSelection(doc, span, category);
          break;
        }
        default:
          HighlightAllInstances(doc, word, category);
          break;
      }
    } catch (const Error &) {
      doc = std::move(before);
      continue;
    }
    if (doc.mentions().size() > options.max_mentions) doc = std::move(before);
  }

  if (options.reorganize && !doc.entities().empty()) {
    for (int step = Uniform(rng, 0, 3); step > 0; --step) {
      const Entity &e = Pick(rng, doc.entities());
      const std::string id = e.id;
      Document before = doc;
      try {
        switch (Uniform(rng, 0, 3)) {
          case 0:
            MoveTo(doc, id, Location::kScrap);
            break;
          case 1:
            MoveTo(doc, id, Location::kTrash);
            break;
          case 2: {
            const Entity &other = Pick(rng, doc.entities());
            MergeEntities(doc, id, other.id);
            break;
          }
          default:
            RelabelEntity(doc, id, Pick(rng, kWords) + " " + Pick(rng, kWords));
            break;
        }
      } catch (const Error &) {
        doc = std::move(before);
      }
    }
  }
  return doc;
}

MetadataRecord RandomMetadata(Rng &rng) {
  MetadataRecord r;
  char number[4];
  std::snprintf(number, sizeof(number), "%03zu", Uniform(rng, 1, 999));
  r.document_number = number;
  r.author_role = Pick(rng, kWords);
  r.researcher_curator = Pick(rng, kWords) + " " + Pick(rng, kOddTokens);
  r.abstract = RandomText(rng, 200);
  for (size_t i = Uniform(rng, 0, 2); i > 0; --i) {
    r.document_type.push_back(Pick(rng, kWords));
  }
  for (size_t i = Uniform(rng, 0, 2); i > 0; --i) {
    r.document_subject.push_back(Pick(rng, kOddTokens) + "x");
  }
  if (Chance(rng, 0.7)) {
    r.publication_status = Chance(rng, 0.5) ? PublicationStatus::kPublished
                                            : PublicationStatus::kUnpublished;
  }
  for (size_t i = Uniform(rng, 0, 2); i > 0; --i) {
    r.provenance.push_back("Archivio " + Pick(rng, kOddTokens) + " b." +
                           std::to_string(Uniform(rng, 1, 99)));
  }
  r.event_place = Pick(rng, kWords);
  switch (Uniform(rng, 0, 2)) {
    case 0:
      break;
    case 1:
      r.event_date = std::to_string(Uniform(rng, 1000, 2024));
      break;
    default: {
      char date[16];
      std::snprintf(date, sizeof(date), "%02zu-%02zu-%04zu", Uniform(rng, 1, 28),
                    Uniform(rng, 1, 12), Uniform(rng, 1900, 2024));
      r.event_date = date;
    }
  }
  r.additional_notes = RandomText(rng, 80);
  return r;
}

}  // namespace kwic::testing
