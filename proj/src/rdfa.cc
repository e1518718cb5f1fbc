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

#include "kwic/rdfa.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "kwic/error.h"
#include "kwic/unicode.h"

namespace kwic {

constexpr std::string_view kPrefixMap =
    "foaf: http://xmlns.com/foaf/0.1/ "
    "dcterms: http://purl.org/dc/terms/ "
    "rdfs: http://www.w3.org/2000/01/rdf-schema# "
    "schema: http://schema.org/ "
    "kwic: urn:x-kwic:";

constexpr std::string_view kTextContainerClass = "document-text";

std::string EscapeHtmlText(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char c : utf8) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapeHtmlAttribute(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char c : utf8) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DecodeHtmlEntities(std::string_view text) {
  static const std::map<std::string, char32_t, std::less<>> kNamed = {
      {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},
      {"quot", U'"'},    {"apos", U'\''},   {"nbsp", U' '},
      {"ndash", U'–'},   {"mdash", U'—'},   {"hellip", U'…'},
      {"laquo", U'«'},   {"raquo", U'»'},   {"lsquo", U'‘'},
      {"rsquo", U'’'},   {"ldquo", U'“'},   {"rdquo", U'”'},
      {"agrave", U'à'},  {"aacute", U'á'},  {"egrave", U'è'},
      {"eacute", U'é'},  {"igrave", U'ì'},  {"iacute", U'í'},
      {"ograve", U'ò'},  {"oacute", U'ó'},  {"ugrave", U'ù'},
      {"uacute", U'ú'},  {"Agrave", U'À'},  {"Egrave", U'È'},
      {"Eacute", U'É'},  {"Igrave", U'Ì'},  {"Ograve", U'Ò'},
      {"Ugrave", U'Ù'},  {"ccedil", U'ç'},  {"copy", U'©'},
      {"sect", U'§'},    {"deg", U'°'},
  };
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    const size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += text[i++];
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    std::optional<char32_t> decoded;
    if (name.size() > 1 && name[0] == '#') {
      uint32_t value = 0;
      const bool hex = name[1] == 'x' || name[1] == 'X';
      std::string_view digits = name.substr(hex ? 2 : 1);
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), value,
                                       hex ? 16 : 10);
      if (ec == std::errc() && ptr == digits.data() + digits.size() &&
          !digits.empty() && value > 0 && value <= 0x10FFFF &&
          !(value >= 0xD800 && value <= 0xDFFF)) {
        decoded = static_cast<char32_t>(value);
      }
    } else if (auto it = kNamed.find(name); it != kNamed.end()) {
      decoded = it->second;
    }
    if (!decoded) {
      out += text[i++];
      continue;
    }
    out += EncodeUtf8(*decoded);
    i = semi + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void AppendMeta(std::string &out, const std::string &about,
                std::string_view attributes) {
  out += "<meta about=\"";
  out += EscapeHtmlAttribute(about);
  out += "\" ";
  out += attributes;
  out += ">\n";
}

std::string Attr(std::string_view name, std::string_view value) {
  std::string out(name);
  out += "=\"";
  out += EscapeHtmlAttribute(value);
  out += "\"";
  return out;
}

}  // namespace

std::string RenderRdfa(const Document &doc) {
  std::string out;
  out += "<!DOCTYPE html>\n";
  out += "<html prefix=\"";
  out += kPrefixMap;
  out += "\">\n<head>\n<meta charset=\"utf-8\">\n<title>";
  out += EscapeHtmlText(doc.id());
  out += "</title>\n";

  for (const Entity &e : doc.entities()) {
    if (e.location == Location::kTrash) continue;
    const Category &category = *doc.FindCategory(e.category);
    AppendMeta(out, e.id, Attr("typeof", category.rdfa_type));
    AppendMeta(out, e.id,
               Attr("property", "rdfs:label") + " " + Attr("content", e.label));
    if (e.wikidata_id) {
      AppendMeta(out, e.id,
                 Attr("property", "dcterms:relation") + " " +
                     Attr("resource",
                          std::string(kWikidataEntityBase) + *e.wikidata_id));
    }
    if (e.sort_key != e.label) {
      AppendMeta(out, e.id,
                 Attr("property", "kwic:sortKey") + " " +
                     Attr("content", e.sort_key));
    }
    for (const std::string &alias : e.aliases) {
      AppendMeta(out, e.id,
                 Attr("property", "kwic:alias") + " " + Attr("content", alias));
    }
    if (e.treccani_id) {
      AppendMeta(out, e.id,
                 Attr("property", "kwic:treccaniId") + " " +
                     Attr("content", *e.treccani_id));
    }
    if (e.location == Location::kScrap) {
      AppendMeta(out, e.id,
                 Attr("property", "kwic:location") + " " +
                     Attr("content", "scrap"));
    }
  }
  out += "</head>\n<body>\n<div class=\"";
  out += kTextContainerClass;
  out += "\">";

  const std::u32string_view text = doc.text();
  size_t cursor = 0;
  for (const Mention &m : doc.mentions()) {
    if (doc.IsSuppressed(m)) continue;
    const Category &category = *doc.FindCategory(m.category);
    out += EscapeHtmlText(EncodeUtf8(text.substr(cursor, m.span.start - cursor)));
    out += "<span ";
    out += Attr("id", m.id);
    out += " " + Attr("typeof", category.rdfa_type);
    out += " " + Attr("about", "#" + m.id);
    out += " " + Attr("class", std::string(CategoryKindName(category.kind)) +
                                   " " + category.display_class);
    out += " " + Attr("property", category.rdfa_property);
    out += " " + Attr("resource", m.entity_id);
    out += ">";
    out += EscapeHtmlText(EncodeUtf8(doc.Slice(m.span)));
    out += "</span>";
    cursor = m.span.end;
  }
  out += EscapeHtmlText(EncodeUtf8(text.substr(cursor)));
  out += "</div>\n</body>\n</html>\n";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct HtmlToken {
  enum class Type { kText, kStartTag, kEndTag, kOther };
  Type type = Type::kText;
  std::string name;  // lower-cased tag name
  std::vector<std::pair<std::string, std::string>> attributes;
  bool self_closing = false;
  std::string text;  // raw text for kText
  size_t offset = 0;

  const std::string *Attribute(std::string_view key) const {
    for (const auto &[k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

std::string SourcePosition(std::string_view html, size_t offset) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i < offset && i < html.size(); ++i) {
    if (html[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void ParseFailure(std::string_view html, size_t offset,
                               const std::string &what) {
  throw Error(ErrorCode::kParseError, what + " at " + SourcePosition(html, offset),
              "html");
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsHtmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

std::vector<HtmlToken> Tokenize(std::string_view html) {
  std::vector<HtmlToken> tokens;
  std::string pending_text;
  size_t text_offset = 0;
  auto flush_text = [&] {
    if (pending_text.empty()) return;
    HtmlToken t;
    t.type = HtmlToken::Type::kText;
    t.text = std::move(pending_text);
    t.offset = text_offset;
    tokens.push_back(std::move(t));
    pending_text.clear();
  };

  size_t i = 0;
  const size_t n = html.size();
  while (i < n) {
    if (html[i] != '<') {
      if (pending_text.empty()) text_offset = i;
      pending_text += html[i++];
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      flush_text();
      const size_t close = html.find("-->", i + 4);
      if (close == std::string_view::npos) ParseFailure(html, i, "unterminated comment");
      i = close + 3;
      continue;
    }
    if (i + 1 < n && (html[i + 1] == '!' || html[i + 1] == '?')) {
      flush_text();
      const size_t close = html.find('>', i);
      if (close == std::string_view::npos) ParseFailure(html, i, "unterminated declaration");
      i = close + 1;
      continue;
    }
    const bool end_tag = i + 1 < n && html[i + 1] == '/';
    const size_t name_start = i + (end_tag ? 2 : 1);
    if (name_start >= n || !std::isalpha(static_cast<unsigned char>(html[name_start]))) {
      if (pending_text.empty()) text_offset = i;
      pending_text += html[i++];
      continue;
    }
    flush_text();
    HtmlToken tag;
    tag.offset = i;
    tag.type = end_tag ? HtmlToken::Type::kEndTag : HtmlToken::Type::kStartTag;
    size_t j = name_start;
    while (j < n && !IsHtmlSpace(html[j]) && html[j] != '>' && html[j] != '/') ++j;
    tag.name = Lower(html.substr(name_start, j - name_start));

    // Attributes.
    while (true) {
      while (j < n && IsHtmlSpace(html[j])) ++j;
      if (j >= n) ParseFailure(html, tag.offset, "unterminated tag <" + tag.name);
      if (html[j] == '>') {
        ++j;
        break;
      }
      if (html[j] == '/') {
        if (j + 1 < n && html[j + 1] == '>') {
          tag.self_closing = true;
          j += 2;
          break;
        }
        ++j;
        continue;
      }
      const size_t attr_start = j;
      while (j < n && !IsHtmlSpace(html[j]) && html[j] != '>' &&
             html[j] != '/' && html[j] != '=') {
        ++j;
      }
      std::string key = Lower(html.substr(attr_start, j - attr_start));
      while (j < n && IsHtmlSpace(html[j])) ++j;
      std::string value;
      if (j < n && html[j] == '=') {
        ++j;
        while (j < n && IsHtmlSpace(html[j])) ++j;
        if (j < n && (html[j] == '"' || html[j] == '\'')) {
          const char quote = html[j];
          const size_t close = html.find(quote, j + 1);
          if (close == std::string_view::npos) {
            ParseFailure(html, j, "unterminated attribute value for " + key);
          }
          value = DecodeHtmlEntities(html.substr(j + 1, close - j - 1));
          j = close + 1;
        } else {
          const size_t value_start = j;
          while (j < n && !IsHtmlSpace(html[j]) && html[j] != '>') ++j;
          value = DecodeHtmlEntities(html.substr(value_start, j - value_start));
        }
      }
      if (tag.Attribute(key) != nullptr) {
        ParseFailure(html, attr_start, "duplicate attribute " + key);
      }
      tag.attributes.emplace_back(std::move(key), std::move(value));
    }
    i = j;
    const bool raw = !end_tag && (tag.name == "script" || tag.name == "style");
    const std::string raw_name = tag.name;
    tokens.push_back(std::move(tag));
    if (raw) {
      const size_t close = Lower(html.substr(i)).find("</" + raw_name);
      i = close == std::string::npos ? n : i + close;
    }
  }
  flush_text();
  return tokens;
}

bool HasClassToken(const HtmlToken &tag, std::string_view token) {
  const std::string *cls = tag.Attribute("class");
  if (cls == nullptr) return false;
  size_t i = 0;
  while (i < cls->size()) {
    while (i < cls->size() && IsHtmlSpace((*cls)[i])) ++i;
    size_t j = i;
    while (j < cls->size() && !IsHtmlSpace((*cls)[j])) ++j;
    if (j > i && std::string_view(*cls).substr(i, j - i) == token) return true;
    i = j;
  }
  return false;
}

std::vector<std::string> SplitClasses(const std::string &cls) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < cls.size()) {
    while (i < cls.size() && IsHtmlSpace(cls[i])) ++i;
    size_t j = i;
    while (j < cls.size() && !IsHtmlSpace(cls[j])) ++j;
    if (j > i) out.push_back(cls.substr(i, j - i));
    i = j;
  }
  return out;
}

bool IsBlockElement(std::string_view name) {
  static const std::set<std::string, std::less<>> kBlocks = {
      "address", "article", "aside", "blockquote", "br", "dd", "div",
      "dl", "dt", "footer", "h1", "h2", "h3", "h4", "h5", "h6",
      "header", "hr", "li", "ol", "p", "pre", "section", "table", "tr", "ul"};
  return kBlocks.contains(name);
}

bool IsMentionSpan(const HtmlToken &tag) {
  if (tag.name != "span") return false;
  if (tag.Attribute("resource") != nullptr) return true;
  const std::string *id = tag.Attribute("id");
  return id != nullptr && id->starts_with("mention-");
}

struct ParsedSpan {
  std::string mention_id;
  std::string entity_id;
  std::string category;
  Span span;
  size_t offset = 0;  // byte offset of the start tag
};

// Builds the plain text of the body while recording mention spans.
class BodyReader {
 public:
  BodyReader(std::string_view html, const std::vector<Category> &categories,
             std::vector<std::string> &warnings)
      : html_(html), categories_(categories), warnings_(warnings) {}

  void Read(const std::vector<HtmlToken> &tokens, size_t begin, size_t end,
            bool literal) {
    literal_ = literal;
    for (size_t i = begin; i < end; ++i) {
      const HtmlToken &t = tokens[i];
      switch (t.type) {
        case HtmlToken::Type::kText:
          AppendText(DecodeEntitiesChecked(t));
          break;
        case HtmlToken::Type::kStartTag:
          if (IsMentionSpan(t)) {
            OpenMention(t);
          } else if (t.name == "span" && open_) {
            ++inner_span_depth_;
          } else if (t.name == "br") {
            LineBreak(true);
          } else if (!literal_ && IsBlockElement(t.name)) {
            LineBreak(false);
          }
          break;
        case HtmlToken::Type::kEndTag:
          if (t.name == "span" && open_) {
            if (inner_span_depth_ > 0) {
              --inner_span_depth_;
            } else {
              CloseMention();
            }
          } else if (!literal_ && IsBlockElement(t.name)) {
            LineBreak(false);
          }
          break;
        case HtmlToken::Type::kOther:
          break;
      }
    }
    if (open_) ParseFailure(html_, open_->offset, "unclosed mention span");
    // Trailing whitespace in collapsing mode is dropped.
    if (!literal_) {
      while (!text_.empty() && (text_.back() == U'\n' || text_.back() == U' ')) {
        text_.pop_back();
      }
      for (ParsedSpan &s : spans_) {
        s.span.end = std::min(s.span.end, text_.size());
      }
    }
  }

  std::u32string &text() { return text_; }
  std::vector<ParsedSpan> &spans() { return spans_; }

 private:
  std::u32string DecodeEntitiesChecked(const HtmlToken &t) {
    const std::string decoded = DecodeHtmlEntities(t.text);
    if (!IsValidUtf8(decoded)) ParseFailure(html_, t.offset, "ill-formed UTF-8");
    return DecodeUtf8(decoded);
  }

  void AppendText(const std::u32string &chunk) {
    if (literal_) {
      text_ += chunk;
      return;
    }
    for (char32_t c : chunk) {
      if (IsSpace(c) && c != U' ') {
        if (!text_.empty() && text_.back() != U'\n') pending_space_ = true;
        continue;
      }
      if (pending_space_) {
        text_.push_back(U' ');
        pending_space_ = false;
      }
      if (open_ && !open_started_) {
        open_->span.start = text_.size();
        open_started_ = true;
      }
      text_.push_back(c);
    }
  }

  void LineBreak(bool explicit_break) {
    if (literal_) {
      text_.push_back(U'\n');
      return;
    }
    pending_space_ = false;
    if (explicit_break) {
      text_.push_back(U'\n');
    } else if (!text_.empty() && text_.back() != U'\n') {
      text_.push_back(U'\n');
    }
  }

  void OpenMention(const HtmlToken &t) {
    if (open_) ParseFailure(html_, t.offset, "nested mention span");
    ParsedSpan span;
    span.offset = t.offset;
    const std::string *id = t.Attribute("id");
    if (id == nullptr || !ParseMentionNumber(*id)) {
      ParseFailure(html_, t.offset, "mention span without a mention-N id");
    }
    span.mention_id = *id;
    const std::string *about = t.Attribute("about");
    if (about != nullptr && *about != "#" + *id) {
      ParseFailure(html_, t.offset, "about does not match id " + *id);
    }
    const std::string *resource = t.Attribute("resource");
    if (resource == nullptr || !IsValidEntityId(*resource)) {
      ParseFailure(html_, t.offset, "mention " + *id + " has a malformed resource");
    }
    span.entity_id = *resource;
    const std::string *cls = t.Attribute("class");
    const std::vector<std::string> classes =
        cls == nullptr ? std::vector<std::string>{} : SplitClasses(*cls);
    if (classes.size() != 2) {
      ParseFailure(html_, t.offset,
                   "mention " + *id + " needs class=\"<kind> <category>\"");
    }
    const std::optional<CategoryKind> kind = ParseCategoryKind(classes[0]);
    const Category *category = nullptr;
    for (const Category &c : categories_) {
      if (c.display_class == classes[1]) category = &c;
    }
    if (!kind || category == nullptr || category->kind != *kind) {
      ParseFailure(html_, t.offset,
                   "mention " + *id + " has unknown class \"" + *cls + "\"");
    }
    span.category = category->name;
    span.span.start = text_.size();
    if (literal_) {
      open_started_ = true;
    } else {
      open_started_ = false;
    }
    open_ = std::move(span);
  }

  void CloseMention() {
    ParsedSpan span = std::move(*open_);
    open_.reset();
    if (!open_started_) span.span.start = text_.size();
    span.span.end = text_.size();
    if (span.span.empty()) {
      warnings_.push_back("EmptyMention: " + span.mention_id +
                          " has no text and was dropped");
      return;
    }
    spans_.push_back(std::move(span));
  }

  std::string_view html_;
  const std::vector<Category> &categories_;
  std::vector<std::string> &warnings_;
  bool literal_ = false;
  bool pending_space_ = false;
  std::u32string text_;
  std::vector<ParsedSpan> spans_;
  std::optional<ParsedSpan> open_;
  bool open_started_ = false;
  int inner_span_depth_ = 0;
};

struct MetaGroup {
  std::string about;
  std::optional<std::string> rdfa_type;
  std::optional<std::string> label;
  std::optional<std::string> relation;
  std::optional<std::string> sort_key;
  std::vector<std::string> aliases;
  std::optional<std::string> treccani;
  bool scrap = false;
};

// Index one past the matching end tag of the element opened at `open`.
size_t MatchingEnd(const std::vector<HtmlToken> &tokens, size_t open) {
  const std::string &name = tokens[open].name;
  int depth = 0;
  for (size_t i = open; i < tokens.size(); ++i) {
    const HtmlToken &t = tokens[i];
    if (t.name != name) continue;
    if (t.type == HtmlToken::Type::kStartTag && !t.self_closing) ++depth;
    if (t.type == HtmlToken::Type::kEndTag && --depth == 0) return i;
  }
  return tokens.size();
}

}  // namespace

ParseResult ParseRdfa(std::string_view html, const ParseOptions &options) {
  ValidateCategories(options.categories);
  const std::vector<HtmlToken> tokens = Tokenize(html);
  std::vector<std::string> warnings;

  // Head: title and entity metas.
  std::string title;
  std::vector<MetaGroup> groups;
  auto group_for = [&](const std::string &about) -> MetaGroup & {
    for (MetaGroup &g : groups) {
      if (g.about == about) return g;
    }
    groups.push_back(MetaGroup{about});
    return groups.back();
  };
  size_t body_begin = 0, body_end = tokens.size();
  bool saw_body = false;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const HtmlToken &t = tokens[i];
    if (t.type == HtmlToken::Type::kStartTag && t.name == "title") {
      for (size_t k = i + 1; k < tokens.size() &&
                             tokens[k].type == HtmlToken::Type::kText;
           ++k) {
        title += DecodeHtmlEntities(tokens[k].text);
      }
    } else if (t.type == HtmlToken::Type::kStartTag && t.name == "body" &&
               !saw_body) {
      saw_body = true;
      body_begin = i + 1;
      body_end = MatchingEnd(tokens, i);
    } else if (t.type == HtmlToken::Type::kStartTag && t.name == "meta") {
      const std::string *about = t.Attribute("about");
      if (about == nullptr) continue;
      if (!IsValidEntityId(*about)) {
        warnings.push_back("IgnoredMeta: about=\"" + *about + "\"");
        continue;
      }
      MetaGroup &g = group_for(*about);
      const std::string *property = t.Attribute("property");
      const std::string *content = t.Attribute("content");
      const std::string *resource = t.Attribute("resource");
      if (const std::string *type = t.Attribute("typeof")) g.rdfa_type = *type;
      if (property == nullptr) continue;
      if (*property == "rdfs:label" && content) {
        g.label = *content;
      } else if (*property == "dcterms:relation" && resource) {
        g.relation = *resource;
      } else if (*property == "kwic:sortKey" && content) {
        g.sort_key = *content;
      } else if (*property == "kwic:alias" && content) {
        g.aliases.push_back(*content);
      } else if (*property == "kwic:treccaniId" && content) {
        g.treccani = *content;
      } else if (*property == "kwic:location" && content && *content == "scrap") {
        g.scrap = true;
      }
    }
  }
  if (!saw_body) {
    // A fragment: everything outside <head> is body content.
    body_begin = 0;
    body_end = tokens.size();
  }

  // Body text.
  size_t container = tokens.size();
  for (size_t i = body_begin; i < body_end; ++i) {
    const HtmlToken &t = tokens[i];
    if (t.type == HtmlToken::Type::kStartTag && t.name == "div" &&
        HasClassToken(t, kTextContainerClass)) {
      container = i;
      break;
    }
  }
  BodyReader reader(html, options.categories, warnings);
  if (container < tokens.size()) {
    reader.Read(tokens, container + 1, MatchingEnd(tokens, container), true);
  } else {
    // Skip any <head> section in fragments.
    size_t begin = body_begin;
    for (size_t i = body_begin; i < body_end; ++i) {
      if (tokens[i].type == HtmlToken::Type::kStartTag &&
          tokens[i].name == "head") {
        begin = MatchingEnd(tokens, i) + 1;
      }
    }
    std::vector<HtmlToken> kept;
    for (size_t i = begin; i < body_end && i < tokens.size(); ++i) {
      const HtmlToken &t = tokens[i];
      if (t.name == "title" || t.name == "meta" || t.name == "html" ||
          t.name == "body" || t.name == "script" || t.name == "style") {
        continue;
      }
      kept.push_back(t);
    }
    reader.Read(kept, 0, kept.size(), false);
  }

  std::string doc_id = options.doc_id;
  if (doc_id.empty()) doc_id = TrimUtf8(title);
  if (doc_id.empty()) doc_id = "untitled";
  Document doc(doc_id, std::move(reader.text()), options.categories);

  // Entities: span classes are authoritative for categories.
  std::map<std::string, std::string> span_category;
  for (const ParsedSpan &s : reader.spans()) {
    auto [it, inserted] = span_category.emplace(s.entity_id, s.category);
    if (!inserted && it->second != s.category) {
      ParseFailure(html, s.offset,
                   "entity " + s.entity_id + " used with two categories");
    }
  }
  for (const MetaGroup &g : groups) {
    Entity e;
    e.id = g.about;
    if (auto it = span_category.find(g.about); it != span_category.end()) {
      e.category = it->second;
    } else {
      for (const Category &c : options.categories) {
        if (g.rdfa_type && c.rdfa_type == *g.rdfa_type) {
          e.category = c.name;
          break;
        }
      }
    }
    if (e.category.empty()) {
      warnings.push_back("IgnoredMeta: no category for " + g.about);
      continue;
    }
    e.label = g.label && !TrimUtf8(*g.label).empty() ? *g.label : g.about.substr(1);
    e.sort_key = g.sort_key.value_or(e.label);
    if (g.relation) {
      if (g.relation->starts_with(kWikidataEntityBase) &&
          IsValidQid(g.relation->substr(kWikidataEntityBase.size()))) {
        e.wikidata_id = g.relation->substr(kWikidataEntityBase.size());
        e.treccani_id = g.treccani;
      } else {
        warnings.push_back("IgnoredRelation: " + *g.relation);
      }
    }
    e.aliases = g.aliases;
    e.location = g.scrap ? Location::kScrap : Location::kActive;
    doc.AddEntity(std::move(e));
  }
  for (const ParsedSpan &s : reader.spans()) {
    if (doc.FindEntity(s.entity_id) != nullptr) continue;
    Entity e;
    e.id = s.entity_id;
    e.label = s.entity_id.substr(1);
    e.sort_key = e.label;
    e.category = s.category;
    doc.AddEntity(std::move(e));
    warnings.push_back("DanglingEntity: " + s.entity_id +
                       " has no head metadata; synthesized from its span");
  }

  std::set<std::string> seen;
  for (ParsedSpan &s : reader.spans()) {
    if (!seen.insert(s.mention_id).second) {
      ParseFailure(html, s.offset, "duplicate mention id " + s.mention_id);
    }
    Mention m;
    m.id = s.mention_id;
    m.span = s.span;
    m.entity_id = s.entity_id;
    doc.AddMention(std::move(m));
  }
  return ParseResult{std::move(doc), std::move(warnings)};
}

}  // namespace kwic
