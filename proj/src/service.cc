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

#include "kwic/service.h"

#include <charconv>
#include <functional>

#include "httplib.h"
#include "json.hpp"
#include "kwic/concordance.h"
#include "kwic/engine.h"
#include "kwic/entity_io.h"
#include "kwic/json_codec.h"
#include "kwic/metadata.h"
#include "kwic/rdfa.h"
#include "kwic/tei.h"
#include "kwic/unicode.h"

namespace kwic {

using json = nlohmann::json;

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidLabel:
    case ErrorCode::kInvalidText:
    case ErrorCode::kEmptySelection:
    case ErrorCode::kInvalidSelection:
    case ErrorCode::kSelfMerge:
    case ErrorCode::kSameLocation:
    case ErrorCode::kParseError:
    case ErrorCode::kImportError:
    case ErrorCode::kInvalidQid:
    case ErrorCode::kValidationError:
    case ErrorCode::kBadRequest:
      return 400;
    case ErrorCode::kInvalidCredentials:
    case ErrorCode::kTokenExpired:
    case ErrorCode::kInvalidToken:
      return 401;
    case ErrorCode::kUnknownCategory:
    case ErrorCode::kUnknownEntity:
    case ErrorCode::kUnknownMention:
    case ErrorCode::kUnknownDocument:
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kDuplicateDocument:
    case ErrorCode::kConflictError:
      return 409;
    case ErrorCode::kOverlappingMention:
    case ErrorCode::kCategoryMismatch:
    case ErrorCode::kEntityTrashed:
      return 422;
    case ErrorCode::kInvalidDocument:
    case ErrorCode::kStorageError:
      return 500;
    case ErrorCode::kReconciliationUnavailable:
      return 502;
  }
  return 500;
}

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace(std::shared_ptr<DocumentStore> store)
    : store_(std::move(store)) {}

std::shared_ptr<Workspace::Slot> Workspace::Acquire(const std::string &doc_id) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mu_);
    auto &entry = slots_[doc_id];
    if (!entry) entry = std::make_shared<Slot>();
    slot = entry;
  }
  std::lock_guard lock(slot->mu);
  if (!slot->document) {
    try {
      StoredDocument stored = store_->Load(doc_id);
      slot->document = std::move(stored.document);
      slot->base_revision = stored.revision;
      slot->dirty = false;
    } catch (...) {
      Forget(doc_id);
      throw;
    }
  }
  return slot;
}

void Workspace::Forget(const std::string &doc_id) {
  std::lock_guard lock(mu_);
  slots_.erase(doc_id);
}

// ---------------------------------------------------------------------------
// Routing helpers

namespace {

constexpr char kPrefix[] = "/api/v1";
constexpr char kDocRoute[] = "/api/v1/documents/([^/]+)";

[[noreturn]] void BadRequest(const std::string &message,
                             std::string field = {}) {
  throw Error(ErrorCode::kBadRequest, message, std::move(field));
}

struct Context {
  const httplib::Request &req;
  httplib::Response &res;
  std::optional<TokenClaims> claims;
  int status = 200;

  json Body() const {
    if (req.body.empty()) return json::object();
    try {
      json body = json::parse(req.body);
      if (!body.is_object()) BadRequest("request body must be a JSON object");
      return body;
    } catch (const json::parse_error &) {
      BadRequest("request body is not valid JSON");
    }
  }

  std::string Param(const char *name, bool required = true) const {
    if (!req.has_param(name)) {
      if (required) BadRequest(std::string("missing query parameter ") + name, name);
      return {};
    }
    return req.get_param_value(name);
  }

  std::string DocId() const { return req.matches[1].str(); }
};

std::string StringField(const json &body, const char *key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    BadRequest(std::string(key) + " must be a string", key);
  }
  return it->get<std::string>();
}

size_t OffsetField(const json &body, const char *key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_number_integer() || it->get<int64_t>() < 0) {
    BadRequest(std::string(key) + " must be a non-negative integer", key);
  }
  return it->get<size_t>();
}

Span SpanFields(const json &body) {
  return {OffsetField(body, "start"), OffsetField(body, "end")};
}

int IntParam(const std::string &text, const char *name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    BadRequest(std::string(name) + " must be an integer", name);
  }
  return value;
}

json ErrorBody(ErrorCode code, const std::string &message,
               const std::string &field) {
  json error = {{"code", ErrorCodeName(code)}, {"message", message}};
  error["field"] = field.empty() ? json(nullptr) : json(field);
  return {{"error", error}};
}

json SummaryToJson(const DocumentSummary &s) {
  return {{"doc_id", s.doc_id},
          {"status", DocumentStatusName(s.status)},
          {"revision", s.revision},
          {"has_metadata", s.has_metadata},
          {"text_length", s.text_length},
          {"mention_count", s.mention_count}};
}

json WorkingCopyJson(const Workspace::Slot &slot) {
  json j = DocumentToJson(*slot.document);
  j["revision"] = slot.base_revision;
  j["dirty"] = slot.dirty;
  return j;
}

bool ValidDocId(std::string_view id) {
  if (id.empty() || id.size() > 200 || !IsValidUtf8(id)) return false;
  for (unsigned char c : id) {
    if (c < 0x20 || c == '/' || c == '\\' || c == 0x7F) return false;
  }
  return true;
}

json CandidateToJson(const WikidataCandidate &c) {
  return {{"qid", c.qid},
          {"label", c.label},
          {"description", c.description},
          {"match_score", c.match_score}};
}

json DetailsToJson(const EntityDetails &d) {
  return {{"qid", d.qid},
          {"label", d.label},
          {"description", d.description},
          {"treccani_id", d.treccani_id}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Service

Service::Service(ServiceOptions options)
    : options_(std::move(options)), workspace_(options_.store) {}

void Service::Register(httplib::Server &server) {
  using Handler = std::function<std::optional<json>(Context &)>;
  enum class Auth { kNone, kRequired };

  auto wrap = [this](Auth auth, Handler handler) {
    return [this, auth, handler](const httplib::Request &req,
                                 httplib::Response &res) {
      Context ctx{req, res, std::nullopt};
      try {
        if (auth == Auth::kRequired) {
          const std::string header = req.get_header_value("Authorization");
          if (!header.starts_with("Bearer ")) {
            throw Error(ErrorCode::kInvalidToken, "missing bearer token",
                        "Authorization");
          }
          ctx.claims = options_.signer->Verify(header.substr(7));
        }
        std::optional<json> body = handler(ctx);
        if (body) {
          res.status = ctx.status;
          res.set_content(body->dump(), "application/json");
        }
      } catch (const Error &e) {
        res.status = HttpStatusFor(e.code());
        res.set_content(ErrorBody(e.code(), e.what(), e.field()).dump(),
                        "application/json");
      } catch (const std::exception &e) {
        res.status = 500;
        res.set_content(
            ErrorBody(ErrorCode::kStorageError, e.what(), "").dump(),
            "application/json");
      }
    };
  };

  // Runs `fn` on the locked working copy.
  auto with_doc = [this](Context &ctx, auto &&fn) {
    auto slot = workspace_.Acquire(ctx.DocId());
    std::lock_guard lock(slot->mu);
    return fn(*slot);
  };
  // Same, marking the copy dirty when `fn` returns normally.
  auto mutate = [with_doc](Context &ctx, auto &&fn) {
    return with_doc(ctx, [&](Workspace::Slot &slot) {
      auto result = fn(*slot.document);
      slot.dirty = true;
      return result;
    });
  };

  const std::string doc = kDocRoute;

  server.Get(std::string(kPrefix) + "/health",
             wrap(Auth::kNone, [](Context &) -> std::optional<json> {
               return json{{"status", "ok"}};
             }));

  // Auth --------------------------------------------------------------------

  server.Post(std::string(kPrefix) + "/auth/login",
              wrap(Auth::kNone, [this](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                const UserAccount user = options_.users->Authenticate(
                    StringField(body, "username"), StringField(body, "password"));
                const std::string token = options_.signer->Issue(user);
                const TokenClaims claims = options_.signer->Verify(token);
                return json{{"token", token},
                            {"username", user.username},
                            {"role", RoleName(user.role)},
                            {"expires_at", claims.expires_at}};
              }));

  server.Post(std::string(kPrefix) + "/auth/password",
              wrap(Auth::kRequired, [this](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                options_.users->ChangePassword(ctx.claims->subject,
                                               StringField(body, "old_password"),
                                               StringField(body, "new_password"));
                return json{{"changed", true}};
              }));

  // Documents ---------------------------------------------------------------

  server.Get(std::string(kPrefix) + "/documents",
             wrap(Auth::kRequired, [this](Context &ctx) -> std::optional<json> {
               std::optional<DocumentStatus> status;
               if (ctx.req.has_param("status")) {
                 status = ParseDocumentStatus(ctx.Param("status"));
                 if (!status) BadRequest("unknown status", "status");
               }
               const std::string q = ctx.Param("q", false);
               json out = json::array();
               for (const DocumentSummary &s : options_.store->List()) {
                 if (status && s.status != *status) continue;
                 if (!q.empty() && s.doc_id.find(q) == std::string::npos) {
                   continue;
                 }
                 out.push_back(SummaryToJson(s));
               }
               return json{{"documents", out}};
             }));

  server.Post(std::string(kPrefix) + "/documents",
              wrap(Auth::kRequired, [this](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                const std::string doc_id = StringField(body, "doc_id");
                if (!ValidDocId(doc_id)) {
                  throw Error(ErrorCode::kValidationError,
                              "doc_id must be 1-200 printable characters "
                              "without slashes",
                              "doc_id");
                }
                const std::string content = StringField(body, "content");
                const std::string format =
                    body.contains("format") ? StringField(body, "format")
                                            : std::string("text");
                std::vector<std::string> warnings;
                std::optional<Document> document;
                if (format == "text") {
                  document = NewDocument(doc_id, content);
                } else if (format == "html") {
                  ParseOptions parse_options;
                  parse_options.doc_id = doc_id;
                  ParseResult parsed = ParseRdfa(content, parse_options);
                  document = std::move(parsed.document);
                  warnings = std::move(parsed.warnings);
                } else {
                  BadRequest("format must be text or html", "format");
                }
                const uint64_t revision = options_.store->Create(*document);
                workspace_.Forget(doc_id);
                ctx.status = 201;
                return json{{"doc_id", doc_id},
                            {"revision", revision},
                            {"warnings", warnings}};
              }));

  server.Get(doc, wrap(Auth::kRequired,
                       [with_doc](Context &ctx) -> std::optional<json> {
                         return with_doc(ctx, [](Workspace::Slot &slot) {
                           return WorkingCopyJson(slot);
                         });
                       }));

  server.Get(doc + "/html",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               const std::string html = with_doc(ctx, [](Workspace::Slot &slot) {
                 return RenderRdfa(*slot.document);
               });
               ctx.res.set_content(html, "text/html; charset=utf-8");
               return std::nullopt;
             }));

  server.Get(doc + "/text",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               const std::string text = with_doc(ctx, [](Workspace::Slot &slot) {
                 return slot.document->TextUtf8();
               });
               ctx.res.set_content(text, "text/plain; charset=utf-8");
               return std::nullopt;
             }));

  server.Put(doc + "/status",
             wrap(Auth::kRequired, [mutate](Context &ctx) -> std::optional<json> {
               const json body = ctx.Body();
               const auto status = ParseDocumentStatus(StringField(body, "status"));
               if (!status) {
                 throw Error(ErrorCode::kValidationError,
                             "status must be ToBeStarted, InProgress or Finished",
                             "status");
               }
               return mutate(ctx, [&](Document &d) {
                 SetStatus(d, *status);
                 return json{{"status", DocumentStatusName(d.status())}};
               });
             }));

  server.Post(doc + "/save",
              wrap(Auth::kRequired, [this, with_doc](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                auto it = body.find("base_revision");
                if (it == body.end() || !it->is_number_unsigned()) {
                  BadRequest("base_revision must be a revision number",
                             "base_revision");
                }
                const uint64_t base = it->get<uint64_t>();
                return with_doc(ctx, [&](Workspace::Slot &slot) {
                  const uint64_t revision =
                      options_.store->Save(*slot.document, base);
                  slot.base_revision = revision;
                  slot.dirty = false;
                  return json{{"revision", revision}};
                });
              }));

  server.Post(doc + "/revert",
              wrap(Auth::kRequired, [this, with_doc](Context &ctx) -> std::optional<json> {
                return with_doc(ctx, [&](Workspace::Slot &slot) {
                  StoredDocument stored = options_.store->Load(ctx.DocId());
                  slot.document = std::move(stored.document);
                  slot.base_revision = stored.revision;
                  slot.dirty = false;
                  return WorkingCopyJson(slot);
                });
              }));

  // Annotation --------------------------------------------------------------

  server.Post(doc + "/mentions",
              wrap(Auth::kRequired, [mutate](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                const Span span = SpanFields(body);
                const std::string category = StringField(body, "category");
                ctx.status = 201;
                return mutate(ctx, [&](Document &d) {
                  const MarkResult r = MarkSelection(d, span, category);
                  return json{{"mention", MentionToJson(r.mention)},
                              {"entity", EntityToJson(r.entity)}};
                });
              }));

  server.Post(doc + "/extend-to-word",
              wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
                const Span span = SpanFields(ctx.Body());
                return with_doc(ctx, [&](Workspace::Slot &slot) {
                  const Span out = ExtendToWord(*slot.document, span);
                  return json{{"start", out.start},
                              {"end", out.end},
                              {"text", EncodeUtf8(slot.document->Slice(out))}};
                });
              }));

  server.Post(doc + "/highlight-all",
              wrap(Auth::kRequired, [mutate](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                const Span span = SpanFields(body);
                const std::string category = StringField(body, "category");
                return mutate(ctx, [&](Document &d) {
                  json mentions = json::array();
                  for (const Mention &m : HighlightAllInstances(d, span, category)) {
                    mentions.push_back(MentionToJson(m));
                  }
                  return json{{"mentions", mentions}};
                });
              }));

  server.Post(doc + "/mentions/([^/]+)/move",
              wrap(Auth::kRequired, [mutate](Context &ctx) -> std::optional<json> {
                const std::string mention_id = ctx.req.matches[2].str();
                const std::string target = StringField(ctx.Body(), "target");
                return mutate(ctx, [&](Document &d) {
                  return json{{"mention",
                               MentionToJson(MoveMention(d, mention_id, target))}};
                });
              }));

  server.Get(doc + "/entities",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               const std::string category = ctx.Param("category", false);
               return with_doc(ctx, [&](Workspace::Slot &slot) {
                 json out = json::array();
                 if (category.empty()) {
                   for (const Entity &e : slot.document->entities()) {
                     json j = EntityToJson(e);
                     j["occurrences"] = slot.document->Occurrences(e.id);
                     j["wikidata_linked"] = e.wikidata_id.has_value();
                     out.push_back(std::move(j));
                   }
                 } else {
                   for (const EntityListing &l :
                        ListEntities(*slot.document, category)) {
                     out.push_back(EntityListingToJson(l));
                   }
                 }
                 return json{{"entities", out}};
               });
             }));

  auto entity_route = [&](const char *suffix, auto op) {
    server.Post(doc + "/entities/" + suffix,
                wrap(Auth::kRequired, [mutate, op](Context &ctx) -> std::optional<json> {
                  const json body = ctx.Body();
                  return mutate(ctx, [&](Document &d) { return op(d, body); });
                }));
  };

  entity_route("merge", [](Document &d, const json &body) {
    const Entity merged = MergeEntities(d, StringField(body, "source"),
                                        StringField(body, "target"));
    return json{{"entity", EntityToJson(merged)}};
  });
  entity_route("relabel", [](Document &d, const json &body) {
    return json{{"entity", EntityToJson(RelabelEntity(
                               d, StringField(body, "entity_id"),
                               StringField(body, "label")))}};
  });
  entity_route("sort-key", [](Document &d, const json &body) {
    return json{{"entity", EntityToJson(SetSortKey(
                               d, StringField(body, "entity_id"),
                               StringField(body, "sort_key")))}};
  });
  entity_route("alias", [](Document &d, const json &body) {
    return json{{"entity", EntityToJson(AddAlias(d, StringField(body, "entity_id"),
                                                 StringField(body, "alias")))}};
  });
  entity_route("move", [](Document &d, const json &body) {
    const auto location = ParseLocation(StringField(body, "location"));
    if (!location) {
      throw Error(ErrorCode::kValidationError,
                  "location must be active, scrap or trash", "location");
    }
    return json{{"entity", EntityToJson(MoveTo(
                               d, StringField(body, "entity_id"), *location))}};
  });
  entity_route("empty-trash", [](Document &d, const json &) {
    return json{{"purged", EmptyTrash(d)}};
  });
  entity_route("unlink", [](Document &d, const json &body) {
    return json{
        {"entity", EntityToJson(UnlinkEntity(d, StringField(body, "entity_id")))}};
  });

  server.Post(doc + "/entities/link",
              wrap(Auth::kRequired, [this, mutate](Context &ctx) -> std::optional<json> {
                const json body = ctx.Body();
                const std::string entity_id = StringField(body, "entity_id");
                const std::string qid = StringField(body, "qid");
                // The remote lookup runs before the document lock is taken.
                std::optional<EntityDetails> details;
                if (IsValidQid(qid) && options_.wikidata) {
                  try {
                    details = options_.wikidata->FetchDetails(qid);
                  } catch (const Error &e) {
                    if (e.code() != ErrorCode::kReconciliationUnavailable &&
                        e.code() != ErrorCode::kNotFound) {
                      throw;
                    }
                  }
                }
                return mutate(ctx, [&](Document &d) {
                  LinkResult r = LinkEntity(d, entity_id, qid, nullptr);
                  if (details) {
                    d.mutable_entity(entity_id)->treccani_id = details->treccani_id;
                    r.entity = *d.FindEntity(entity_id);
                  }
                  json out = {{"entity", EntityToJson(r.entity)},
                              {"details_fetched", details.has_value()}};
                  if (details) out["details"] = DetailsToJson(*details);
                  return out;
                });
              }));

  // Concordance -------------------------------------------------------------

  server.Get(doc + "/concordance",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               ConcordanceConfig config;
               const std::string entity_id = ctx.Param("entity");
               if (ctx.req.has_param("style")) {
                 const auto style = ParseConcordanceStyle(ctx.Param("style"));
                 if (!style) BadRequest("style must be KWIC, KWOC or KWAC", "style");
                 config.style = *style;
               }
               if (ctx.req.has_param("window")) {
                 const int window = IntParam(ctx.Param("window"), "window");
                 if (window < 1) {
                   throw Error(ErrorCode::kValidationError,
                               "window must be at least 1", "window");
                 }
                 config.window_words = static_cast<size_t>(window);
               }
               if (ctx.req.has_param("sort")) {
                 const auto sort = ParseConcordanceSort(ctx.Param("sort"));
                 if (!sort) BadRequest("sort must be keyword_then_right or position", "sort");
                 config.sort = *sort;
               }
               return with_doc(ctx, [&](Workspace::Slot &slot) {
                 json entries = json::array();
                 for (const ConcordanceEntry &e :
                      BuildIndex(*slot.document, entity_id, config)) {
                   entries.push_back(ConcordanceEntryToJson(e));
                 }
                 return json{{"entity_id", entity_id},
                             {"style", ConcordanceStyleName(config.style)},
                             {"window", config.window_words},
                             {"sort", ConcordanceSortName(config.sort)},
                             {"entries", entries}};
               });
             }));

  // Export / import ---------------------------------------------------------

  server.Get(doc + "/export/html",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               const std::string html = with_doc(ctx, [](Workspace::Slot &slot) {
                 return RenderRdfa(*slot.document);
               });
               ctx.res.set_header("Content-Disposition",
                                  "attachment; filename=\"document.html\"");
               ctx.res.set_content(html, "text/html; charset=utf-8");
               return std::nullopt;
             }));

  server.Get(doc + "/export/tei",
             wrap(Auth::kRequired, [this, with_doc](Context &ctx) -> std::optional<json> {
               const MetadataRecord metadata =
                   options_.store->GetMetadata(ctx.DocId()).value_or(MetadataRecord{});
               const std::string tei = with_doc(ctx, [&](Workspace::Slot &slot) {
                 return ExportTei(*slot.document, metadata);
               });
               ctx.res.set_header("Content-Disposition",
                                  "attachment; filename=\"document.xml\"");
               ctx.res.set_content(tei, "application/tei+xml; charset=utf-8");
               return std::nullopt;
             }));

  server.Get(doc + "/export/entities",
             wrap(Auth::kRequired, [with_doc](Context &ctx) -> std::optional<json> {
               const std::string payload = with_doc(ctx, [](Workspace::Slot &slot) {
                 return ExportEntities(*slot.document);
               });
               ctx.res.set_content(payload, "application/json");
               return std::nullopt;
             }));

  server.Post(doc + "/import/entities",
              wrap(Auth::kRequired, [mutate](Context &ctx) -> std::optional<json> {
                const std::string payload = ctx.req.body;
                return mutate(ctx, [&](Document &d) {
                  const ImportSummary s = ImportEntities(d, payload);
                  return json{{"added", s.added}, {"updated", s.updated}};
                });
              }));

  // Metadata ----------------------------------------------------------------

  server.Get(doc + "/metadata",
             wrap(Auth::kRequired, [this](Context &ctx) -> std::optional<json> {
               const auto record = options_.store->GetMetadata(ctx.DocId());
               return json{{"metadata",
                            record ? MetadataToJson(*record) : json(nullptr)}};
             }));

  server.Put(doc + "/metadata",
             wrap(Auth::kRequired, [this](Context &ctx) -> std::optional<json> {
               const MetadataRecord record = MetadataFromJson(ctx.Body());
               return json{{"metadata", MetadataToJson(options_.store->PutMetadata(
                                            ctx.DocId(), record))}};
             }));

  server.Get(std::string(kPrefix) + "/vocabulary",
             wrap(Auth::kRequired, [](Context &) -> std::optional<json> {
               const Vocabulary v = DefaultVocabulary();
               return json{{"author_role", v.author_role},
                           {"document_type", v.document_type},
                           {"document_subject", v.document_subject},
                           {"publication_status", {"published", "unpublished"}}};
             }));

  // Reconciliation ----------------------------------------------------------

  auto require_client = [this]() -> WikidataClient & {
    if (!options_.wikidata) {
      throw Error(ErrorCode::kReconciliationUnavailable,
                  "no Wikidata client configured");
    }
    return *options_.wikidata;
  };

  server.Get(std::string(kPrefix) + "/wikidata/search",
             wrap(Auth::kRequired, [require_client](Context &ctx) -> std::optional<json> {
               const std::string label = ctx.Param("label", false);
               const int limit = ctx.req.has_param("limit")
                                     ? IntParam(ctx.Param("limit"), "limit")
                                     : 0;
               if (ctx.req.has_param("limit") && limit < 1) {
                 throw Error(ErrorCode::kValidationError,
                             "limit must be positive", "limit");
               }
               json out = json::array();
               for (const WikidataCandidate &c :
                    require_client().Search(label, limit)) {
                 out.push_back(CandidateToJson(c));
               }
               return json{{"candidates", out}};
             }));

  server.Get(std::string(kPrefix) + "/wikidata/entities/([^/]+)",
             wrap(Auth::kRequired, [require_client](Context &ctx) -> std::optional<json> {
               return DetailsToJson(
                   require_client().FetchDetails(ctx.req.matches[1].str()));
             }));

  if (!options_.static_dir.empty()) {
    server.set_mount_point("/", options_.static_dir.string());
  }
}

}  // namespace kwic
