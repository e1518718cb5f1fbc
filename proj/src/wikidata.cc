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

#include "kwic/wikidata.h"

#include "json.hpp"
#include "kwic/error.h"
#include "kwic/store.h"
#include "kwic/unicode.h"

namespace kwic {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// FixtureTransport

FixtureTransport::FixtureTransport(const std::filesystem::path &directory) {
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(directory)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto &file : files) {
    json fixture;
    try {
      fixture = json::parse(ReadFile(file));
      HttpRequest request;
      request.path = fixture.at("request").at("path").get<std::string>();
      if (fixture["request"].contains("query")) {
        for (const auto &[k, v] : fixture["request"]["query"].items()) {
          request.query[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      HttpResponse response;
      response.status = fixture.value("status", 200);
      const json &body = fixture.at("body");
      response.body = body.is_string() ? body.get<std::string>() : body.dump();
      Add(std::move(request), std::move(response));
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kStorageError,
                  "bad fixture " + file.string() + ": " + e.what());
    }
  }
}

std::string FixtureTransport::Key(const HttpRequest &request) {
  std::string key = request.path;
  for (const auto &[k, v] : request.query) key += "\n" + k + "=" + v;
  return key;
}

void FixtureTransport::Add(HttpRequest request, HttpResponse response) {
  std::lock_guard lock(mu_);
  responses_[Key(request)] = std::move(response);
}

HttpResponse FixtureTransport::Get(const HttpRequest &request) {
  ++calls_;
  std::lock_guard lock(mu_);
  auto it = responses_.find(Key(request));
  if (it == responses_.end()) {
    unmatched_.push_back(request);
    return {404, R"({"error":"no fixture"})"};
  }
  return it->second;
}

std::vector<HttpRequest> FixtureTransport::unmatched() const {
  std::lock_guard lock(mu_);
  return unmatched_;
}

// ---------------------------------------------------------------------------
// WikidataClient

namespace {

[[noreturn]] void Unavailable(const std::string &why) {
  throw Error(ErrorCode::kReconciliationUnavailable,
              "Wikidata unavailable: " + why);
}

json ParseBody(const HttpResponse &response) {
  try {
    return json::parse(response.body);
  } catch (const json::parse_error &) {
    Unavailable("malformed response body");
  }
}

// Label or description in `language`, else `fallback`, else any.
std::string Localized(const json &values, const std::string &language,
                      const std::string &fallback) {
  if (!values.is_object() || values.empty()) return {};
  for (const std::string &lang : {language, fallback}) {
    auto it = values.find(lang);
    if (it != values.end() && it->contains("value")) {
      return (*it)["value"].get<std::string>();
    }
  }
  const json &first = values.begin().value();
  return first.contains("value") ? first["value"].get<std::string>()
                                 : std::string();
}

}  // namespace

WikidataClient::WikidataClient(std::shared_ptr<HttpTransport> transport,
                               WikidataOptions options)
    : transport_(std::move(transport)), options_(std::move(options)) {}

std::vector<WikidataCandidate> WikidataClient::Search(std::string_view label,
                                                      int limit) {
  const std::string query = TrimUtf8(label);
  if (query.empty()) {
    throw Error(ErrorCode::kInvalidLabel, "search label is empty", "label");
  }
  if (limit == 0) limit = options_.default_limit;
  if (limit < 1) {
    throw Error(ErrorCode::kValidationError, "limit must be positive",
                "limit");
  }
  HttpRequest request;
  request.path = "/w/api.php";
  request.query = {{"action", "wbsearchentities"},
                   {"search", query},
                   {"language", options_.language},
                   {"limit", std::to_string(limit)},
                   {"format", "json"},
                   {"type", "item"}};
  const HttpResponse response = transport_->Get(request);
  if (response.status != 200) {
    Unavailable("search returned HTTP " + std::to_string(response.status));
  }
  const json body = ParseBody(response);
  if (body.contains("error")) Unavailable("search returned an error");

  std::vector<WikidataCandidate> out;
  const json hits = body.value("search", json::array());
  for (const json &hit : hits) {
    if (static_cast<int>(out.size()) >= limit) break;
    WikidataCandidate c;
    c.qid = hit.value("id", "");
    if (!IsValidQid(c.qid)) continue;
    c.label = hit.value("label", "");
    c.description = hit.value("description", "");
    c.match_score = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(c));
  }
  return out;
}

EntityDetails WikidataClient::FetchDetails(std::string_view qid) {
  if (!IsValidQid(qid)) {
    throw Error(ErrorCode::kInvalidQid,
                "malformed Wikidata id: " + std::string(qid), "qid");
  }
  HttpRequest request;
  request.path = "/wiki/Special:EntityData/" + std::string(qid) + ".json";
  const HttpResponse response = transport_->Get(request);
  if (response.status == 404) {
    throw Error(ErrorCode::kNotFound,
                "no Wikidata record " + std::string(qid), "qid");
  }
  if (response.status != 200) {
    Unavailable("entity data returned HTTP " + std::to_string(response.status));
  }
  const json body = ParseBody(response);
  const json entities = body.value("entities", json::object());
  // Redirected ids come back under their new key.
  auto it = entities.find(std::string(qid));
  if (it == entities.end()) {
    if (entities.empty()) {
      throw Error(ErrorCode::kNotFound,
                  "no Wikidata record " + std::string(qid), "qid");
    }
    it = entities.begin();
  }
  const json &record = *it;
  if (record.contains("missing")) {
    throw Error(ErrorCode::kNotFound,
                "no Wikidata record " + std::string(qid), "qid");
  }
  EntityDetails details;
  details.qid = record.value("id", std::string(qid));
  details.label = Localized(record.value("labels", json::object()),
                            options_.language, options_.fallback_language);
  details.description =
      Localized(record.value("descriptions", json::object()),
                options_.language, options_.fallback_language);
  details.treccani_id = std::string(kTreccaniNotDetected);
  const json claims = record.value("claims", json::object());
  if (auto c = claims.find(options_.treccani_property);
      c != claims.end() && c->is_array()) {
    for (const json &claim : *c) {
      const json value = claim.value("mainsnak", json::object())
                             .value("datavalue", json::object())
                             .value("value", json());
      if (value.is_string() && !value.get<std::string>().empty()) {
        details.treccani_id = value.get<std::string>();
        break;
      }
    }
  }
  return details;
}

// ---------------------------------------------------------------------------
// Linking

LinkResult LinkEntity(Document &doc, std::string_view entity_id,
                      std::string_view qid, WikidataClient *client) {
  if (doc.FindEntity(entity_id) == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + std::string(entity_id), "entity_id");
  }
  if (!IsValidQid(qid)) {
    throw Error(ErrorCode::kInvalidQid,
                "malformed Wikidata id: " + std::string(qid), "qid");
  }
  LinkResult result;
  if (client != nullptr) {
    try {
      result.details = client->FetchDetails(qid);
      result.details_fetched = true;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kReconciliationUnavailable &&
          e.code() != ErrorCode::kNotFound) {
        throw;
      }
    }
  }
  Entity &entity = *doc.mutable_entity(entity_id);
  entity.wikidata_id = std::string(qid);
  entity.treccani_id =
      result.details ? std::optional<std::string>(result.details->treccani_id)
                     : std::nullopt;
  result.entity = entity;
  return result;
}

Entity UnlinkEntity(Document &doc, std::string_view entity_id) {
  Entity *entity = doc.mutable_entity(entity_id);
  if (entity == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity: " + std::string(entity_id), "entity_id");
  }
  entity->wikidata_id.reset();
  entity->treccani_id.reset();
  return *entity;
}

}  // namespace kwic
