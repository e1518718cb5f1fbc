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

// Wikidata reconciliation.
//
// Two endpoints are used:
//
//   GET /w/api.php?action=wbsearchentities&search=..&language=..&limit=..
//       &format=json&type=item
//   GET /wiki/Special:EntityData/<qid>.json
//
// All traffic goes through an HttpTransport so tests can replay recorded
// responses. The Treccani identifier is read from a configurable claim
// property (P3365, "Treccani's Enciclopedia Italiana ID", by default).

#ifndef KWIC_WIKIDATA_H_
#define KWIC_WIKIDATA_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "kwic/model.h"

namespace kwic {

struct HttpRequest {
  std::string path;
  // Sorted, so fixture matching does not depend on parameter order.
  std::map<std::string, std::string> query;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Throws ReconciliationUnavailable when no response was obtained.
  virtual HttpResponse Get(const HttpRequest &request) = 0;
};

// Real network access to `base_url` ("https://www.wikidata.org").
std::unique_ptr<HttpTransport> MakeLiveTransport(std::string base_url,
                                                 int timeout_seconds = 10);

// Requests issued by every live transport in this process.
uint64_t LiveRequestCount();

// Replays files of the form
//   {"request": {"path": "...", "query": {...}}, "status": 200, "body": ...}
// where body is a JSON value (sent re-serialized) or a string. Unmatched
// requests answer 404 and are remembered.
class FixtureTransport : public HttpTransport {
 public:
  FixtureTransport() = default;
  // Loads every *.json file in the directory.
  explicit FixtureTransport(const std::filesystem::path &directory);

  void Add(HttpRequest request, HttpResponse response);
  HttpResponse Get(const HttpRequest &request) override;

  size_t calls() const { return calls_; }
  std::vector<HttpRequest> unmatched() const;

 private:
  static std::string Key(const HttpRequest &request);

  mutable std::mutex mu_;
  std::map<std::string, HttpResponse> responses_;
  std::vector<HttpRequest> unmatched_;
  std::atomic<size_t> calls_ = 0;
};

struct WikidataCandidate {
  std::string qid;
  std::string label;
  std::string description;
  int match_score = 0;  // 1-based rank from the search service

  bool operator==(const WikidataCandidate &) const = default;
};

struct EntityDetails {
  std::string qid;
  std::string label;
  std::string description;
  std::string treccani_id;  // kTreccaniNotDetected when the claim is absent

  bool operator==(const EntityDetails &) const = default;
};

struct WikidataOptions {
  std::string language = "it";
  std::string fallback_language = "en";
  std::string treccani_property = "P3365";
  int default_limit = 10;
};

class WikidataClient {
 public:
  WikidataClient(std::shared_ptr<HttpTransport> transport,
                 WikidataOptions options = {});

  // Throws InvalidLabel for a blank label, ValidationError for limit < 1,
  // ReconciliationUnavailable on transport or remote failure.
  std::vector<WikidataCandidate> Search(std::string_view label, int limit = 0);

  // Throws InvalidQid, NotFound, ReconciliationUnavailable.
  EntityDetails FetchDetails(std::string_view qid);

  const WikidataOptions &options() const { return options_; }

 private:
  std::shared_ptr<HttpTransport> transport_;
  WikidataOptions options_;
};

struct LinkResult {
  Entity entity;
  // False when the details lookup failed; the link itself still stands.
  bool details_fetched = false;
  std::optional<EntityDetails> details;
};

// Sets wikidata_id and the Treccani id (from FetchDetails when a client is
// given). Throws UnknownEntity, InvalidQid.
LinkResult LinkEntity(Document &doc, std::string_view entity_id,
                      std::string_view qid, WikidataClient *client);

// Clears both ids. Throws UnknownEntity.
Entity UnlinkEntity(Document &doc, std::string_view entity_id);

}  // namespace kwic

#endif  // KWIC_WIKIDATA_H_
