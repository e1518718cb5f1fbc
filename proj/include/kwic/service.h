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

// JSON API under /api/v1. docs/api.md is the reference for every route.
//
// Each document has one server-side working copy. Annotation routes mutate
// the working copy under a per-document lock; /save persists it when the
// caller's base_revision is still the latest one and /revert reloads it.

#ifndef KWIC_SERVICE_H_
#define KWIC_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "kwic/auth.h"
#include "kwic/error.h"
#include "kwic/model.h"
#include "kwic/store.h"
#include "kwic/wikidata.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace kwic {

// The one HTTP status for each error code.
int HttpStatusFor(ErrorCode code);

// Holds working copies and their base revisions.
class Workspace {
 public:
  explicit Workspace(std::shared_ptr<DocumentStore> store);

  struct Slot {
    std::mutex mu;
    std::optional<Document> document;
    uint64_t base_revision = 0;
    bool dirty = false;
  };

  // Loads the working copy on first use. Throws UnknownDocument.
  std::shared_ptr<Slot> Acquire(const std::string &doc_id);
  void Forget(const std::string &doc_id);

  DocumentStore &store() { return *store_; }

 private:
  std::shared_ptr<DocumentStore> store_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>, std::less<>> slots_;
};

struct ServiceOptions {
  std::shared_ptr<DocumentStore> store;
  std::shared_ptr<UserStore> users;
  std::shared_ptr<TokenSigner> signer;
  // Optional; reconciliation routes answer 502 without one.
  std::shared_ptr<WikidataClient> wikidata;
  std::filesystem::path static_dir;
};

class Service {
 public:
  explicit Service(ServiceOptions options);

  // Installs every route (and the static mount, if configured).
  void Register(httplib::Server &server);

  Workspace &workspace() { return workspace_; }

 private:
  ServiceOptions options_;
  Workspace workspace_;
};

}  // namespace kwic

#endif  // KWIC_SERVICE_H_
