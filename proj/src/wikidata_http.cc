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

// The only place that opens outbound connections.

#include <atomic>

#include "httplib.h"
#include "kwic/error.h"
#include "kwic/wikidata.h"

namespace kwic {
namespace {

std::atomic<uint64_t> live_requests{0};

class LiveTransport : public HttpTransport {
 public:
  LiveTransport(std::string base_url, int timeout_seconds)
      : base_url_(std::move(base_url)), timeout_seconds_(timeout_seconds) {}

  HttpResponse Get(const HttpRequest &request) override {
    ++live_requests;
    httplib::Client client(base_url_);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    client.set_follow_location(true);
    httplib::Params params(request.query.begin(), request.query.end());
    httplib::Headers headers = {
        {"User-Agent", "kwic-annotator/1.0 (reconciliation client)"},
        {"Accept", "application/json"}};
    auto result = client.Get(request.path, params, headers);
    if (!result) {
      throw Error(ErrorCode::kReconciliationUnavailable,
                  "Wikidata unavailable: " +
                      httplib::to_string(result.error()));
    }
    return {result->status, result->body};
  }

 private:
  std::string base_url_;
  int timeout_seconds_;
};

}  // namespace

std::unique_ptr<HttpTransport> MakeLiveTransport(std::string base_url,
                                                 int timeout_seconds) {
  return std::make_unique<LiveTransport>(std::move(base_url), timeout_seconds);
}

uint64_t LiveRequestCount() { return live_requests.load(); }

}  // namespace kwic
