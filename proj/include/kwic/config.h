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

// Server configuration. Later sources win: built-in defaults, the JSON
// config file, environment variables, command-line flags (applied by the
// caller).
//
//   KWIC_STORAGE_ROOT     storage_root
//   KWIC_SIGNING_KEY      signing_key
//   KWIC_TOKEN_LIFETIME   token_lifetime_seconds
//   KWIC_WIKIDATA_URL     wikidata_url

#ifndef KWIC_CONFIG_H_
#define KWIC_CONFIG_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace kwic {

struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::filesystem::path storage_root = "kwic-data";
  std::string signing_key;  // generated per process when empty
  std::chrono::seconds token_lifetime{12 * 3600};
  std::string wikidata_url = "https://www.wikidata.org";
  std::string wikidata_language = "it";
  std::string treccani_property = "P3365";
  int wikidata_timeout_seconds = 10;
  std::filesystem::path static_dir;  // optional UI bundle
};

using EnvLookup = std::function<std::optional<std::string>(const char *)>;

// getenv-backed lookup.
EnvLookup ProcessEnvironment();

// Throws ValidationError for unknown keys or bad values.
ServiceConfig LoadConfig(const std::optional<std::filesystem::path> &file,
                         const EnvLookup &env = ProcessEnvironment());

}  // namespace kwic

#endif  // KWIC_CONFIG_H_
