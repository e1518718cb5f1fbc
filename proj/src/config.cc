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

#include "kwic/config.h"

#include <charconv>
#include <cstdlib>

#include "json.hpp"
#include "kwic/error.h"
#include "kwic/store.h"

namespace kwic {

using json = nlohmann::json;

EnvLookup ProcessEnvironment() {
  return [](const char *name) -> std::optional<std::string> {
    const char *value = std::getenv(name);
    if (value == nullptr) return std::nullopt;
    return std::string(value);
  };
}

namespace {

[[noreturn]] void Bad(const std::string &field, const std::string &message) {
  throw Error(ErrorCode::kValidationError, message, field);
}

int64_t PositiveInteger(const std::string &field, const std::string &text) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    Bad(field, field + " must be a positive integer, got \"" + text + "\"");
  }
  return value;
}

void ApplyFile(ServiceConfig &config, const std::filesystem::path &file) {
  json root;
  try {
    root = json::parse(ReadFile(file));
  } catch (const json::parse_error &e) {
    Bad("config", "config file " + file.string() + ": " + e.what());
  }
  if (!root.is_object()) Bad("config", "config file must hold an object");
  try {
    for (const auto &[key, value] : root.items()) {
      if (key == "bind_address") {
        config.bind_address = value.get<std::string>();
      } else if (key == "port") {
        config.port = value.get<int>();
      } else if (key == "storage_root") {
        config.storage_root = value.get<std::string>();
      } else if (key == "signing_key") {
        config.signing_key = value.get<std::string>();
      } else if (key == "token_lifetime_seconds") {
        config.token_lifetime = std::chrono::seconds(value.get<int64_t>());
      } else if (key == "wikidata_url") {
        config.wikidata_url = value.get<std::string>();
      } else if (key == "wikidata_language") {
        config.wikidata_language = value.get<std::string>();
      } else if (key == "treccani_property") {
        config.treccani_property = value.get<std::string>();
      } else if (key == "wikidata_timeout_seconds") {
        config.wikidata_timeout_seconds = value.get<int>();
      } else if (key == "static_dir") {
        config.static_dir = value.get<std::string>();
      } else {
        Bad(key, "unknown config key: " + key);
      }
    }
  } catch (const json::type_error &e) {
    Bad("config", std::string("config file: ") + e.what());
  }
}

}  // namespace

ServiceConfig LoadConfig(const std::optional<std::filesystem::path> &file,
                         const EnvLookup &env) {
  ServiceConfig config;
  if (file) ApplyFile(config, *file);
  if (auto v = env("KWIC_STORAGE_ROOT")) config.storage_root = *v;
  if (auto v = env("KWIC_SIGNING_KEY")) config.signing_key = *v;
  if (auto v = env("KWIC_TOKEN_LIFETIME")) {
    config.token_lifetime =
        std::chrono::seconds(PositiveInteger("KWIC_TOKEN_LIFETIME", *v));
  }
  if (auto v = env("KWIC_WIKIDATA_URL")) config.wikidata_url = *v;
  if (config.token_lifetime.count() <= 0) {
    Bad("token_lifetime_seconds", "token lifetime must be positive");
  }
  if (config.port < 0 || config.port > 65535) Bad("port", "port out of range");
  return config;
}

}  // namespace kwic
