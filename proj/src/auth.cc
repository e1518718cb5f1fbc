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

#include "kwic/auth.h"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include <charconv>
#include <fstream>

#include "json.hpp"
#include "kwic/error.h"
#include "kwic/store.h"

namespace kwic {

using json = nlohmann::json;

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kAnnotator: return "annotator";
    case Role::kAdmin: return "admin";
  }
  return "annotator";
}

std::optional<Role> ParseRole(std::string_view name) {
  if (name == "annotator") return Role::kAnnotator;
  if (name == "admin") return Role::kAdmin;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Encoding helpers

std::string Base64UrlEncode(std::string_view bytes) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
  std::string out;
  size_t i = 0;
  while (i + 2 < bytes.size()) {
    const uint32_t v = (uint8_t(bytes[i]) << 16) | (uint8_t(bytes[i + 1]) << 8) |
                       uint8_t(bytes[i + 2]);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
    i += 3;
  }
  if (i + 1 == bytes.size()) {
    const uint32_t v = uint8_t(bytes[i]) << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
  } else if (i + 2 == bytes.size()) {
    const uint32_t v = (uint8_t(bytes[i]) << 16) | (uint8_t(bytes[i + 1]) << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
  }
  return out;
}

std::optional<std::string> Base64UrlDecode(std::string_view text) {
  auto value = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '-') return 62;
    if (c == '_') return 63;
    return -1;
  };
  if (text.size() % 4 == 1) return std::nullopt;
  std::string out;
  uint32_t buffer = 0;
  int bits = 0;
  for (char c : text) {
    const int v = value(c);
    if (v < 0) return std::nullopt;
    buffer = (buffer << 6) | static_cast<uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((buffer >> bits) & 0xFF);
    }
  }
  // Non-canonical trailing bits would let two strings decode alike.
  if ((buffer & ((1u << bits) - 1)) != 0) return std::nullopt;
  return out;
}

namespace {

std::string RandomBytes(size_t n) {
  std::string out(n, '\0');
  if (RAND_bytes(reinterpret_cast<unsigned char *>(out.data()),
                 static_cast<int>(n)) != 1) {
    throw Error(ErrorCode::kStorageError, "random generator failed");
  }
  return out;
}

std::string Pbkdf2(std::string_view password, std::string_view salt,
                   int iterations) {
  std::string out(32, '\0');
  if (PKCS5_PBKDF2_HMAC(password.data(), static_cast<int>(password.size()),
                        reinterpret_cast<const unsigned char *>(salt.data()),
                        static_cast<int>(salt.size()), iterations, EVP_sha256(),
                        static_cast<int>(out.size()),
                        reinterpret_cast<unsigned char *>(out.data())) != 1) {
    throw Error(ErrorCode::kStorageError, "PBKDF2 failed");
  }
  return out;
}

std::string HmacSha256(std::string_view key, std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
       reinterpret_cast<const unsigned char *>(data.data()), data.size(),
       digest, &length);
  return std::string(reinterpret_cast<char *>(digest), length);
}

bool ConstantTimeEquals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

[[noreturn]] void BadCredentials() {
  throw Error(ErrorCode::kInvalidCredentials, "invalid username or password",
              "password");
}

[[noreturn]] void BadToken(const std::string &why) {
  throw Error(ErrorCode::kInvalidToken, "invalid token: " + why, "token");
}

}  // namespace

std::string HashPassword(std::string_view password, int iterations) {
  const std::string salt = RandomBytes(16);
  return "pbkdf2-sha256$" + std::to_string(iterations) + "$" +
         Base64UrlEncode(salt) + "$" +
         Base64UrlEncode(Pbkdf2(password, salt, iterations));
}

bool VerifyPassword(std::string_view password, std::string_view encoded) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= encoded.size(); ++i) {
    if (i == encoded.size() || encoded[i] == '$') {
      parts.push_back(encoded.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4 || parts[0] != "pbkdf2-sha256") return false;
  int iterations = 0;
  auto [ptr, ec] = std::from_chars(parts[1].data(),
                                   parts[1].data() + parts[1].size(),
                                   iterations);
  if (ec != std::errc() || iterations <= 0) return false;
  const auto salt = Base64UrlDecode(parts[2]);
  const auto hash = Base64UrlDecode(parts[3]);
  if (!salt || !hash) return false;
  return ConstantTimeEquals(Pbkdf2(password, *salt, iterations), *hash);
}

// ---------------------------------------------------------------------------
// UserStore

UserStore::UserStore(std::filesystem::path file, int iterations)
    : file_(std::move(file)), iterations_(iterations) {
  if (!std::filesystem::exists(*file_)) return;
  try {
    const json root = json::parse(ReadFile(*file_));
    for (const json &u : root.at("users")) {
      UserAccount account;
      account.username = u.at("username").get<std::string>();
      account.password_hash = u.at("password_hash").get<std::string>();
      account.role =
          ParseRole(u.at("role").get<std::string>()).value_or(Role::kAnnotator);
      users_.emplace(account.username, std::move(account));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kStorageError,
                "corrupt user file " + file_->string() + ": " + e.what());
  }
}

void UserStore::Persist() {
  if (!file_) return;
  json users = json::array();
  for (const auto &[name, account] : users_) {
    users.push_back({{"username", account.username},
                     {"password_hash", account.password_hash},
                     {"role", RoleName(account.role)}});
  }
  if (file_->has_parent_path()) {
    std::filesystem::create_directories(file_->parent_path());
  }
  WriteFileAtomically(*file_, json{{"users", users}}.dump(2) + "\n");
}

void UserStore::AddUser(std::string_view username, std::string_view password,
                        Role role) {
  if (username.empty()) {
    throw Error(ErrorCode::kValidationError, "username is empty", "username");
  }
  if (password.empty()) {
    throw Error(ErrorCode::kValidationError, "password is empty", "password");
  }
  std::lock_guard lock(mu_);
  if (users_.contains(username)) {
    throw Error(ErrorCode::kValidationError,
                "user already exists: " + std::string(username), "username");
  }
  users_.emplace(std::string(username),
                 UserAccount{std::string(username),
                             HashPassword(password, iterations_), role});
  Persist();
}

UserAccount UserStore::Authenticate(std::string_view username,
                                    std::string_view password) {
  std::optional<UserAccount> account;
  {
    std::lock_guard lock(mu_);
    if (auto it = users_.find(username); it != users_.end()) {
      account = it->second;
    }
  }
  if (!account) {
    // Spend the same PBKDF2 work so timing does not reveal the user set.
    static const std::string dummy = HashPassword("x", kDefaultPbkdf2Iterations);
    VerifyPassword(password, iterations_ == kDefaultPbkdf2Iterations
                                 ? dummy
                                 : HashPassword("x", iterations_));
    BadCredentials();
  }
  if (!VerifyPassword(password, account->password_hash)) BadCredentials();
  return *account;
}

void UserStore::ChangePassword(std::string_view username,
                               std::string_view old_password,
                               std::string_view new_password) {
  Authenticate(username, old_password);
  if (new_password.empty()) {
    throw Error(ErrorCode::kValidationError, "new password is empty",
                "new_password");
  }
  std::lock_guard lock(mu_);
  auto it = users_.find(username);
  if (it == users_.end()) BadCredentials();
  it->second.password_hash = HashPassword(new_password, iterations_);
  Persist();
}

bool UserStore::HasUser(std::string_view username) {
  std::lock_guard lock(mu_);
  return users_.contains(username);
}

size_t UserStore::size() {
  std::lock_guard lock(mu_);
  return users_.size();
}

// ---------------------------------------------------------------------------
// TokenSigner

TokenSigner::TokenSigner(std::string key, std::chrono::seconds lifetime,
                         Clock clock)
    : key_(std::move(key)), lifetime_(lifetime), clock_(std::move(clock)) {
  if (key_.empty()) {
    throw Error(ErrorCode::kValidationError, "signing key is empty",
                "signing_key");
  }
}

int64_t TokenSigner::Now() const {
  if (clock_) return clock_();
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string TokenSigner::Issue(const UserAccount &user) const {
  static const std::string header =
      Base64UrlEncode(R"({"alg":"HS256","typ":"JWT"})");
  const int64_t now = Now();
  const json claims = {{"sub", user.username},
                       {"role", RoleName(user.role)},
                       {"iat", now},
                       {"exp", now + lifetime_.count()}};
  const std::string signing_input = header + "." + Base64UrlEncode(claims.dump());
  return signing_input + "." + Base64UrlEncode(HmacSha256(key_, signing_input));
}

TokenClaims TokenSigner::Verify(std::string_view token) const {
  const size_t first = token.find('.');
  const size_t second =
      first == std::string_view::npos ? first : token.find('.', first + 1);
  if (second == std::string_view::npos ||
      token.find('.', second + 1) != std::string_view::npos) {
    BadToken("expected three segments");
  }
  const auto header = Base64UrlDecode(token.substr(0, first));
  const auto payload = Base64UrlDecode(token.substr(first + 1, second - first - 1));
  const auto signature = Base64UrlDecode(token.substr(second + 1));
  if (!header || !payload || !signature) BadToken("bad encoding");
  if (!ConstantTimeEquals(HmacSha256(key_, token.substr(0, second)),
                          *signature)) {
    BadToken("bad signature");
  }
  TokenClaims claims;
  try {
    const json h = json::parse(*header);
    if (h.at("alg").get<std::string>() != "HS256") BadToken("unsupported alg");
    const json p = json::parse(*payload);
    claims.subject = p.at("sub").get<std::string>();
    const auto role = ParseRole(p.at("role").get<std::string>());
    if (!role) BadToken("bad role");
    claims.role = *role;
    claims.issued_at = p.at("iat").get<int64_t>();
    claims.expires_at = p.at("exp").get<int64_t>();
  } catch (const json::exception &) {
    BadToken("bad claims");
  }
  if (Now() >= claims.expires_at) {
    throw Error(ErrorCode::kTokenExpired, "token expired", "token");
  }
  return claims;
}

std::string GenerateSigningKey() { return Base64UrlEncode(RandomBytes(32)); }

}  // namespace kwic
