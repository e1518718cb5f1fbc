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

// User accounts and session tokens.
//
// Passwords are stored as "pbkdf2-sha256$<iterations>$<salt b64>$<hash b64>".
// Session tokens are compact JWS (HS256) with claims sub, role, iat, exp.

#ifndef KWIC_AUTH_H_
#define KWIC_AUTH_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace kwic {

enum class Role { kAnnotator, kAdmin };

std::string_view RoleName(Role role);
std::optional<Role> ParseRole(std::string_view name);

struct UserAccount {
  std::string username;
  std::string password_hash;
  Role role = Role::kAnnotator;
};

inline constexpr int kDefaultPbkdf2Iterations = 100000;

std::string HashPassword(std::string_view password,
                         int iterations = kDefaultPbkdf2Iterations);
bool VerifyPassword(std::string_view password, std::string_view encoded);

// Accounts kept in memory, optionally mirrored to a JSON file.
class UserStore {
 public:
  UserStore() = default;
  // In memory only, hashing new passwords with `iterations` rounds.
  explicit UserStore(int iterations) : iterations_(iterations) {}
  // Loads the file if it exists; saves to it after every change.
  explicit UserStore(std::filesystem::path file,
                     int iterations = kDefaultPbkdf2Iterations);

  // Throws ValidationError for an empty name or password, or an existing
  // user.
  void AddUser(std::string_view username, std::string_view password,
               Role role = Role::kAnnotator);

  // Throws InvalidCredentials; the same error and the same work for an
  // unknown user and a wrong password.
  UserAccount Authenticate(std::string_view username,
                           std::string_view password);

  void ChangePassword(std::string_view username, std::string_view old_password,
                      std::string_view new_password);

  bool HasUser(std::string_view username);
  size_t size();

 private:
  void Persist();

  std::optional<std::filesystem::path> file_;
  int iterations_ = kDefaultPbkdf2Iterations;
  std::mutex mu_;
  std::map<std::string, UserAccount, std::less<>> users_;
};

struct TokenClaims {
  std::string subject;
  Role role = Role::kAnnotator;
  int64_t issued_at = 0;   // unix seconds
  int64_t expires_at = 0;  // unix seconds
};

class TokenSigner {
 public:
  using Clock = std::function<int64_t()>;  // unix seconds

  TokenSigner(std::string key, std::chrono::seconds lifetime,
              Clock clock = nullptr);

  std::string Issue(const UserAccount &user) const;

  // Throws InvalidToken (format, signature, claims) or TokenExpired.
  TokenClaims Verify(std::string_view token) const;

  std::chrono::seconds lifetime() const { return lifetime_; }

 private:
  int64_t Now() const;

  std::string key_;
  std::chrono::seconds lifetime_;
  Clock clock_;
};

inline constexpr std::chrono::seconds kDefaultTokenLifetime{12 * 3600};

// 32 random bytes, base64url.
std::string GenerateSigningKey();

std::string Base64UrlEncode(std::string_view bytes);
std::optional<std::string> Base64UrlDecode(std::string_view text);

}  // namespace kwic

#endif  // KWIC_AUTH_H_
