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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "kwic/error.h"
#include "support/generators.h"

namespace kwic {
namespace {

namespace fs = std::filesystem;

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kBadRequest;
}

TEST(Base64Url, KnownVectors) {
  const std::pair<const char *, const char *> vectors[] = {
      {"", ""},          {"f", "Zg"},         {"fo", "Zm8"},
      {"foo", "Zm9v"},   {"foob", "Zm9vYg"},  {"fooba", "Zm9vYmE"},
      {"foobar", "Zm9vYmFy"}, {"\xfb\xff", "-_8"},
  };
  for (const auto &[plain, encoded] : vectors) {
    EXPECT_EQ(Base64UrlEncode(plain), encoded);
    EXPECT_EQ(Base64UrlDecode(encoded), plain);
  }
  EXPECT_FALSE(Base64UrlDecode("Zm9v="));
  EXPECT_FALSE(Base64UrlDecode("Z"));
  EXPECT_FALSE(Base64UrlDecode("Zh"));  // non-canonical trailing bits
  EXPECT_FALSE(Base64UrlDecode("Zm+v"));
}

TEST(Base64Url, RandomRoundTrip) {
  testing::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    std::string bytes(testing::Uniform(rng, 0, 40), '\0');
    for (char &c : bytes) c = static_cast<char>(testing::Uniform(rng, 0, 255));
    ASSERT_EQ(Base64UrlDecode(Base64UrlEncode(bytes)), bytes);
  }
}

TEST(Passwords, KnownPbkdf2Vectors) {
  // PBKDF2-HMAC-SHA256("password", "salt") at 1 and 4096 rounds.
  EXPECT_TRUE(VerifyPassword(
      "password",
      "pbkdf2-sha256$1$c2FsdA$Eg-2z_z4syxD5yJSVsT4N6hlSMkszDVICAWYfLcL4Xs"));
  EXPECT_TRUE(VerifyPassword(
      "password",
      "pbkdf2-sha256$4096$c2FsdA$xeR41ZKIyEGqUw22hFxMjZYok6ABzk4RpJY4c6qYE0o"));
  EXPECT_FALSE(VerifyPassword(
      "Password",
      "pbkdf2-sha256$1$c2FsdA$Eg-2z_z4syxD5yJSVsT4N6hlSMkszDVICAWYfLcL4Xs"));
}

TEST(Passwords, HashAndVerify) {
  const std::string a = HashPassword("segreto", 1000);
  const std::string b = HashPassword("segreto", 1000);
  EXPECT_TRUE(a.starts_with("pbkdf2-sha256$1000$"));
  EXPECT_NE(a, b);  // fresh salt
  EXPECT_TRUE(VerifyPassword("segreto", a));
  EXPECT_FALSE(VerifyPassword("segreta", a));
  for (const char *bad : {"", "plain", "pbkdf2-sha256$0$c2FsdA$AA",
                          "md5$1$c2FsdA$AA", "pbkdf2-sha256$x$c2FsdA$AA",
                          "pbkdf2-sha256$1$c2F*dA$AA"}) {
    EXPECT_FALSE(VerifyPassword("password", bad)) << bad;
  }
}

TEST(Users, AuthenticateAndChangePassword) {
  UserStore users(1000);
  users.AddUser("ada", "lovelace", Role::kAdmin);
  EXPECT_EQ(users.Authenticate("ada", "lovelace").role, Role::kAdmin);
  EXPECT_EQ(CodeOf([&] { users.Authenticate("ada", "babbage"); }),
            ErrorCode::kInvalidCredentials);
  EXPECT_EQ(CodeOf([&] { users.Authenticate("bob", "lovelace"); }),
            ErrorCode::kInvalidCredentials);
  EXPECT_EQ(CodeOf([&] { users.AddUser("ada", "x"); }), ErrorCode::kValidationError);
  EXPECT_EQ(CodeOf([&] { users.AddUser("", "x"); }), ErrorCode::kValidationError);
  EXPECT_EQ(CodeOf([&] { users.AddUser("bob", ""); }), ErrorCode::kValidationError);
  EXPECT_EQ(CodeOf([&] { users.ChangePassword("ada", "wrong", "new"); }),
            ErrorCode::kInvalidCredentials);
  EXPECT_EQ(CodeOf([&] { users.ChangePassword("ada", "lovelace", ""); }),
            ErrorCode::kValidationError);
  users.ChangePassword("ada", "lovelace", "analytical");
  EXPECT_NO_THROW(users.Authenticate("ada", "analytical"));
  EXPECT_EQ(CodeOf([&] { users.Authenticate("ada", "lovelace"); }),
            ErrorCode::kInvalidCredentials);
}

TEST(Users, PersistToFile) {
  std::random_device rd;
  const fs::path dir =
      fs::temp_directory_path() / ("kwic-users-" + std::to_string(rd()));
  const fs::path file = dir / "users.json";
  {
    UserStore users(file, 1000);
    users.AddUser("ada", "lovelace");
    users.AddUser("root", "toor", Role::kAdmin);
  }
  {
    UserStore users(file, 1000);
    EXPECT_EQ(users.size(), 2u);
    EXPECT_EQ(users.Authenticate("root", "toor").role, Role::kAdmin);
    users.ChangePassword("ada", "lovelace", "nuova");
  }
  UserStore users(file, 1000);
  EXPECT_NO_THROW(users.Authenticate("ada", "nuova"));
  std::ofstream(file) << "{broken";
  EXPECT_EQ(CodeOf([&] { UserStore corrupt(file, 1000); }),
            ErrorCode::kStorageError);
  fs::remove_all(dir);
}

class TokenTest : public ::testing::Test {
 protected:
  int64_t now_ = 1000;
  TokenSigner signer_{"k-test", std::chrono::seconds(60), [this] { return now_; }};
  UserAccount ada_{"ada", "", Role::kAnnotator};
};

TEST_F(TokenTest, MatchesReferenceEncoding) {
  // HS256 over the sorted claims, computed independently.
  EXPECT_EQ(signer_.Issue(ada_),
            "eyJhbGciOiJIUzI1NiIsInR5cCI6IkpXVCJ9."
            "eyJleHAiOjEwNjAsImlhdCI6MTAwMCwicm9sZSI6ImFubm90YXRvciIsInN1YiI6ImFkYSJ9."
            "Kg-rbqspOsZUlmk4OSyt-Iwskon8_vpcLvl-AZNcrNA");
}

TEST_F(TokenTest, VerifyAndExpire) {
  const std::string token = signer_.Issue(ada_);
  TokenClaims claims = signer_.Verify(token);
  EXPECT_EQ(claims.subject, "ada");
  EXPECT_EQ(claims.role, Role::kAnnotator);
  EXPECT_EQ(claims.issued_at, 1000);
  EXPECT_EQ(claims.expires_at, 1060);
  now_ = 1059;
  EXPECT_NO_THROW(signer_.Verify(token));
  now_ = 1060;
  EXPECT_EQ(CodeOf([&] { signer_.Verify(token); }), ErrorCode::kTokenExpired);
}

TEST_F(TokenTest, TamperingIsRejected) {
  const std::string token = signer_.Issue(ada_);
  const TokenSigner other("other-key", std::chrono::seconds(60),
                          [this] { return now_; });
  EXPECT_EQ(CodeOf([&] { other.Verify(token); }), ErrorCode::kInvalidToken);
  const std::string admin_claims = Base64UrlEncode(
      R"({"exp":1060,"iat":1000,"role":"admin","sub":"ada"})");
  const size_t a = token.find('.'), b = token.rfind('.');
  const std::string forged =
      token.substr(0, a + 1) + admin_claims + token.substr(b);
  EXPECT_EQ(CodeOf([&] { signer_.Verify(forged); }), ErrorCode::kInvalidToken);
  for (const std::string &bad :
       {std::string(""), std::string("a.b"), token + ".x", token.substr(0, b),
        token.substr(0, b + 1) + "!!!"}) {
    EXPECT_EQ(CodeOf([&] { signer_.Verify(bad); }), ErrorCode::kInvalidToken)
        << bad;
  }
  // Flip every character of the token in turn.
  for (size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '.') continue;
    std::string t = token;
    t[i] = t[i] == 'A' ? 'B' : 'A';
    EXPECT_NE(CodeOf([&] { signer_.Verify(t); }), ErrorCode::kBadRequest) << i;
  }
}

TEST(Tokens, EmptyKeyRejectedAndKeysAreRandom) {
  EXPECT_EQ(CodeOf([] { TokenSigner("", std::chrono::seconds(1)); }),
            ErrorCode::kValidationError);
  const std::string k1 = GenerateSigningKey(), k2 = GenerateSigningKey();
  EXPECT_EQ(Base64UrlDecode(k1)->size(), 32u);
  EXPECT_NE(k1, k2);
}

TEST(Roles, Names) {
  EXPECT_EQ(ParseRole(RoleName(Role::kAdmin)), Role::kAdmin);
  EXPECT_EQ(ParseRole(RoleName(Role::kAnnotator)), Role::kAnnotator);
  EXPECT_FALSE(ParseRole("root"));
}

}  // namespace
}  // namespace kwic
