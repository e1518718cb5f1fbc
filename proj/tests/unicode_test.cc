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

#include "kwic/unicode.h"

#include <gtest/gtest.h>

#include "kwic/error.h"
#include "support/generators.h"

namespace kwic {
namespace {

// Reference encoder straight from the UTF-8 bit layout.
std::string EncodeByHand(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

TEST(Utf8Test, RoundTripsRandomScalarValues) {
  testing::Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    std::u32string text;
    std::string bytes;
    for (size_t n = testing::Uniform(rng, 0, 12); n > 0; --n) {
      char32_t c;
      do {
        c = static_cast<char32_t>(testing::Uniform(rng, 0, 0x10FFFF));
      } while (c >= 0xD800 && c <= 0xDFFF);
      text.push_back(c);
      bytes += EncodeByHand(c);
    }
    ASSERT_EQ(EncodeUtf8(text), bytes);
    ASSERT_EQ(DecodeUtf8(bytes), text);
    ASSERT_TRUE(IsValidUtf8(bytes));
  }
}

TEST(Utf8Test, RejectsIllFormedInput) {
  for (std::string bad : {std::string("\xC0\xAF"), std::string("\xED\xA0\x80"),
                          std::string("\xE2\x82"), std::string("\xFF"),
                          std::string("a\x80")}) {
    EXPECT_FALSE(IsValidUtf8(bad)) << bad;
    try {
      DecodeUtf8(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidText);
    }
  }
  EXPECT_THROW(EncodeUtf8(std::u32string(1, char32_t{0xD800})), Error);
}

TEST(Utf8Test, OffsetsCountScalarValues) {
  EXPECT_EQ(DecodeUtf8("città").size(), 5u);
  EXPECT_EQ(DecodeUtf8("日本").size(), 2u);
  EXPECT_EQ(DecodeUtf8("\xF0\x9F\x98\x80").size(), 1u);
}

TEST(ClassifyTest, WordCharacters) {
  EXPECT_TRUE(IsWordChar(U'a'));
  EXPECT_TRUE(IsWordChar(U'9'));
  EXPECT_TRUE(IsWordChar(U'à'));
  EXPECT_TRUE(IsWordChar(U'日'));
  EXPECT_TRUE(IsWordChar(U'\''));
  EXPECT_TRUE(IsWordChar(U'’'));
  EXPECT_FALSE(IsWordChar(U' '));
  EXPECT_FALSE(IsWordChar(U','));
  EXPECT_FALSE(IsWordChar(U'—'));
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_TRUE(IsSpace(U'\n'));
  EXPECT_TRUE(IsPunct(U'«'));
  EXPECT_FALSE(IsPunct(U'x'));
}

TEST(ClassifyTest, CaseFoldingAndTitle) {
  EXPECT_EQ(FoldCase(U"Straße DC Élite"), U"straße dc élite");
  EXPECT_EQ(ToTitle(U'é'), U'É');
  EXPECT_EQ(Trim(U"  \t a b \n"), U"a b");
  EXPECT_EQ(TrimUtf8(" x "), "x");
}

}  // namespace
}  // namespace kwic
