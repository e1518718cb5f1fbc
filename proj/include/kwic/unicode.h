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

// Text is held as UTF-32 so that every offset counts Unicode scalar values.
// These helpers convert at the I/O edges and classify code points.

#ifndef KWIC_UNICODE_H_
#define KWIC_UNICODE_H_

#include <string>
#include <string_view>

namespace kwic {

// Throws Error(kInvalidText) on ill-formed UTF-8 (including encoded
// surrogates).
std::u32string DecodeUtf8(std::string_view utf8);
bool IsValidUtf8(std::string_view utf8);

// Throws Error(kInvalidText) if `text` holds a non-scalar value.
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

// Word characters: letters and decimal digits, plus the ASCII apostrophe and
// U+2019 so that elisions like "dell'Italia" stay a single word.
bool IsWordChar(char32_t c);
bool IsSpace(char32_t c);
bool IsPunct(char32_t c);

char32_t FoldCase(char32_t c);
std::u32string FoldCase(std::u32string_view text);
char32_t ToTitle(char32_t c);

std::u32string_view Trim(std::u32string_view text);
std::string TrimUtf8(std::string_view utf8);

}  // namespace kwic

#endif  // KWIC_UNICODE_H_
