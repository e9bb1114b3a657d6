// Copyright 2026 The cooc Authors.
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

// Low-level UTF-8 and character-class helpers shared by the tokenizer and
// the output writers.

#ifndef COOC_TEXT_HPP_
#define COOC_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace cooc::text {

// Decodes UTF-8 into code points. Rejects overlong forms, surrogates and
// values above U+10FFFF; throws DecodeError with the offending byte offset.
std::u32string decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

bool is_space(char32_t cp);

// Punctuation and symbols. Everything that is neither space nor punctuation
// counts as a word character (letters, digits, marks).
bool is_punct(char32_t cp);

// Apostrophes and hyphens that stay inside a word when flanked by word
// characters ("don't", "well-known").
bool is_joiner(char32_t cp);

// Simple one-to-one lowercase mapping for Latin, Greek and Cyrillic. Code
// points outside those blocks are returned unchanged.
char32_t to_lower(char32_t cp);

// Shortest round-trip decimal representation; identical on every platform.
std::string format_double(double v);

std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace cooc::text

#endif  // COOC_TEXT_HPP_
