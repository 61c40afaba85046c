// Copyright 2026 The vocsize Authors.
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

#ifndef VOCSIZE_TEXT_HPP_
#define VOCSIZE_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vocsize::text {

// True when `s` is well-formed UTF-8 (no overlongs, surrogates, or
// code points beyond U+10FFFF).
bool is_valid_utf8(std::string_view s);

// Decodes the code point starting at byte `i` and advances `i` past it.
// The input must be valid UTF-8.
char32_t decode_cp(std::string_view s, std::size_t& i);

std::size_t count_codepoints(std::string_view s);

// Unicode whitespace, including NBSP, ogham/space-family, and line/paragraph
// separators.
bool is_whitespace(char32_t cp);

// ASCII-only lowercasing; all other bytes pass through unchanged.
std::string lower_ascii(std::string_view s);

// Lines without their terminators; accepts "\n" and "\r\n". A trailing
// terminator does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view s);

// Maximal runs of non-whitespace code points.
std::vector<std::string_view> split_words(std::string_view line);

// Reads a whole file into memory. Throws IoError on failure.
std::string read_file(const std::string& path);

// Writes `contents` to `path`, replacing any existing file. Throws IoError.
void write_file(const std::string& path, std::string_view contents);

}  // namespace vocsize::text

#endif  // VOCSIZE_TEXT_HPP_
