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

#ifndef VOCSIZE_CORPUS_HPP_
#define VOCSIZE_CORPUS_HPP_

#include <cstdint>
#include <string_view>

#include "json.hpp"

namespace vocsize {

// Scalar statistics of a line-per-sentence text corpus.
//
// Counting convention: the text is ASCII-lowercased, words are maximal runs
// of non-whitespace code points, and character counts cover word characters
// only (no whitespace, no line terminators). `chars_with_whitespace`
// additionally counts intra-line whitespace so results can be compared
// against figures produced under either convention.
struct CorpusStats {
  std::uint64_t sentences = 0;    // lines with at least one word
  std::uint64_t words = 0;        // word tokens
  std::uint64_t unique_words = 0; // word types
  std::uint64_t chars = 0;        // word characters (code points)
  std::uint64_t unique_chars = 0; // distinct word characters
  std::uint64_t top_char_freq = 0;

  std::uint64_t chars_with_whitespace = 0;  // diagnostic alternate count
};

inline constexpr std::string_view kCountingConvention =
    "lowercased word characters; whitespace and line terminators excluded";

// Computes CorpusStats under the convention above. Deterministic.
// Throws ParseError on invalid UTF-8 and PreconditionError when the corpus
// has no non-whitespace characters.
CorpusStats compute_stats(std::string_view corpus);

void to_json(nlohmann::json& j, const CorpusStats& s);
void from_json(const nlohmann::json& j, CorpusStats& s);

}  // namespace vocsize

#endif  // VOCSIZE_CORPUS_HPP_
