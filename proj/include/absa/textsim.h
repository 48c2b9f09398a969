// Copyright 2026 The absa-eval Authors.
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

// Flexible text similarity (FTS) for the extraction components.
//
// A span is scored against the gold span with Rouge-L F1 over lowercase
// alphanumeric tokens after stopword removal. Predictions that do not occur in
// the review text (hallucinations) or share no token with the gold span score
// 0. A span pair matches when its score reaches the threshold chosen by the
// gold span's length.

#ifndef ABSA_TEXTSIM_H_
#define ABSA_TEXTSIM_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absa/core_model.h"

namespace absa {

// Ordered lowercase tokens; never empty strings, never whitespace.
using TokenSeq = std::vector<std::string>;

// Lowercases and splits on every run of non-[a-z0-9] characters.
TokenSeq Tokenize(std::string_view text);

TokenSeq RemoveStopwords(std::span<const std::string> tokens,
                         const std::set<std::string>& stopwords);

// A span prepared for scoring. Stopwords are dropped as whole
// whitespace-delimited words (case-insensitively) before tokenizing, so
// "in-residence" keeps its "in". `word_count` counts the surviving words and
// is the gold length used for threshold lookup.
struct PreparedSpan {
  TokenSeq tokens;
  std::size_t word_count = 0;
};

PreparedSpan PrepareSpan(std::string_view text,
                         const std::set<std::string>& stopwords);

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

struct RougeLScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// precision = |LCS| / |pred|, recall = |LCS| / |gold|; any zero
// denominator yields 0.
RougeLScore RougeL(std::span<const std::string> gold,
                   std::span<const std::string> pred);

// Whether `pred_text` occurs in `input_text` once both are lowercased and
// whitespace runs are collapsed.
bool OccursInText(std::string_view pred_text, std::string_view input_text);

struct FtsResult {
  double score = 0.0;
  std::size_t gold_len = 0;
};

FtsResult FtsScore(std::string_view gold_text, std::string_view pred_text,
                   std::string_view input_text, const FtsConfig& config);

double ThresholdFor(std::size_t gold_len, const FtsConfig& config);

enum class MatchCase { kExact, kHallucination, kOver, kUnder, kShift, kNoOverlap };

inline constexpr std::array<MatchCase, 6> kAllMatchCases = {
    MatchCase::kExact, MatchCase::kHallucination, MatchCase::kOver,
    MatchCase::kUnder, MatchCase::kShift,         MatchCase::kNoOverlap};

// "exact", "hallucination", "over", "under", "shift", "no_overlap".
std::string_view MatchCaseName(MatchCase match_case);

// `gold` and `pred` are stopword-filtered token sequences.
MatchCase ClassifyMatchCase(std::span<const std::string> gold,
                            std::span<const std::string> pred,
                            bool pred_in_input);

// True when `needle` occurs as a contiguous run inside `haystack`.
bool ContainsContiguous(std::span<const std::string> haystack,
                        std::span<const std::string> needle);

struct TextMatch {
  double score = 0.0;
  bool matched = false;
  MatchCase match_case = MatchCase::kNoOverlap;
  std::size_t gold_len = 0;
};

// Compares two extraction spans of the same component. Implicit aspects
// match only each other.
TextMatch CompareAspects(const AspectField& gold, const AspectField& pred,
                         std::string_view input_text, const FtsConfig& config);
TextMatch CompareSpans(std::string_view gold, std::string_view pred,
                       std::string_view input_text, const FtsConfig& config);

}  // namespace absa

#endif  // ABSA_TEXTSIM_H_
