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

#include "absa/textsim.h"

#include <algorithm>

#include "absa/strings.h"

namespace absa {

TokenSeq Tokenize(std::string_view text) {
  TokenSeq tokens;
  std::string current;
  for (char c : text) {
    if (IsAlnum(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                             : c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenSeq RemoveStopwords(std::span<const std::string> tokens,
                         const std::set<std::string>& stopwords) {
  TokenSeq out;
  for (const std::string& t : tokens) {
    if (!stopwords.contains(t)) out.push_back(t);
  }
  return out;
}

PreparedSpan PrepareSpan(std::string_view text,
                         const std::set<std::string>& stopwords) {
  PreparedSpan prepared;
  for (const std::string& word : SplitWhitespace(text)) {
    if (stopwords.contains(ToLower(word))) continue;
    ++prepared.word_count;
    for (std::string& t : Tokenize(word)) prepared.tokens.push_back(std::move(t));
  }
  return prepared;
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows of the classic table.
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeLScore RougeL(std::span<const std::string> gold,
                   std::span<const std::string> pred) {
  RougeLScore s;
  std::size_t lcs = LcsLength(gold, pred);
  if (lcs == 0) return s;
  double l = static_cast<double>(lcs);
  s.precision = l / static_cast<double>(pred.size());
  s.recall = l / static_cast<double>(gold.size());
  // 2PR/(P+R) reduces to 2|LCS|/(|gold|+|pred|); one division keeps values
  // such as 0.6 exactly representable-equal to the configured thresholds.
  s.f1 = 2.0 * l / static_cast<double>(gold.size() + pred.size());
  return s;
}

bool OccursInText(std::string_view pred_text, std::string_view input_text) {
  return NormalizeSpaces(input_text).find(NormalizeSpaces(pred_text)) !=
         std::string::npos;
}

FtsResult FtsScore(std::string_view gold_text, std::string_view pred_text,
                   std::string_view input_text, const FtsConfig& config) {
  PreparedSpan gold = PrepareSpan(gold_text, config.stopwords);
  FtsResult result;
  result.gold_len = gold.word_count;
  if (!OccursInText(pred_text, input_text)) return result;
  PreparedSpan pred = PrepareSpan(pred_text, config.stopwords);
  result.score = RougeL(gold.tokens, pred.tokens).f1;
  return result;
}

double ThresholdFor(std::size_t gold_len, const FtsConfig& config) {
  for (const ThresholdBand& band : config.threshold_schedule) {
    if (!band.max_gold_len || gold_len <= *band.max_gold_len) {
      return band.threshold;
    }
  }
  // Validated schedules always end with an unbounded band.
  return config.threshold_schedule.empty()
             ? 1.0
             : config.threshold_schedule.back().threshold;
}

std::string_view MatchCaseName(MatchCase match_case) {
  switch (match_case) {
    case MatchCase::kExact:
      return "exact";
    case MatchCase::kHallucination:
      return "hallucination";
    case MatchCase::kOver:
      return "over";
    case MatchCase::kUnder:
      return "under";
    case MatchCase::kShift:
      return "shift";
    case MatchCase::kNoOverlap:
      return "no_overlap";
  }
  return "unknown";
}

bool ContainsContiguous(std::span<const std::string> haystack,
                        std::span<const std::string> needle) {
  if (needle.empty()) return true;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

MatchCase ClassifyMatchCase(std::span<const std::string> gold,
                            std::span<const std::string> pred,
                            bool pred_in_input) {
  if (!pred_in_input) return MatchCase::kHallucination;
  if (std::equal(gold.begin(), gold.end(), pred.begin(), pred.end())) {
    // Two empty sequences share nothing to compare.
    return gold.empty() ? MatchCase::kNoOverlap : MatchCase::kExact;
  }
  if (LcsLength(gold, pred) == 0) return MatchCase::kNoOverlap;
  if (ContainsContiguous(pred, gold)) return MatchCase::kOver;
  if (ContainsContiguous(gold, pred)) return MatchCase::kUnder;
  return MatchCase::kShift;
}

TextMatch CompareSpans(std::string_view gold, std::string_view pred,
                       std::string_view input_text, const FtsConfig& config) {
  PreparedSpan g = PrepareSpan(gold, config.stopwords);
  PreparedSpan p = PrepareSpan(pred, config.stopwords);
  bool in_input = OccursInText(pred, input_text);

  TextMatch m;
  m.gold_len = g.word_count;
  m.score = in_input ? RougeL(g.tokens, p.tokens).f1 : 0.0;
  m.matched = m.score > 0.0 && m.score >= ThresholdFor(m.gold_len, config);
  m.match_case = ClassifyMatchCase(g.tokens, p.tokens, in_input);
  return m;
}

TextMatch CompareAspects(const AspectField& gold, const AspectField& pred,
                         std::string_view input_text, const FtsConfig& config) {
  if (gold.is_implicit() || pred.is_implicit()) {
    TextMatch m;
    bool both = gold.is_implicit() && pred.is_implicit();
    m.score = both ? 1.0 : 0.0;
    m.matched = both;
    m.match_case = both ? MatchCase::kExact : MatchCase::kNoOverlap;
    if (!gold.is_implicit()) {
      m.gold_len = PrepareSpan(gold.span(), config.stopwords).word_count;
    }
    return m;
  }
  return CompareSpans(gold.span(), pred.span(), input_text, config);
}

}  // namespace absa
