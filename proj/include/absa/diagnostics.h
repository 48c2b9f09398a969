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

// Component-level diagnostics over evaluated entries, and the statistics used
// to compare two metrics over the same runs.

#ifndef ABSA_DIAGNOSTICS_H_
#define ABSA_DIAGNOSTICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absa/scoring.h"
#include "absa/textsim.h"

namespace absa {

// Percentages are rounded to two decimals.
double PercentOf(std::int64_t part, std::int64_t whole);

// Counts indexed by MatchCase.
struct MatchCaseTally {
  std::array<std::int64_t, kAllMatchCases.size()> counts{};

  std::int64_t& operator[](MatchCase c) {
    return counts[static_cast<std::size_t>(c)];
  }
  std::int64_t operator[](MatchCase c) const {
    return counts[static_cast<std::size_t>(c)];
  }
  std::int64_t total() const;
  double percentage(MatchCase c) const { return PercentOf((*this)[c], total()); }
};

struct ComponentMatchCases {
  Component component = Component::kOpinion;
  MatchCaseTally accepted;
  MatchCaseTally rejected;
};

// Aspect and/or opinion rows, whichever the task has.
struct MatchCaseBreakdown {
  std::vector<ComponentMatchCases> components;
};

// Tallies the match case of every paired aspect/opinion component, split by
// whether it passed its threshold. Unmatched units are counted as rejected
// only when `include_unmatched` is set.
MatchCaseBreakdown ComputeMatchCaseBreakdown(
    std::span<const EntryEvalResult> results, bool include_unmatched = false);

struct CategoryRow {
  // Gold label as written in the corpus.
  std::string label;
  std::int64_t paired = 0;
  std::int64_t matched = 0;
  // Pairs whose main category agreed but whose full label did not.
  std::int64_t main_only = 0;
  double percentage = 0.0;
};

// Rows sorted by label.
struct CategoryMatchTable {
  std::vector<CategoryRow> rows;
};

CategoryMatchTable ComputeCategoryMatchTable(
    std::span<const EntryEvalResult> results);

struct ImplicitAspectStats {
  // Paired gold units whose aspect is implicit.
  std::int64_t total = 0;
  // ... of which the paired prediction was implicit too.
  std::int64_t matched = 0;
  // 0 when total is 0.
  double percentage = 0.0;
};

ImplicitAspectStats ComputeImplicitAspectStats(
    std::span<const EntryEvalResult> results);

// Paired component totals and match rate, per task component.
struct ComponentPairStats {
  Component component = Component::kOpinion;
  std::int64_t pairs = 0;
  std::int64_t matched = 0;
  double percentage = 0.0;
};

std::vector<ComponentPairStats> ComputeComponentPairStats(
    std::span<const EntryEvalResult> results);

struct Diagnostics {
  MatchCaseBreakdown match_cases;
  std::vector<ComponentPairStats> component_pairs;
  // Set when the task has the respective component.
  std::optional<CategoryMatchTable> categories;
  std::optional<ImplicitAspectStats> implicit_aspects;
};

Diagnostics ComputeDiagnostics(std::span<const EntryEvalResult> results,
                               const FtsConfig& config);

struct Correlation {
  // NaN when either input is constant.
  double pearson = 0.0;
  double spearman = 0.0;
};

// Spearman is Pearson over average ranks. Throws std::invalid_argument on
// length mismatch or fewer than two points.
Correlation ComputeCorrelation(std::span<const double> xs,
                               std::span<const double> ys);

// Fractional ranks (1-based), ties share their average rank.
std::vector<double> AverageRanks(std::span<const double> values);

struct PairedDifference {
  double mean_delta = 0.0;
  // Sample standard deviation (n - 1).
  double std_delta = 0.0;
  // mean / (std / sqrt(n)); +-infinity when std is 0 and mean is not, 0 when
  // both are 0.
  double t_statistic = 0.0;
  // mean / std, with the same conventions as t_statistic.
  double cohens_d = 0.0;
  std::size_t n = 0;
};

// delta = a - b elementwise. Throws std::invalid_argument on length mismatch
// or fewer than two pairs.
PairedDifference ComputePairedDifference(std::span<const double> a,
                                         std::span<const double> b);

}  // namespace absa

#endif  // ABSA_DIAGNOSTICS_H_
