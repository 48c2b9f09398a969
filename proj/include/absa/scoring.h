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

// Entry-level confusion counts and macro-averaged corpus metrics, for both
// FTS-OBP and the exact-match baseline.

#ifndef ABSA_SCORING_H_
#define ABSA_SCORING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absa/core_model.h"
#include "absa/pairing.h"

namespace absa {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Counts plus the resulting entry-level P/R/F1.
struct EntryScore {
  ConfusionCounts counts;
  PrfScore prf;
  // Left out of macro averages (DegeneratePolicy::kBothEmptyExcluded).
  bool excluded = false;
};

// Zero denominators give 0; an entry with no gold and no predicted units is
// resolved by `policy`.
EntryScore ScoreCounts(const ConfusionCounts& counts, DegeneratePolicy policy);

// One optimal gold/pred pair.
struct PairEvaluation {
  std::size_t gold = 0;
  std::size_t pred = 0;
  double similarity = 0.0;
  std::vector<ComponentMatch> components;
  bool unit_match = false;
};

struct ComponentScore {
  Component component = Component::kOpinion;
  EntryScore score;
};

struct EntryEvalResult {
  std::string id;
  TaskKind task = TaskKind::kASQE;
  std::size_t gold_count = 0;
  std::size_t pred_count = 0;
  bool pred_parse_failed = false;
  Pairing pairing;
  std::vector<PairEvaluation> pairs;
  EntryScore unit;
  // Task components in canonical order.
  std::vector<ComponentScore> components;

  // Kept for diagnostics over unmatched units.
  std::vector<OpinionUnit> gold_units;
  std::vector<OpinionUnit> pred_units;
  std::string text;
};

// Throws ValidationError if a unit does not match entry.task.
EntryEvalResult EvaluateEntry(const EvalEntry& entry, const FtsConfig& config);

enum class MetricFlavor { kFtsObp, kExact };
std::string_view MetricFlavorName(MetricFlavor flavor);
std::optional<MetricFlavor> ParseMetricFlavor(std::string_view name);

// Lowercased, whitespace-collapsed serialized unit; the exact-match key.
std::string ExactMatchKey(const OpinionUnit& unit, TaskKind task);

// Set semantics over ExactMatchKey: duplicates on either side collapse.
ConfusionCounts ExactMatchEntry(const EvalEntry& entry);

// Unweighted mean of the non-excluded entry scores; zeros if none remain.
PrfScore MacroAverage(std::span<const EntryScore> scores);

struct EntrySummary {
  std::string id;
  EntryScore unit;
  bool pred_parse_failed = false;
};

struct CorpusReport {
  TaskKind task = TaskKind::kASQE;
  MetricFlavor flavor = MetricFlavor::kFtsObp;
  PrfScore unit;
  // FTS-OBP only; task components in canonical order.
  std::vector<std::pair<Component, PrfScore>> components;
  std::size_t entry_count = 0;
  std::size_t scored_entry_count = 0;
  std::size_t parse_failures = 0;
  std::vector<EntrySummary> entries;
};

// Throws std::invalid_argument on an empty list or mixed tasks.
CorpusReport AggregateMacro(std::span<const EntryEvalResult> results);

// Exact-match flavor of a corpus, macro-averaged the same way.
CorpusReport EvaluateExactCorpus(std::span<const EvalEntry> entries,
                                 DegeneratePolicy policy);

}  // namespace absa

#endif  // ABSA_SCORING_H_
