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

#include "absa/scoring.h"

#include <set>
#include <stdexcept>

#include "absa/strings.h"
#include "absa/tagged_format.h"

namespace absa {
namespace {

double Ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EntryScore ScoreCounts(const ConfusionCounts& counts, DegeneratePolicy policy) {
  EntryScore s;
  s.counts = counts;
  if (counts.tp == 0 && counts.fp == 0 && counts.fn == 0) {
    switch (policy) {
      case DegeneratePolicy::kBothEmptyPerfect:
        s.prf = {1.0, 1.0, 1.0};
        break;
      case DegeneratePolicy::kBothEmptyZero:
        break;
      case DegeneratePolicy::kBothEmptyExcluded:
        s.excluded = true;
        break;
    }
    return s;
  }
  s.prf.precision = Ratio(counts.tp, counts.tp + counts.fp);
  s.prf.recall = Ratio(counts.tp, counts.tp + counts.fn);
  double sum = s.prf.precision + s.prf.recall;
  s.prf.f1 = sum > 0.0 ? 2.0 * s.prf.precision * s.prf.recall / sum : 0.0;
  return s;
}

EntryEvalResult EvaluateEntry(const EvalEntry& entry, const FtsConfig& config) {
  for (const OpinionUnit& u : entry.gold) ValidateUnit(u, entry.task);
  for (const OpinionUnit& u : entry.pred) ValidateUnit(u, entry.task);

  EntryEvalResult r;
  r.id = entry.id;
  r.task = entry.task;
  r.gold_count = entry.gold.size();
  r.pred_count = entry.pred.size();
  r.pred_parse_failed = entry.pred_parse_failed;
  r.gold_units = entry.gold;
  r.pred_units = entry.pred;
  r.text = entry.text;

  SimilarityMatrix matrix =
      SimilarityMatrix::Build(entry.gold, entry.pred, entry.text, entry.task, config);
  r.pairing = OptimalAssignment(matrix);

  std::span<const Component> components = TaskComponents(entry.task);
  std::vector<ConfusionCounts> per_component(components.size());
  ConfusionCounts unit;

  for (const auto& [g, p] : r.pairing.pairs) {
    const UnitSimilarity& cell = matrix.at(g, p);
    PairEvaluation pe;
    pe.gold = g;
    pe.pred = p;
    pe.similarity = cell.cell;
    pe.components = cell.breakdown;
    pe.unit_match = true;
    for (std::size_t k = 0; k < pe.components.size(); ++k) {
      if (pe.components[k].matched) {
        ++per_component[k].tp;
      } else {
        ++per_component[k].fp;
        ++per_component[k].fn;
        pe.unit_match = false;
      }
    }
    if (pe.unit_match) {
      ++unit.tp;
    } else {
      ++unit.fp;
      ++unit.fn;
    }
    r.pairs.push_back(std::move(pe));
  }

  auto unmatched_pred = static_cast<std::int64_t>(r.pairing.unmatched_pred.size());
  auto unmatched_gold = static_cast<std::int64_t>(r.pairing.unmatched_gold.size());
  unit.fp += unmatched_pred;
  unit.fn += unmatched_gold;
  for (ConfusionCounts& c : per_component) {
    c.fp += unmatched_pred;
    c.fn += unmatched_gold;
  }

  r.unit = ScoreCounts(unit, config.degenerate_policy);
  for (std::size_t k = 0; k < components.size(); ++k) {
    r.components.push_back(
        {components[k], ScoreCounts(per_component[k], config.degenerate_policy)});
  }
  return r;
}

std::string_view MetricFlavorName(MetricFlavor flavor) {
  return flavor == MetricFlavor::kFtsObp ? "fts-obp" : "exact";
}

std::optional<MetricFlavor> ParseMetricFlavor(std::string_view name) {
  if (name == "fts-obp") return MetricFlavor::kFtsObp;
  if (name == "exact") return MetricFlavor::kExact;
  return std::nullopt;
}

std::string ExactMatchKey(const OpinionUnit& unit, TaskKind task) {
  return NormalizeSpaces(SerializeUnit(unit, task));
}

ConfusionCounts ExactMatchEntry(const EvalEntry& entry) {
  std::set<std::string> gold, pred;
  for (const OpinionUnit& u : entry.gold) gold.insert(ExactMatchKey(u, entry.task));
  for (const OpinionUnit& u : entry.pred) pred.insert(ExactMatchKey(u, entry.task));
  ConfusionCounts c;
  for (const std::string& key : pred) {
    if (gold.contains(key)) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  c.fn = static_cast<std::int64_t>(gold.size()) - c.tp;
  return c;
}

PrfScore MacroAverage(std::span<const EntryScore> scores) {
  PrfScore mean;
  std::size_t n = 0;
  for (const EntryScore& s : scores) {
    if (s.excluded) continue;
    mean.precision += s.prf.precision;
    mean.recall += s.prf.recall;
    mean.f1 += s.prf.f1;
    ++n;
  }
  if (n == 0) return {};
  double d = static_cast<double>(n);
  return {mean.precision / d, mean.recall / d, mean.f1 / d};
}

CorpusReport AggregateMacro(std::span<const EntryEvalResult> results) {
  if (results.empty()) {
    throw std::invalid_argument("cannot aggregate an empty result list");
  }
  CorpusReport report;
  report.task = results.front().task;
  report.flavor = MetricFlavor::kFtsObp;
  report.entry_count = results.size();

  std::vector<EntryScore> unit_scores;
  std::span<const Component> components = TaskComponents(report.task);
  std::vector<std::vector<EntryScore>> component_scores(components.size());
  for (const EntryEvalResult& r : results) {
    if (r.task != report.task) {
      throw std::invalid_argument("cannot aggregate results of mixed tasks");
    }
    unit_scores.push_back(r.unit);
    for (std::size_t k = 0; k < components.size(); ++k) {
      component_scores[k].push_back(r.components[k].score);
    }
    if (!r.unit.excluded) ++report.scored_entry_count;
    if (r.pred_parse_failed) ++report.parse_failures;
    report.entries.push_back({r.id, r.unit, r.pred_parse_failed});
  }
  report.unit = MacroAverage(unit_scores);
  for (std::size_t k = 0; k < components.size(); ++k) {
    report.components.emplace_back(components[k], MacroAverage(component_scores[k]));
  }
  return report;
}

CorpusReport EvaluateExactCorpus(std::span<const EvalEntry> entries,
                                 DegeneratePolicy policy) {
  if (entries.empty()) {
    throw std::invalid_argument("cannot aggregate an empty corpus");
  }
  CorpusReport report;
  report.task = entries.front().task;
  report.flavor = MetricFlavor::kExact;
  report.entry_count = entries.size();
  std::vector<EntryScore> scores;
  for (const EvalEntry& e : entries) {
    if (e.task != report.task) {
      throw std::invalid_argument("cannot aggregate entries of mixed tasks");
    }
    EntryScore s = ScoreCounts(ExactMatchEntry(e), policy);
    scores.push_back(s);
    if (!s.excluded) ++report.scored_entry_count;
    if (e.pred_parse_failed) ++report.parse_failures;
    report.entries.push_back({e.id, s, e.pred_parse_failed});
  }
  report.unit = MacroAverage(scores);
  return report;
}

}  // namespace absa
