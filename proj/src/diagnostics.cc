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

#include "absa/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace absa {

double PercentOf(std::int64_t part, std::int64_t whole) {
  if (whole == 0) return 0.0;
  double pct = 100.0 * static_cast<double>(part) / static_cast<double>(whole);
  return std::round(pct * 100.0) / 100.0;
}

std::int64_t MatchCaseTally::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

namespace {

std::optional<std::size_t> ComponentIndex(TaskKind task, Component c) {
  std::span<const Component> comps = TaskComponents(task);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k] == c) return k;
  }
  return std::nullopt;
}

// Case assigned to a unit that found no partner.
MatchCase UnpairedCase(const OpinionUnit& unit, Component c, bool is_pred,
                       std::string_view text) {
  if (!is_pred) return MatchCase::kNoOverlap;
  std::string span;
  if (c == Component::kAspect) {
    if (unit.aspect->is_implicit()) return MatchCase::kNoOverlap;
    span = unit.aspect->span();
  } else {
    span = *unit.opinion;
  }
  return OccursInText(span, text) ? MatchCase::kNoOverlap
                                  : MatchCase::kHallucination;
}

}  // namespace

MatchCaseBreakdown ComputeMatchCaseBreakdown(
    std::span<const EntryEvalResult> results, bool include_unmatched) {
  MatchCaseBreakdown breakdown;
  if (results.empty()) return breakdown;
  const TaskKind task = results.front().task;
  for (Component c : {Component::kAspect, Component::kOpinion}) {
    std::optional<std::size_t> k = ComponentIndex(task, c);
    if (!k) continue;
    ComponentMatchCases row;
    row.component = c;
    for (const EntryEvalResult& r : results) {
      for (const PairEvaluation& pe : r.pairs) {
        const ComponentMatch& m = pe.components[*k];
        MatchCaseTally& tally = m.matched ? row.accepted : row.rejected;
        ++tally[m.match_case.value_or(MatchCase::kNoOverlap)];
      }
      if (!include_unmatched) continue;
      for (std::size_t g : r.pairing.unmatched_gold) {
        ++row.rejected[UnpairedCase(r.gold_units[g], c, false, r.text)];
      }
      for (std::size_t p : r.pairing.unmatched_pred) {
        ++row.rejected[UnpairedCase(r.pred_units[p], c, true, r.text)];
      }
    }
    breakdown.components.push_back(row);
  }
  return breakdown;
}

CategoryMatchTable ComputeCategoryMatchTable(
    std::span<const EntryEvalResult> results) {
  std::map<std::string, CategoryRow> rows;
  for (const EntryEvalResult& r : results) {
    std::optional<std::size_t> k = ComponentIndex(r.task, Component::kCategory);
    if (!k) continue;
    for (const PairEvaluation& pe : r.pairs) {
      std::string label = r.gold_units[pe.gold].category->ToString();
      CategoryRow& row = rows[label];
      row.label = label;
      ++row.paired;
      const ComponentMatch& m = pe.components[*k];
      if (m.matched) {
        ++row.matched;
      } else if (m.main_category_match) {
        ++row.main_only;
      }
    }
  }
  CategoryMatchTable table;
  for (auto& [label, row] : rows) {
    row.percentage = PercentOf(row.matched, row.paired);
    table.rows.push_back(row);
  }
  return table;
}

ImplicitAspectStats ComputeImplicitAspectStats(
    std::span<const EntryEvalResult> results) {
  ImplicitAspectStats stats;
  for (const EntryEvalResult& r : results) {
    std::optional<std::size_t> k = ComponentIndex(r.task, Component::kAspect);
    if (!k) continue;
    for (const PairEvaluation& pe : r.pairs) {
      if (!r.gold_units[pe.gold].aspect->is_implicit()) continue;
      ++stats.total;
      if (pe.components[*k].matched) ++stats.matched;
    }
  }
  stats.percentage = PercentOf(stats.matched, stats.total);
  return stats;
}

std::vector<ComponentPairStats> ComputeComponentPairStats(
    std::span<const EntryEvalResult> results) {
  std::vector<ComponentPairStats> out;
  if (results.empty()) return out;
  std::span<const Component> comps = TaskComponents(results.front().task);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    ComponentPairStats s;
    s.component = comps[k];
    for (const EntryEvalResult& r : results) {
      for (const PairEvaluation& pe : r.pairs) {
        ++s.pairs;
        if (pe.components[k].matched) ++s.matched;
      }
    }
    s.percentage = PercentOf(s.matched, s.pairs);
    out.push_back(s);
  }
  return out;
}

Diagnostics ComputeDiagnostics(std::span<const EntryEvalResult> results,
                               const FtsConfig& config) {
  Diagnostics d;
  d.match_cases =
      ComputeMatchCaseBreakdown(results, config.diagnostics_include_unmatched);
  d.component_pairs = ComputeComponentPairStats(results);
  if (!results.empty()) {
    TaskKind task = results.front().task;
    if (TaskHasComponent(task, Component::kCategory)) {
      d.categories = ComputeCategoryMatchTable(results);
    }
    if (TaskHasComponent(task, Component::kAspect)) {
      d.implicit_aspects = ComputeImplicitAspectStats(results);
    }
  }
  return d;
}

namespace {

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

void CheckPaired(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("paired inputs differ in length");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("need at least two paired values");
  }
}

// Sign-aware ratio for the degenerate zero-spread case.
double SafeRatio(double num, double den) {
  if (den > 0.0) return num / den;
  if (num == 0.0) return 0.0;
  return num > 0.0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share ranks i+1..j+1.
    double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

Correlation ComputeCorrelation(std::span<const double> xs,
                               std::span<const double> ys) {
  CheckPaired(xs, ys);
  Correlation c;
  c.pearson = Pearson(xs, ys);
  std::vector<double> rx = AverageRanks(xs);
  std::vector<double> ry = AverageRanks(ys);
  c.spearman = Pearson(rx, ry);
  return c;
}

PairedDifference ComputePairedDifference(std::span<const double> a,
                                         std::span<const double> b) {
  CheckPaired(a, b);
  PairedDifference d;
  d.n = a.size();
  std::vector<double> delta(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) delta[i] = a[i] - b[i];
  const double n = static_cast<double>(d.n);
  d.mean_delta = std::accumulate(delta.begin(), delta.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : delta) ss += (x - d.mean_delta) * (x - d.mean_delta);
  d.std_delta = std::sqrt(ss / (n - 1.0));
  d.cohens_d = SafeRatio(d.mean_delta, d.std_delta);
  d.t_statistic = SafeRatio(d.mean_delta, d.std_delta / std::sqrt(n));
  return d;
}

}  // namespace absa
