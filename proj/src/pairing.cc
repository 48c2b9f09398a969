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

#include "absa/pairing.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absa/strings.h"

namespace absa {

bool SameLabel(std::string_view a, std::string_view b) {
  return NormalizeSpaces(a) == NormalizeSpaces(b);
}

UnitSimilarity ComputeUnitSimilarity(const OpinionUnit& gold,
                                     const OpinionUnit& pred,
                                     std::string_view input_text, TaskKind task,
                                     const FtsConfig& config) {
  UnitSimilarity sim;
  double weighted = 0.0;
  double total_weight = 0.0;
  for (Component c : TaskComponents(task)) {
    ComponentMatch m;
    m.component = c;
    switch (c) {
      case Component::kAspect: {
        TextMatch t = CompareAspects(*gold.aspect, *pred.aspect, input_text, config);
        m.score = t.score;
        m.matched = t.matched;
        m.match_case = t.match_case;
        break;
      }
      case Component::kOpinion: {
        TextMatch t = CompareSpans(*gold.opinion, *pred.opinion, input_text, config);
        m.score = t.score;
        m.matched = t.matched;
        m.match_case = t.match_case;
        break;
      }
      case Component::kCategory: {
        const CategoryLabel& g = *gold.category;
        const CategoryLabel& p = *pred.category;
        m.main_category_match = SameLabel(g.main, p.main);
        m.matched = SameLabel(g.ToString(), p.ToString());
        m.score = m.matched ? 1.0
                  : m.main_category_match ? config.partial_main_category_score
                                          : 0.0;
        break;
      }
      case Component::kSentiment:
        m.matched = *gold.sentiment == *pred.sentiment;
        m.score = m.matched ? 1.0 : 0.0;
        break;
    }
    weighted += config.weight(c) * m.score;
    total_weight += config.weight(c);
    sim.breakdown.push_back(m);
  }
  sim.cell = total_weight > 0.0 ? weighted / total_weight : 0.0;
  return sim;
}

SimilarityMatrix SimilarityMatrix::Build(const std::vector<OpinionUnit>& gold,
                                         const std::vector<OpinionUnit>& pred,
                                         std::string_view input_text,
                                         TaskKind task,
                                         const FtsConfig& config) {
  SimilarityMatrix m(gold.size(), pred.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t j = 0; j < pred.size(); ++j) {
      m.at(i, j) = ComputeUnitSimilarity(gold[i], pred[j], input_text, task, config);
    }
  }
  return m;
}

SimilarityMatrix SimilarityMatrix::FromValues(
    const std::vector<std::vector<double>>& values) {
  std::size_t rows = values.size();
  std::size_t cols = rows == 0 ? 0 : values.front().size();
  SimilarityMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (values[i].size() != cols) {
      throw std::invalid_argument("ragged similarity matrix");
    }
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j).cell = values[i][j];
  }
  return m;
}

std::vector<std::size_t> SolveMinCostAssignment(
    const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const std::size_t m = cost.front().size();
  if (n > m) throw std::invalid_argument("assignment needs rows <= cols");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based; column 0 is the virtual start of each augmenting path.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = owner[j0], j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) assignment[owner[j] - 1] = j - 1;
  }
  return assignment;
}

namespace {

// Best achievable total over the given rows/columns, matching
// min(|rows|, |cols|) pairs.
double MaxTotal(const SimilarityMatrix& matrix,
                const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  if (rows.empty() || cols.empty()) return 0.0;
  const bool transpose = rows.size() > cols.size();
  const auto& small = transpose ? cols : rows;
  const auto& large = transpose ? rows : cols;
  std::vector<std::vector<double>> cost(small.size(),
                                        std::vector<double>(large.size()));
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = 0; b < large.size(); ++b) {
      cost[a][b] = transpose ? -matrix.value(large[b], small[a])
                             : -matrix.value(small[a], large[b]);
    }
  }
  std::vector<std::size_t> assignment = SolveMinCostAssignment(cost);
  double total = 0.0;
  for (std::size_t a = 0; a < small.size(); ++a) total -= cost[a][assignment[a]];
  return total;
}

std::vector<std::size_t> Without(const std::vector<std::size_t>& v,
                                 std::size_t x) {
  std::vector<std::size_t> out;
  out.reserve(v.size());
  for (std::size_t y : v) {
    if (y != x) out.push_back(y);
  }
  return out;
}

}  // namespace

Pairing OptimalAssignment(const SimilarityMatrix& matrix) {
  const std::size_t n = matrix.rows();
  const std::size_t p = matrix.cols();
  std::vector<std::size_t> rows(n), cols(p);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  for (std::size_t j = 0; j < p; ++j) cols[j] = j;

  Pairing pairing;
  const double optimum = MaxTotal(matrix, rows, cols);
  const double eps = 1e-9 * std::max(1.0, std::fabs(optimum));

  // Fix pairs greedily in (gold, pred) order, keeping a choice only if the
  // rest of the matrix can still reach the optimum. This yields the
  // lexicographically smallest optimal pair list.
  double fixed = 0.0;
  for (std::size_t i = 0; i < n && !cols.empty(); ++i) {
    std::vector<std::size_t> rest_rows = Without(rows, i);
    std::optional<std::size_t> chosen;
    std::size_t best_j = cols.front();
    double best_total = -std::numeric_limits<double>::infinity();
    for (std::size_t j : cols) {
      double total = fixed + matrix.value(i, j) +
                     MaxTotal(matrix, rest_rows, Without(cols, j));
      if (total >= optimum - eps) {
        chosen = j;
        break;
      }
      if (total > best_total) {
        best_total = total;
        best_j = j;
      }
    }
    // Gold i may stay unmatched only while golds outnumber free preds.
    if (!chosen && rows.size() <= cols.size()) chosen = best_j;
    if (chosen) {
      pairing.pairs.emplace_back(i, *chosen);
      fixed += matrix.value(i, *chosen);
      cols = Without(cols, *chosen);
    }
    rows = std::move(rest_rows);
  }

  std::vector<char> gold_used(n, 0), pred_used(p, 0);
  for (const auto& [g, q] : pairing.pairs) {
    gold_used[g] = 1;
    pred_used[q] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!gold_used[i]) pairing.unmatched_gold.push_back(i);
  }
  for (std::size_t j = 0; j < p; ++j) {
    if (!pred_used[j]) pairing.unmatched_pred.push_back(j);
  }
  return pairing;
}

double PairingTotal(const SimilarityMatrix& matrix, const Pairing& pairing) {
  double total = 0.0;
  for (const auto& [g, q] : pairing.pairs) total += matrix.value(g, q);
  return total;
}

}  // namespace absa
