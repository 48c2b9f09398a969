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

// Optimal bipartite pairing of gold and predicted units.

#ifndef ABSA_PAIRING_H_
#define ABSA_PAIRING_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "absa/core_model.h"
#include "absa/textsim.h"

namespace absa {

// Comparison of one component between a gold and a predicted unit.
struct ComponentMatch {
  Component component = Component::kOpinion;
  // Raw similarity used for pairing: FTS for aspect/opinion, 1 / partial / 0
  // for category, 1 / 0 for sentiment.
  double score = 0.0;
  // Unit-level acceptance: FTS >= threshold, or exact label equality.
  bool matched = false;
  // Aspect and opinion only.
  std::optional<MatchCase> match_case;
  // Category only: the main labels agree.
  bool main_category_match = false;
};

struct UnitSimilarity {
  // Weighted mean of the component scores.
  double cell = 0.0;
  // One entry per task component, canonical order.
  std::vector<ComponentMatch> breakdown;
};

// Case-insensitive, whitespace-collapsed label comparison.
bool SameLabel(std::string_view a, std::string_view b);

UnitSimilarity ComputeUnitSimilarity(const OpinionUnit& gold,
                                     const OpinionUnit& pred,
                                     std::string_view input_text, TaskKind task,
                                     const FtsConfig& config);

// Row-major n x p matrix of unit similarities with per-cell breakdowns.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  static SimilarityMatrix Build(const std::vector<OpinionUnit>& gold,
                                const std::vector<OpinionUnit>& pred,
                                std::string_view input_text, TaskKind task,
                                const FtsConfig& config);

  // A matrix of bare cell values (no breakdowns).
  static SimilarityMatrix FromValues(
      const std::vector<std::vector<double>>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double value(std::size_t i, std::size_t j) const { return at(i, j).cell; }
  const UnitSimilarity& at(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }
  UnitSimilarity& at(std::size_t i, std::size_t j) {
    return cells_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UnitSimilarity> cells_;
};

struct Pairing {
  // (gold index, pred index), sorted by gold index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_gold;
  std::vector<std::size_t> unmatched_pred;
};

// Maximum-total-similarity one-to-one matching of size min(n, p). Among
// optimal matchings (totals equal within 1e-9 relative) the pair list that is
// lexicographically smallest by (gold, pred) index is returned.
Pairing OptimalAssignment(const SimilarityMatrix& matrix);

double PairingTotal(const SimilarityMatrix& matrix, const Pairing& pairing);

// Minimum-cost assignment for a rectangular cost matrix with rows <= cols;
// returns the column assigned to each row. Shortest augmenting paths with
// row/column potentials, O(rows^2 * cols).
std::vector<std::size_t> SolveMinCostAssignment(
    const std::vector<std::vector<double>>& cost);

}  // namespace absa

#endif  // ABSA_PAIRING_H_
