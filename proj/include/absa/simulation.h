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

// Boundary-variation simulation for FTS matching.
//
// The review text is "a1 a2 ... a50". Gold spans are "a1" .. "a1 ... a10";
// each is compared against
//   over by n:    gold extended by the next n tokens, 1 <= n <= 20
//   under by n:   gold minus its last n tokens,       1 <= n <= len-1
//   shifted by n: gold's window moved n tokens right,  1 <= n <= 10
// plus the identical span. Shifted windows that no longer overlap the gold
// span are left out unless requested, giving 300 cases in total.

#ifndef ABSA_SIMULATION_H_
#define ABSA_SIMULATION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absa/core_model.h"

namespace absa {

inline constexpr std::size_t kSimUniverseSize = 50;
inline constexpr std::size_t kSimMaxGoldLen = 10;
inline constexpr std::size_t kSimMaxOver = 20;
inline constexpr std::size_t kSimMaxShift = 10;

enum class SimScenario { kExact, kOver, kUnder, kShift };

std::string_view SimScenarioName(SimScenario scenario);

struct SimCase {
  SimScenario scenario = SimScenario::kExact;
  std::size_t gold_len = 0;
  // Variation magnitude; 0 for the exact case.
  std::size_t n = 0;
  std::string gold;
  std::string pred;
};

struct SimOptions {
  // Also emit shifts that leave no overlap with the gold span.
  bool include_disjoint_shifts = false;
};

// "a1 a2 ... a50".
std::string SimInputText();

std::vector<SimCase> GenerateCases(const SimOptions& options = {});

// Accepted variations for one (gold length, scenario) cell.
struct SimCell {
  std::size_t total = 0;     // N
  std::size_t accepted = 0;  // A
  // Smallest and largest accepted n, if any were accepted.
  std::optional<std::size_t> min_accepted;
  std::optional<std::size_t> max_accepted;
  // Accepted n values are exactly 1..max_accepted.
  bool downward_closed = true;

  double ratio() const {
    return total == 0 ? 0.0
                      : static_cast<double>(accepted) / static_cast<double>(total);
  }
  // "1-4", "1", or "-" when nothing was accepted.
  std::string RangeText() const;
};

// Variation scenarios, in table column order.
inline constexpr std::array<SimScenario, 3> kSimVariations = {
    SimScenario::kOver, SimScenario::kUnder, SimScenario::kShift};

struct SimRow {
  std::size_t gold_len = 0;
  double threshold = 0.0;
  // Indexed like kSimVariations.
  std::array<SimCell, 3> cells;
  // Whether the identical span was accepted.
  bool exact_accepted = false;
};

struct SimTable {
  std::vector<SimRow> rows;
  std::array<SimCell, 3> totals;
};

SimTable RunSimulation(const FtsConfig& config, const SimOptions& options = {});

// CSV with the columns of the published table plus a TOTAL row.
std::string SimTableToCsv(const SimTable& table);

// Reference acceptance table for the default configuration: per gold length
// and scenario the n-range text, N and A.
struct PublishedSimCell {
  std::string_view range;
  std::size_t total;
  std::size_t accepted;
};

struct PublishedSimRow {
  std::size_t gold_len;
  double threshold;
  std::array<PublishedSimCell, 3> cells;
};

const std::array<PublishedSimRow, kSimMaxGoldLen>& PublishedSimTable();
const std::array<PublishedSimCell, 3>& PublishedSimTotals();

// Human-readable differences from the published table; empty when they
// agree.
std::vector<std::string> CompareWithPublished(const SimTable& table);

}  // namespace absa

#endif  // ABSA_SIMULATION_H_
