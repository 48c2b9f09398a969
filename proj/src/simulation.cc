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

#include "absa/simulation.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "absa/textsim.h"

namespace absa {
namespace {

// Tokens a<first> .. a<first+len-1>, space separated.
std::string Window(std::size_t first, std::size_t len) {
  std::string out;
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) out += ' ';
    out += 'a';
    out += std::to_string(first + k);
  }
  return out;
}

std::size_t VariationIndex(SimScenario s) {
  switch (s) {
    case SimScenario::kOver:
      return 0;
    case SimScenario::kUnder:
      return 1;
    case SimScenario::kShift:
      return 2;
    case SimScenario::kExact:
      break;
  }
  return 3;
}

void Record(SimCell* cell, std::size_t n, bool accepted) {
  ++cell->total;
  if (!accepted) return;
  ++cell->accepted;
  if (!cell->min_accepted || n < *cell->min_accepted) cell->min_accepted = n;
  if (!cell->max_accepted || n > *cell->max_accepted) cell->max_accepted = n;
}

std::string FormatFixed(double value, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

std::string FormatThreshold(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

std::string_view SimScenarioName(SimScenario scenario) {
  switch (scenario) {
    case SimScenario::kExact:
      return "exact";
    case SimScenario::kOver:
      return "over";
    case SimScenario::kUnder:
      return "under";
    case SimScenario::kShift:
      return "shift";
  }
  return "unknown";
}

std::string SimInputText() { return Window(1, kSimUniverseSize); }

std::vector<SimCase> GenerateCases(const SimOptions& options) {
  std::vector<SimCase> cases;
  for (std::size_t len = 1; len <= kSimMaxGoldLen; ++len) {
    const std::string gold = Window(1, len);
    cases.push_back({SimScenario::kExact, len, 0, gold, gold});
    for (std::size_t n = 1; n <= kSimMaxOver; ++n) {
      cases.push_back({SimScenario::kOver, len, n, gold, Window(1, len + n)});
    }
    for (std::size_t n = 1; n < len; ++n) {
      cases.push_back({SimScenario::kUnder, len, n, gold, Window(1, len - n)});
    }
    std::size_t max_shift =
        options.include_disjoint_shifts ? kSimMaxShift : std::min(kSimMaxShift, len - 1);
    for (std::size_t n = 1; n <= max_shift; ++n) {
      cases.push_back({SimScenario::kShift, len, n, gold, Window(1 + n, len)});
    }
  }
  return cases;
}

std::string SimCell::RangeText() const {
  if (!max_accepted) return "-";
  if (*min_accepted == *max_accepted) return std::to_string(*min_accepted);
  return std::to_string(*min_accepted) + "-" + std::to_string(*max_accepted);
}

SimTable RunSimulation(const FtsConfig& config, const SimOptions& options) {
  const std::string input = SimInputText();
  SimTable table;
  for (std::size_t len = 1; len <= kSimMaxGoldLen; ++len) {
    SimRow row;
    row.gold_len = len;
    row.threshold = ThresholdFor(len, config);
    table.rows.push_back(row);
  }
  for (const SimCase& c : GenerateCases(options)) {
    FtsResult fts = FtsScore(c.gold, c.pred, input, config);
    bool accepted = fts.score > 0.0 && fts.score >= ThresholdFor(fts.gold_len, config);
    SimRow& row = table.rows[c.gold_len - 1];
    if (c.scenario == SimScenario::kExact) {
      row.exact_accepted = accepted;
      continue;
    }
    Record(&row.cells[VariationIndex(c.scenario)], c.n, accepted);
  }
  for (SimRow& row : table.rows) {
    for (std::size_t k = 0; k < row.cells.size(); ++k) {
      SimCell& cell = row.cells[k];
      cell.downward_closed = cell.accepted == cell.max_accepted.value_or(0) &&
                             cell.min_accepted.value_or(1) == 1;
      table.totals[k].total += cell.total;
      table.totals[k].accepted += cell.accepted;
    }
  }
  return table;
}

std::string SimTableToCsv(const SimTable& table) {
  std::ostringstream os;
  os << "Gold len,Threshold";
  for (std::string_view name : {"Over", "Under", "Shift"}) {
    os << ',' << name << " n-range," << name << " N," << name << " A," << name
       << " A/N";
  }
  os << '\n';
  for (const SimRow& row : table.rows) {
    os << row.gold_len << ',' << FormatThreshold(row.threshold);
    for (const SimCell& cell : row.cells) {
      os << ',' << cell.RangeText() << ',' << cell.total << ',' << cell.accepted
         << ',' << FormatFixed(cell.ratio(), 2);
    }
    os << '\n';
  }
  os << "TOTAL,-";
  for (const SimCell& cell : table.totals) {
    os << ",-," << cell.total << ',' << cell.accepted << ','
       << FormatFixed(cell.ratio(), 2);
  }
  os << '\n';
  return os.str();
}

const std::array<PublishedSimRow, kSimMaxGoldLen>& PublishedSimTable() {
  static const std::array<PublishedSimRow, kSimMaxGoldLen> kTable = {{
      {1, 0.5, {{{"1-2", 20, 2}, {"-", 0, 0}, {"-", 0, 0}}}},
      {2, 0.5, {{{"1-4", 20, 4}, {"1", 1, 1}, {"1", 1, 1}}}},
      {3, 0.6, {{{"1-4", 20, 4}, {"1", 2, 1}, {"1", 2, 1}}}},
      {4, 0.6, {{{"1-5", 20, 5}, {"1-2", 3, 2}, {"1", 3, 1}}}},
      {5, 0.7, {{{"1-4", 20, 4}, {"1-2", 4, 2}, {"1", 4, 1}}}},
      {6, 0.7, {{{"1-5", 20, 5}, {"1-2", 5, 2}, {"1", 5, 1}}}},
      {7, 0.7, {{{"1-6", 20, 6}, {"1-3", 6, 3}, {"1-2", 6, 2}}}},
      {8, 0.7, {{{"1-6", 20, 6}, {"1-3", 7, 3}, {"1-2", 7, 2}}}},
      {9, 0.7, {{{"1-7", 20, 7}, {"1-4", 8, 4}, {"1-2", 8, 2}}}},
      {10, 0.7, {{{"1-8", 20, 8}, {"1-4", 9, 4}, {"1-3", 9, 3}}}},
  }};
  return kTable;
}

const std::array<PublishedSimCell, 3>& PublishedSimTotals() {
  static const std::array<PublishedSimCell, 3> kTotals = {
      {{"-", 200, 51}, {"-", 45, 22}, {"-", 45, 14}}};
  return kTotals;
}

std::vector<std::string> CompareWithPublished(const SimTable& table) {
  std::vector<std::string> diffs;
  const auto& expected = PublishedSimTable();
  if (table.rows.size() != expected.size()) {
    diffs.push_back("row count " + std::to_string(table.rows.size()) +
                    " != " + std::to_string(expected.size()));
    return diffs;
  }
  auto check = [&diffs](const std::string& where, const SimCell& got,
                        const PublishedSimCell& want, bool with_range) {
    if (with_range && got.RangeText() != want.range) {
      diffs.push_back(where + " n-range " + got.RangeText() + " != " +
                      std::string(want.range));
    }
    if (got.total != want.total) {
      diffs.push_back(where + " N " + std::to_string(got.total) +
                      " != " + std::to_string(want.total));
    }
    if (got.accepted != want.accepted) {
      diffs.push_back(where + " A " + std::to_string(got.accepted) +
                      " != " + std::to_string(want.accepted));
    }
  };
  for (std::size_t r = 0; r < expected.size(); ++r) {
    const SimRow& row = table.rows[r];
    if (row.gold_len != expected[r].gold_len) {
      diffs.push_back("row " + std::to_string(r) + " has gold length " +
                      std::to_string(row.gold_len));
      continue;
    }
    if (row.threshold != expected[r].threshold) {
      diffs.push_back("gold len " + std::to_string(row.gold_len) +
                      " threshold " + FormatThreshold(row.threshold) + " != " +
                      FormatThreshold(expected[r].threshold));
    }
    for (std::size_t k = 0; k < kSimVariations.size(); ++k) {
      check("gold len " + std::to_string(row.gold_len) + " " +
                std::string(SimScenarioName(kSimVariations[k])),
            row.cells[k], expected[r].cells[k], true);
    }
  }
  for (std::size_t k = 0; k < kSimVariations.size(); ++k) {
    check("TOTAL " + std::string(SimScenarioName(kSimVariations[k])),
          table.totals[k], PublishedSimTotals()[k], false);
  }
  return diffs;
}

}  // namespace absa
