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

// Corpus-level evaluation runs and their JSON reports.

#ifndef ABSA_REPORT_H_
#define ABSA_REPORT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "absa/core_model.h"
#include "absa/diagnostics.h"
#include "absa/scoring.h"

namespace absa {

// Evaluates every entry, fanning out over `threads` workers (0 picks the
// hardware concurrency, 1 runs inline). Results keep the input order. The
// first exception thrown by a worker is rethrown here.
std::vector<EntryEvalResult> EvaluateEntries(std::span<const EvalEntry> entries,
                                             const FtsConfig& config,
                                             std::size_t threads = 0);

struct FlavorReport {
  CorpusReport corpus;
  // FTS-OBP only.
  std::optional<Diagnostics> diagnostics;
  std::vector<EntryEvalResult> results;
};

struct EvaluationReport {
  TaskKind task = TaskKind::kASQE;
  FtsConfig config;
  std::vector<FlavorReport> flavors;
};

// An empty entry list yields all-zero metrics.
EvaluationReport RunEvaluation(std::span<const EvalEntry> entries, TaskKind task,
                               const FtsConfig& config,
                               std::span<const MetricFlavor> flavors,
                               std::size_t threads = 0);

// Rounds to 6 decimals; non-finite values become "inf", "-inf" or "nan".
nlohmann::ordered_json NumberToJson(double value);

nlohmann::ordered_json ReportToJson(const EvaluationReport& report);

// Macro unit F1 of the `flavor` section of a serialized report, or of its
// first section when no flavor is given. Throws std::invalid_argument if the
// report has no such section.
double MacroF1FromReport(const nlohmann::json& report,
                         std::optional<MetricFlavor> flavor = std::nullopt);

nlohmann::ordered_json CorrelationToJson(const Correlation& correlation,
                                         const PairedDifference& difference);

}  // namespace absa

#endif  // ABSA_REPORT_H_
