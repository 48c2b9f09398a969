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

#include "absa/report.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "testing.h"

namespace absa {
namespace {

std::vector<EvalEntry> RandomCorpus(TaskKind task, int n, std::uint64_t seed) {
  testing::CorpusGenerator gen(seed);
  std::vector<EvalEntry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back(testing::ToEvalEntry(gen.Entry(task), task, "r" + std::to_string(i)));
  }
  return entries;
}

TEST(EvaluateEntriesTest, ThreadedMatchesSerial) {
  std::vector<EvalEntry> entries = RandomCorpus(TaskKind::kASQE, 120, 3);
  FtsConfig c = DefaultConfig();
  std::vector<EntryEvalResult> serial = EvaluateEntries(entries, c, 1);
  std::vector<EntryEvalResult> threaded = EvaluateEntries(entries, c, 4);
  ASSERT_EQ(serial.size(), threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, threaded[i].id);
    EXPECT_EQ(serial[i].unit.counts, threaded[i].unit.counts);
    EXPECT_EQ(serial[i].pairing.pairs, threaded[i].pairing.pairs);
  }
}

TEST(EvaluateEntriesTest, RethrowsWorkerErrors) {
  std::vector<EvalEntry> entries = RandomCorpus(TaskKind::kOE, 20, 4);
  entries[7].gold.push_back(testing::Pair("x", "y"));
  EXPECT_THROW(EvaluateEntries(entries, DefaultConfig(), 3), ValidationError);
  EXPECT_THROW(EvaluateEntries(entries, DefaultConfig(), 1), ValidationError);
}

TEST(NumberToJsonTest, RoundsAndMarksNonFinite) {
  EXPECT_EQ(NumberToJson(2.0 / 3.0).dump(), "0.666667");
  EXPECT_EQ(NumberToJson(1.0).dump(), "1.0");
  EXPECT_EQ(NumberToJson(-1e-9).dump(), "0.0");
  EXPECT_EQ(NumberToJson(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(NumberToJson(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(NumberToJson(std::nan("")), "nan");
}

TEST(RunEvaluationTest, BothFlavorsAgreeOnEntryCounts) {
  std::vector<EvalEntry> entries = RandomCorpus(TaskKind::kASTE, 40, 5);
  const MetricFlavor both[] = {MetricFlavor::kFtsObp, MetricFlavor::kExact};
  EvaluationReport r = RunEvaluation(entries, TaskKind::kASTE, DefaultConfig(), both, 2);
  ASSERT_EQ(r.flavors.size(), 2u);
  EXPECT_EQ(r.flavors[0].corpus.entry_count, r.flavors[1].corpus.entry_count);
  EXPECT_TRUE(r.flavors[0].diagnostics.has_value());
  EXPECT_FALSE(r.flavors[1].diagnostics.has_value());

  nlohmann::ordered_json j = ReportToJson(r);
  EXPECT_EQ(j["task"], "ASTE");
  EXPECT_EQ(j["reports"][0]["metric"], "fts-obp");
  EXPECT_EQ(j["reports"][1]["metric"], "exact");
  EXPECT_EQ(j["reports"][0]["entries"].size(), 40u);
  EXPECT_TRUE(j["reports"][0].contains("components"));
  EXPECT_TRUE(j["reports"][0]["diagnostics"].contains("match_cases"));
  EXPECT_TRUE(j["config"].contains("threshold_schedule"));
}

TEST(RunEvaluationTest, Deterministic) {
  std::vector<EvalEntry> entries = RandomCorpus(TaskKind::kASQE, 60, 6);
  const MetricFlavor both[] = {MetricFlavor::kFtsObp, MetricFlavor::kExact};
  std::string a =
      ReportToJson(RunEvaluation(entries, TaskKind::kASQE, DefaultConfig(), both, 1)).dump();
  std::string b =
      ReportToJson(RunEvaluation(entries, TaskKind::kASQE, DefaultConfig(), both, 4)).dump();
  EXPECT_EQ(a, b);
}

TEST(RunEvaluationTest, EmptyCorpus) {
  const MetricFlavor fts[] = {MetricFlavor::kFtsObp};
  EvaluationReport r = RunEvaluation({}, TaskKind::kOE, DefaultConfig(), fts);
  EXPECT_EQ(r.flavors[0].corpus.entry_count, 0u);
  EXPECT_EQ(r.flavors[0].corpus.unit.f1, 0.0);
  EXPECT_EQ(r.flavors[0].corpus.components.size(), 1u);
}

TEST(MacroF1FromReportTest, PicksSection) {
  nlohmann::json j = nlohmann::json::parse(R"({"reports": [
      {"metric": "fts-obp", "macro": {"f1": 0.9}},
      {"metric": "exact", "macro": {"f1": 0.4}}]})");
  EXPECT_EQ(MacroF1FromReport(j), 0.9);
  EXPECT_EQ(MacroF1FromReport(j, MetricFlavor::kExact), 0.4);
  EXPECT_THROW(MacroF1FromReport(nlohmann::json::parse(R"({"reports": []})")),
               std::invalid_argument);
  EXPECT_THROW(MacroF1FromReport(nlohmann::json::parse("{}")), std::invalid_argument);
}

}  // namespace
}  // namespace absa
