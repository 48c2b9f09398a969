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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "absa/corpus_io.h"

namespace absa {

using ojson = nlohmann::ordered_json;

std::vector<EntryEvalResult> EvaluateEntries(std::span<const EvalEntry> entries,
                                             const FtsConfig& config,
                                             std::size_t threads) {
  std::vector<EntryEvalResult> results(entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, entries.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      results[i] = EvaluateEntry(entries[i], config);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (!stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      try {
        results[i] = EvaluateEntry(entries[i], config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

namespace {

CorpusReport EmptyReport(TaskKind task, MetricFlavor flavor) {
  CorpusReport r;
  r.task = task;
  r.flavor = flavor;
  if (flavor == MetricFlavor::kFtsObp) {
    for (Component c : TaskComponents(task)) r.components.emplace_back(c, PrfScore{});
  }
  return r;
}

ojson PrfToJson(const PrfScore& s) {
  ojson j;
  j["precision"] = NumberToJson(s.precision);
  j["recall"] = NumberToJson(s.recall);
  j["f1"] = NumberToJson(s.f1);
  return j;
}

ojson EntryScoreToJson(const EntryScore& s) {
  ojson j;
  j["tp"] = s.counts.tp;
  j["fp"] = s.counts.fp;
  j["fn"] = s.counts.fn;
  j["precision"] = NumberToJson(s.prf.precision);
  j["recall"] = NumberToJson(s.prf.recall);
  j["f1"] = NumberToJson(s.prf.f1);
  j["excluded"] = s.excluded;
  return j;
}

ojson TallyToJson(const MatchCaseTally& tally) {
  ojson j;
  for (MatchCase c : kAllMatchCases) {
    ojson cell;
    cell["count"] = tally[c];
    cell["percentage"] = NumberToJson(tally.percentage(c));
    j[std::string(MatchCaseName(c))] = cell;
  }
  j["total"] = tally.total();
  return j;
}

ojson DiagnosticsToJson(const Diagnostics& d) {
  ojson j;
  ojson cases = ojson::object();
  for (const ComponentMatchCases& row : d.match_cases.components) {
    ojson c;
    c["accepted"] = TallyToJson(row.accepted);
    c["rejected"] = TallyToJson(row.rejected);
    cases[std::string(ComponentName(row.component))] = c;
  }
  j["match_cases"] = cases;

  ojson pairs = ojson::object();
  for (const ComponentPairStats& s : d.component_pairs) {
    ojson c;
    c["pairs"] = s.pairs;
    c["matched"] = s.matched;
    c["percentage"] = NumberToJson(s.percentage);
    pairs[std::string(ComponentName(s.component))] = c;
  }
  j["component_pairs"] = pairs;

  if (d.categories) {
    ojson rows = ojson::array();
    for (const CategoryRow& row : d.categories->rows) {
      ojson r;
      r["label"] = row.label;
      r["paired"] = row.paired;
      r["matched"] = row.matched;
      r["main_only"] = row.main_only;
      r["percentage"] = NumberToJson(row.percentage);
      rows.push_back(r);
    }
    j["categories"] = rows;
  }
  if (d.implicit_aspects) {
    ojson s;
    s["total"] = d.implicit_aspects->total;
    s["matched"] = d.implicit_aspects->matched;
    s["percentage"] = NumberToJson(d.implicit_aspects->percentage);
    j["implicit_aspects"] = s;
  }
  return j;
}

ojson PairToJson(const PairEvaluation& pe) {
  ojson j;
  j["gold"] = pe.gold;
  j["pred"] = pe.pred;
  j["similarity"] = NumberToJson(pe.similarity);
  j["unit_match"] = pe.unit_match;
  ojson comps = ojson::array();
  for (const ComponentMatch& m : pe.components) {
    ojson c;
    c["component"] = std::string(ComponentName(m.component));
    c["score"] = NumberToJson(m.score);
    c["matched"] = m.matched;
    if (m.match_case) c["match_case"] = std::string(MatchCaseName(*m.match_case));
    comps.push_back(c);
  }
  j["components"] = comps;
  return j;
}

ojson FtsEntryToJson(const EntryEvalResult& r) {
  ojson j;
  j["id"] = r.id;
  j["gold_count"] = r.gold_count;
  j["pred_count"] = r.pred_count;
  j["pred_parse_failed"] = r.pred_parse_failed;
  j["unit"] = EntryScoreToJson(r.unit);
  ojson comps = ojson::object();
  for (const ComponentScore& c : r.components) {
    comps[std::string(ComponentName(c.component))] = EntryScoreToJson(c.score);
  }
  j["components"] = comps;
  ojson pairs = ojson::array();
  for (const PairEvaluation& pe : r.pairs) pairs.push_back(PairToJson(pe));
  j["pairs"] = pairs;
  j["unmatched_gold"] = r.pairing.unmatched_gold;
  j["unmatched_pred"] = r.pairing.unmatched_pred;
  return j;
}

ojson FlavorToJson(const FlavorReport& f) {
  const CorpusReport& c = f.corpus;
  ojson j;
  j["metric"] = std::string(MetricFlavorName(c.flavor));
  j["entry_count"] = c.entry_count;
  j["scored_entry_count"] = c.scored_entry_count;
  j["parse_failures"] = c.parse_failures;
  j["macro"] = PrfToJson(c.unit);
  if (c.flavor == MetricFlavor::kFtsObp) {
    ojson comps = ojson::object();
    for (const auto& [component, prf] : c.components) {
      comps[std::string(ComponentName(component))] = PrfToJson(prf);
    }
    j["components"] = comps;
  }
  if (f.diagnostics) j["diagnostics"] = DiagnosticsToJson(*f.diagnostics);

  ojson entries = ojson::array();
  if (c.flavor == MetricFlavor::kFtsObp) {
    for (const EntryEvalResult& r : f.results) entries.push_back(FtsEntryToJson(r));
  } else {
    for (const EntrySummary& s : c.entries) {
      ojson e;
      e["id"] = s.id;
      e["pred_parse_failed"] = s.pred_parse_failed;
      e["unit"] = EntryScoreToJson(s.unit);
      entries.push_back(e);
    }
  }
  j["entries"] = entries;
  return j;
}

}  // namespace

EvaluationReport RunEvaluation(std::span<const EvalEntry> entries, TaskKind task,
                               const FtsConfig& config,
                               std::span<const MetricFlavor> flavors,
                               std::size_t threads) {
  config.Validate();
  EvaluationReport report;
  report.task = task;
  report.config = config;
  for (MetricFlavor flavor : flavors) {
    FlavorReport f;
    if (entries.empty()) {
      f.corpus = EmptyReport(task, flavor);
      if (flavor == MetricFlavor::kFtsObp) f.diagnostics = ComputeDiagnostics({}, config);
    } else if (flavor == MetricFlavor::kFtsObp) {
      f.results = EvaluateEntries(entries, config, threads);
      f.corpus = AggregateMacro(f.results);
      f.diagnostics = ComputeDiagnostics(f.results, config);
    } else {
      f.corpus = EvaluateExactCorpus(entries, config.degenerate_policy);
    }
    report.flavors.push_back(std::move(f));
  }
  return report;
}

nlohmann::ordered_json NumberToJson(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  double rounded = std::round(value * 1e6) / 1e6;
  // Avoid "-0.0" in the output.
  return rounded == 0.0 ? 0.0 : rounded;
}

nlohmann::ordered_json ReportToJson(const EvaluationReport& report) {
  ojson j;
  j["task"] = std::string(TaskName(report.task));
  j["config"] = ConfigToJson(report.config);
  ojson sections = ojson::array();
  for (const FlavorReport& f : report.flavors) sections.push_back(FlavorToJson(f));
  j["reports"] = sections;
  return j;
}

double MacroF1FromReport(const nlohmann::json& report,
                         std::optional<MetricFlavor> flavor) {
  if (!report.is_object() || !report.contains("reports") ||
      !report["reports"].is_array()) {
    throw std::invalid_argument("not an evaluation report");
  }
  for (const nlohmann::json& section : report["reports"]) {
    if (flavor && section.value("metric", "") != MetricFlavorName(*flavor)) continue;
    const nlohmann::json& f1 = section.at("macro").at("f1");
    if (!f1.is_number()) throw std::invalid_argument("macro f1 is not a number");
    return f1.get<double>();
  }
  throw std::invalid_argument(
      flavor ? "report has no " + std::string(MetricFlavorName(*flavor)) + " section"
             : std::string("report has no sections"));
}

nlohmann::ordered_json CorrelationToJson(const Correlation& correlation,
                                         const PairedDifference& difference) {
  ojson j;
  j["n"] = difference.n;
  j["pearson"] = NumberToJson(correlation.pearson);
  j["spearman"] = NumberToJson(correlation.spearman);
  j["mean_delta"] = NumberToJson(difference.mean_delta);
  j["std_delta"] = NumberToJson(difference.std_delta);
  j["t_statistic"] = NumberToJson(difference.t_statistic);
  j["cohens_d"] = NumberToJson(difference.cohens_d);
  return j;
}

}  // namespace absa
