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

// absa_eval: corpus evaluation, task conversion, simulation, correlation and
// prompt rendering.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absa/core_model.h"
#include "absa/corpus_io.h"
#include "absa/diagnostics.h"
#include "absa/report.h"
#include "absa/simulation.h"
#include "absa/strings.h"
#include "absa/tagged_format.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitMissingFile = 2;
constexpr int kExitIdMismatch = 3;
constexpr int kExitSchema = 4;

constexpr const char* kConfigEnv = "ABSA_EVAL_CONFIG";

int ExitCodeFor(const absa::CorpusError& e) {
  switch (e.kind()) {
    case absa::CorpusError::Kind::kMissingFile:
      return kExitMissingFile;
    case absa::CorpusError::Kind::kIdMismatch:
      return kExitIdMismatch;
    case absa::CorpusError::Kind::kSchema:
      break;
  }
  return kExitSchema;
}

absa::FtsConfig LoadConfig(const std::string& path) {
  if (!path.empty()) return absa::ReadConfigFile(path);
  const char* env = std::getenv(kConfigEnv);
  if (env != nullptr && *env != '\0') return absa::ReadConfigFile(env);
  return absa::DefaultConfig();
}

absa::TaskKind RequireTask(const std::string& name) {
  std::optional<absa::TaskKind> task = absa::ParseTaskKind(name);
  if (!task) throw CLI::ValidationError("--task", "unknown task '" + name + "'");
  return *task;
}

// Writes `text` to `path`, or to stdout when `path` is empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw absa::CorpusError(absa::CorpusError::Kind::kMissingFile,
                            "cannot write " + path);
  }
  out << text;
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw absa::CorpusError(absa::CorpusError::Kind::kMissingFile,
                            "cannot open " + path);
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw absa::CorpusError(absa::CorpusError::Kind::kSchema,
                            path + ": malformed JSON");
  }
  return j;
}

struct EvaluateArgs {
  std::string gold;
  std::string pred;
  std::string task;
  std::string config;
  std::string metric = "fts-obp";
  std::string out;
  bool allow_missing_preds = false;
  std::size_t threads = 0;
};

int RunEvaluate(const EvaluateArgs& args) {
  absa::TaskKind task = RequireTask(args.task);
  std::vector<absa::MetricFlavor> flavors;
  if (args.metric == "both") {
    flavors = {absa::MetricFlavor::kFtsObp, absa::MetricFlavor::kExact};
  } else {
    flavors = {*absa::ParseMetricFlavor(args.metric)};
  }
  absa::FtsConfig config = LoadConfig(args.config);
  std::vector<absa::CorpusRecord> gold = absa::ReadCorpusFile(args.gold);
  std::vector<absa::CorpusRecord> pred = absa::ReadCorpusFile(args.pred);
  std::vector<absa::EvalEntry> entries =
      absa::JoinCorpora(gold, pred, task, {args.allow_missing_preds});
  absa::EvaluationReport report =
      absa::RunEvaluation(entries, task, config, flavors, args.threads);
  Emit(args.out, absa::ReportToJson(report).dump(2) + "\n");
  return 0;
}

struct ConvertArgs {
  std::string input;
  std::vector<std::string> targets;
  std::string out_dir;
};

int RunConvert(const ConvertArgs& args) {
  std::vector<absa::TaskKind> targets;
  for (const std::string& t : args.targets) targets.push_back(RequireTask(t));
  std::vector<absa::CorpusRecord> asqe = absa::ReadCorpusFile(args.input);
  std::filesystem::path dir(args.out_dir);
  std::filesystem::create_directories(dir);
  std::string stem = std::filesystem::path(args.input).stem().string();
  for (absa::TaskKind target : targets) {
    std::vector<absa::CorpusRecord> converted = absa::ConvertCorpus(asqe, target);
    std::filesystem::path out =
        dir / (stem + "." + absa::ToLower(absa::TaskName(target)) + ".jsonl");
    std::ofstream os(out, std::ios::binary);
    if (!os) {
      throw absa::CorpusError(absa::CorpusError::Kind::kMissingFile,
                              "cannot write " + out.string());
    }
    absa::WriteCorpus(os, converted);
    std::cerr << "wrote " << out.string() << " (" << converted.size()
              << " records)\n";
  }
  return 0;
}

struct SimulateArgs {
  std::string config;
  std::string out;
  bool check = false;
  bool include_disjoint_shifts = false;
};

int RunSimulate(const SimulateArgs& args) {
  absa::FtsConfig config = LoadConfig(args.config);
  absa::SimTable table =
      absa::RunSimulation(config, {args.include_disjoint_shifts});
  Emit(args.out, absa::SimTableToCsv(table));
  if (!args.check) return 0;
  std::vector<std::string> diffs = absa::CompareWithPublished(table);
  for (const std::string& d : diffs) std::cerr << "mismatch: " << d << '\n';
  if (!diffs.empty()) return kExitMismatch;
  std::cerr << "simulation matches the reference table\n";
  return 0;
}

struct CorrelateArgs {
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::string flavor_a;
  std::string flavor_b;
  std::string out;
};

std::vector<double> MacroF1s(const std::vector<std::string>& paths,
                             const std::string& flavor) {
  std::optional<absa::MetricFlavor> f;
  if (!flavor.empty()) f = absa::ParseMetricFlavor(flavor);
  std::vector<double> values;
  for (const std::string& path : paths) {
    try {
      values.push_back(absa::MacroF1FromReport(ReadJsonFile(path), f));
    } catch (const std::invalid_argument& e) {
      throw absa::CorpusError(absa::CorpusError::Kind::kSchema,
                              path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw absa::CorpusError(absa::CorpusError::Kind::kSchema,
                              path + ": " + e.what());
    }
  }
  return values;
}

int RunCorrelate(const CorrelateArgs& args) {
  std::vector<double> a = MacroF1s(args.a, args.flavor_a);
  std::vector<double> b = MacroF1s(args.b, args.flavor_b);
  absa::Correlation c = absa::ComputeCorrelation(a, b);
  absa::PairedDifference d = absa::ComputePairedDifference(a, b);
  Emit(args.out, absa::CorrelationToJson(c, d).dump(2) + "\n");
  return 0;
}

struct PromptArgs {
  std::string task;
  int shots = 0;
  std::string out;
};

int RunPrompt(const PromptArgs& args) {
  Emit(args.out, absa::EmitPrompt(RequireTask(args.task), args.shots));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy-text-similarity evaluation for aspect-based sentiment corpora"};
  app.require_subcommand(1);
  const std::vector<std::string> kFlavors = {"fts-obp", "exact"};
  const std::vector<std::string> kMetrics = {"fts-obp", "exact", "both"};

  EvaluateArgs eval;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--gold", eval.gold, "Gold corpus (JSONL)")->required();
  evaluate->add_option("--pred", eval.pred, "Prediction corpus (JSONL)")->required();
  evaluate->add_option("--task", eval.task, "OE, AOPE, AOC, ASTE or ASQE")->required();
  evaluate->add_option("--config", eval.config,
                       std::string("Config file; defaults to $") + kConfigEnv);
  evaluate->add_option("--metric", eval.metric, "fts-obp, exact or both")
      ->check(CLI::IsMember(kMetrics));
  evaluate->add_option("--out", eval.out, "Report path; stdout when omitted");
  evaluate->add_flag("--allow-missing-preds", eval.allow_missing_preds,
                     "Score gold entries without a prediction as empty");
  evaluate->add_option("--threads", eval.threads, "Worker threads; 0 = all cores");

  ConvertArgs conv;
  CLI::App* convert = app.add_subcommand("convert", "Project ASQE gold onto subtasks");
  convert->add_option("--input", conv.input, "ASQE gold corpus")->required();
  convert->add_option("--targets", conv.targets, "Target tasks")->required();
  convert->add_option("--out-dir", conv.out_dir, "Output directory")->required();

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Boundary-variation simulation");
  simulate->add_option("--config", sim.config,
                       std::string("Config file; defaults to $") + kConfigEnv);
  simulate->add_option("--out", sim.out, "CSV path; stdout when omitted");
  simulate->add_flag("--check", sim.check, "Exit 1 unless the reference table is reproduced");
  simulate->add_flag("--include-disjoint-shifts", sim.include_disjoint_shifts,
                     "Also count shifts with no overlap");

  CorrelateArgs corr;
  CLI::App* correlate = app.add_subcommand("correlate", "Compare macro F1 across reports");
  correlate->add_option("--a", corr.a, "First report list")->required();
  correlate->add_option("--b", corr.b, "Second report list, aligned with --a")->required();
  correlate->add_option("--flavor-a", corr.flavor_a, "Metric section read from --a")
      ->check(CLI::IsMember(kFlavors));
  correlate->add_option("--flavor-b", corr.flavor_b, "Metric section read from --b")
      ->check(CLI::IsMember(kFlavors));
  correlate->add_option("--out", corr.out, "Output path; stdout when omitted");

  PromptArgs prompt;
  CLI::App* prompt_cmd = app.add_subcommand("prompt", "Render the instruction prompt");
  prompt_cmd->add_option("--task", prompt.task, "Task")->required();
  prompt_cmd->add_option("--shots", prompt.shots, "0 or 4")->check(CLI::IsMember({0, 4}));
  prompt_cmd->add_option("--out", prompt.out, "Output path; stdout when omitted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evaluate->parsed()) return RunEvaluate(eval);
    if (convert->parsed()) return RunConvert(conv);
    if (simulate->parsed()) return RunSimulate(sim);
    if (correlate->parsed()) return RunCorrelate(corr);
    if (prompt_cmd->parsed()) return RunPrompt(prompt);
  } catch (const absa::CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const absa::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return 0;
}
