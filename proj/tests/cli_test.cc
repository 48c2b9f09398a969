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


// Runs the absa_eval binary end to end on the fixture corpora.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "absa/core_model.h"
#include "absa/corpus_io.h"
#include "absa/tagged_format.h"

namespace absa {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded.
RunResult RunCli(const std::string& args) {
  std::string cmd = std::string(ABSA_EVAL_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Fixture(const std::string& name) {
  return std::string(ABSA_FIXTURE_DIR) + "/" + name;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("absa_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void Write(const std::string& name, const std::string& content) const {
    std::ofstream(dir_ / name, std::ios::binary) << content;
  }

  std::string Evaluate(const std::string& extra) const {
    return "evaluate --gold " + Fixture("reviews.asqe.jsonl") + " --pred " +
           Fixture("reviews.pred.jsonl") + " --task ASQE " + extra;
  }

  fs::path dir_;
};

TEST_F(CliTest, EvaluateBothMetrics) {
  RunResult r = RunCli(Evaluate("--metric both"));
  ASSERT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["task"], "ASQE");
  ASSERT_EQ(j["reports"].size(), 2u);
  const nlohmann::json& fts = j["reports"][0];
  const nlohmann::json& exact = j["reports"][1];
  EXPECT_EQ(fts["metric"], "fts-obp");
  EXPECT_EQ(exact["metric"], "exact");
  EXPECT_EQ(fts["entry_count"], 6);
  EXPECT_EQ(fts["parse_failures"], 1);
  EXPECT_GE(fts["macro"]["f1"].get<double>(), exact["macro"]["f1"].get<double>());
  // r1 holds the "the best" / "best" pair.
  EXPECT_EQ(fts["entries"][0]["id"], "r1");
  EXPECT_EQ(fts["entries"][0]["unit"]["tp"], 2);
  EXPECT_EQ(exact["entries"][0]["unit"]["tp"], 1);
  // The unparseable prediction is scored as an empty list.
  EXPECT_EQ(fts["entries"][5]["pred_parse_failed"], true);
  EXPECT_EQ(fts["entries"][5]["unit"]["fn"], 1);
  EXPECT_TRUE(fts["components"].contains("category"));
}

TEST_F(CliTest, ReportsAreByteIdenticalAcrossRunsAndThreads) {
  ASSERT_EQ(RunCli(Evaluate("--metric both --threads 1 --out " + Path("a.json"))).exit_code, 0);
  ASSERT_EQ(RunCli(Evaluate("--metric both --threads 4 --out " + Path("b.json"))).exit_code, 0);
  std::string a = Slurp(Path("a.json"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, Slurp(Path("b.json")));
}

TEST_F(CliTest, EvaluateExitCodes) {
  EXPECT_EQ(RunCli("evaluate --gold " + Path("nope.jsonl") + " --pred " +
                Fixture("reviews.pred.jsonl") + " --task ASQE")
                .exit_code,
            2);
  // A prediction with no gold record.
  Write("extra.jsonl", Slurp(Fixture("reviews.pred.jsonl")) +
                           "{\"id\": \"r9\", \"task\": \"ASQE\", \"units\": []}\n");
  EXPECT_EQ(RunCli("evaluate --gold " + Fixture("reviews.asqe.jsonl") + " --pred " +
                Path("extra.jsonl") + " --task ASQE")
                .exit_code,
            3);
  Write("bad.jsonl", "{\"id\": \"r1\", \"task\": \"ASQE\", \"units\": [{\"opinion\": 3}]}\n");
  EXPECT_EQ(RunCli("evaluate --gold " + Fixture("reviews.asqe.jsonl") + " --pred " +
                Path("bad.jsonl") + " --task ASQE")
                .exit_code,
            4);
  Write("typo.json", "{\"stopword\": []}");
  EXPECT_EQ(RunCli(Evaluate("--config " + Path("typo.json"))).exit_code, 4);
}

TEST_F(CliTest, MissingPredsCanBeAllowed) {
  Write("one.jsonl", "{\"id\": \"r1\", \"task\": \"ASQE\", \"units\": []}\n");
  std::string base = "evaluate --gold " + Fixture("reviews.asqe.jsonl") + " --pred " +
                     Path("one.jsonl") + " --task ASQE";
  EXPECT_EQ(RunCli(base).exit_code, 3);
  RunResult r = RunCli(base + " --allow-missing-preds");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["reports"][0]["entry_count"], 6);
}

TEST_F(CliTest, ConfigFromEnvironment) {
  RunResult plain = RunCli(Evaluate("--metric fts-obp"));
  std::string cmd = Evaluate("--metric fts-obp");
  setenv("ABSA_EVAL_CONFIG", Fixture("strict.config.json").c_str(), 1);
  RunResult strict = RunCli(cmd);
  unsetenv("ABSA_EVAL_CONFIG");
  ASSERT_EQ(plain.exit_code, 0);
  ASSERT_EQ(strict.exit_code, 0);
  nlohmann::json p = nlohmann::json::parse(plain.out);
  nlohmann::json s = nlohmann::json::parse(strict.out);
  EXPECT_EQ(s["config"]["partial_main_category_score"], 0.0);
  EXPECT_LT(s["reports"][0]["macro"]["f1"].get<double>(),
            p["reports"][0]["macro"]["f1"].get<double>());
}

TEST_F(CliTest, ConvertWritesOneFilePerTarget) {
  ASSERT_EQ(RunCli("convert --input " + Fixture("reviews.asqe.jsonl") +
                " --targets OE ASTE ASQE --out-dir " + Path("out"))
                .exit_code,
            0);
  std::vector<CorpusRecord> gold = ReadCorpusFile(Fixture("reviews.asqe.jsonl"));
  std::vector<CorpusRecord> oe = ReadCorpusFile(Path("out/reviews.asqe.oe.jsonl"));
  std::vector<CorpusRecord> aste = ReadCorpusFile(Path("out/reviews.asqe.aste.jsonl"));
  std::vector<CorpusRecord> asqe = ReadCorpusFile(Path("out/reviews.asqe.asqe.jsonl"));
  ASSERT_EQ(oe.size(), gold.size());
  ASSERT_EQ(aste.size(), gold.size());
  ASSERT_EQ(asqe.size(), gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    EXPECT_EQ(oe[i].task, TaskKind::kOE);
    EXPECT_EQ(*oe[i].units, DeriveSubtaskGold(*gold[i].units, TaskKind::kOE));
    EXPECT_EQ(*aste[i].units, DeriveSubtaskGold(*gold[i].units, TaskKind::kASTE));
    EXPECT_EQ(*asqe[i].units, *gold[i].units);
    EXPECT_EQ(asqe[i].text, gold[i].text);
  }
  // An unknown task is a usage error.
  int rc = RunCli("convert --input " + Fixture("reviews.asqe.jsonl") +
                  " --targets XYZ --out-dir " + Path("out"))
               .exit_code;
  EXPECT_NE(rc, 0);
  EXPECT_NE(rc, 4);
}

TEST_F(CliTest, SimulateCheck) {
  RunResult ok = RunCli("simulate --check");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.out.find("TOTAL,-,-,200,51,0.26,-,45,22,0.49,-,45,14,0.31"),
            std::string::npos);
  EXPECT_EQ(RunCli("simulate --check --config " + Fixture("strict.config.json")).exit_code, 1);
  EXPECT_EQ(RunCli("simulate --check --include-disjoint-shifts").exit_code, 1);
}

TEST_F(CliTest, Correlate) {
  ASSERT_EQ(RunCli(Evaluate("--metric both --out " + Path("r1.json"))).exit_code, 0);
  ASSERT_EQ(RunCli("evaluate --gold " + Fixture("best.gold.jsonl") + " --pred " +
                Fixture("best.pred.jsonl") + " --task ASQE --metric both --out " +
                Path("r2.json"))
                .exit_code,
            0);
  Write("strict.json", Slurp(Fixture("strict.config.json")));
  ASSERT_EQ(RunCli(Evaluate("--metric both --config " + Path("strict.json") +
                         " --out " + Path("r3.json")))
                .exit_code,
            0);
  std::string reports = Path("r1.json") + " " + Path("r2.json") + " " + Path("r3.json");
  RunResult same = RunCli("correlate --a " + reports + " --b " + reports);
  ASSERT_EQ(same.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(same.out);
  EXPECT_DOUBLE_EQ(j["pearson"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["spearman"].get<double>(), 1.0);
  EXPECT_EQ(j["mean_delta"].get<double>(), 0.0);

  RunResult flavors = RunCli("correlate --a " + reports + " --b " + reports +
                          " --flavor-a fts-obp --flavor-b exact");
  ASSERT_EQ(flavors.exit_code, 0);
  EXPECT_GT(nlohmann::json::parse(flavors.out)["mean_delta"].get<double>(), 0.0);

  EXPECT_NE(RunCli("correlate --a " + Path("r1.json") + " --b " + Path("r1.json")).exit_code, 0);
  EXPECT_EQ(RunCli("correlate --a " + Path("r1.json") + " " + Path("r2.json") +
                " --b " + Path("r1.json") + " " + Fixture("best.gold.jsonl"))
                .exit_code,
            4);
}

TEST_F(CliTest, Prompt) {
  RunResult r = RunCli("prompt --task ASQE --shots 4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, EmitPrompt(TaskKind::kASQE, 4));
  EXPECT_EQ(RunCli("prompt --task OE").out, EmitPrompt(TaskKind::kOE, 0));
  EXPECT_NE(RunCli("prompt --task ASQE --shots 2").exit_code, 0);
}

}  // namespace
}  // namespace absa
