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

// Line-delimited JSON corpora and JSON configuration files.
//
// One record per line:
//
//   {"id": "r1", "text": "It's loud but the pie is the best.", "task": "ASTE",
//    "units": [{"aspect": null, "opinion": "loud", "sentiment": "negative"}]}
//
// A prediction record may carry the unparsed model output instead of units:
//
//   {"id": "r1", "task": "ASTE", "raw": "[<asp>null</asp><opn>loud</opn>...]"}

#ifndef ABSA_CORPUS_IO_H_
#define ABSA_CORPUS_IO_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "absa/core_model.h"

namespace absa {

class CorpusError : public std::runtime_error {
 public:
  enum class Kind { kMissingFile, kIdMismatch, kSchema };

  CorpusError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct CorpusRecord {
  std::string id;
  std::optional<std::string> text;
  TaskKind task = TaskKind::kASQE;
  std::optional<std::vector<OpinionUnit>> units;
  std::optional<std::string> raw;
  // 1-based line in the source file; 0 when not read from a file.
  std::size_t line = 0;
};

// Throws CorpusError(kSchema) naming `line` and the offending field.
OpinionUnit UnitFromJson(const nlohmann::json& j, TaskKind task,
                         std::size_t line);
nlohmann::ordered_json UnitToJson(const OpinionUnit& unit);

CorpusRecord RecordFromJson(const nlohmann::json& j, std::size_t line);
nlohmann::ordered_json RecordToJson(const CorpusRecord& record);

// Blank lines are skipped. Ids must be unique per task within the file.
std::vector<CorpusRecord> ReadCorpus(std::istream& in);
std::vector<CorpusRecord> ReadCorpusFile(const std::string& path);

void WriteCorpus(std::ostream& out, const std::vector<CorpusRecord>& records);

struct JoinOptions {
  // Score gold entries without a prediction as empty predictions instead of
  // failing.
  bool allow_missing_preds = false;
};

// Pairs gold and prediction records of `task` by id, in gold order. Raw
// predictions are parsed here. Throws CorpusError(kIdMismatch) listing the
// unpaired ids.
std::vector<EvalEntry> JoinCorpora(const std::vector<CorpusRecord>& gold,
                                   const std::vector<CorpusRecord>& pred,
                                   TaskKind task, const JoinOptions& options = {});

// Overrides DefaultConfig() with the keys present in `j`. Unknown keys and
// invalid values throw CorpusError(kSchema).
FtsConfig ConfigFromJson(const nlohmann::json& j);
FtsConfig ReadConfigFile(const std::string& path);
nlohmann::ordered_json ConfigToJson(const FtsConfig& config);

// Projects every ASQE record onto `target`.
std::vector<CorpusRecord> ConvertCorpus(const std::vector<CorpusRecord>& asqe,
                                        TaskKind target);

}  // namespace absa

#endif  // ABSA_CORPUS_IO_H_
