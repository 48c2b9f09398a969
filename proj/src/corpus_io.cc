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

#include "absa/corpus_io.h"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "absa/strings.h"
#include "absa/tagged_format.h"

namespace absa {
namespace {

using json = nlohmann::json;

[[noreturn]] void SchemaError(std::size_t line, const std::string& what) {
  std::string msg = line > 0 ? "line " + std::to_string(line) + ": " : "";
  throw CorpusError(CorpusError::Kind::kSchema, msg + what);
}

const std::string& RequireString(const json& j, const char* key,
                                 std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) SchemaError(line, std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    SchemaError(line, std::string("field '") + key + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

}  // namespace

OpinionUnit UnitFromJson(const json& j, TaskKind task, std::size_t line) {
  if (!j.is_object()) SchemaError(line, "unit must be an object");
  OpinionUnit unit;
  for (const auto& [key, value] : j.items()) {
    std::optional<Component> c = ParseComponent(key);
    if (!c || key != ComponentName(*c)) {
      SchemaError(line, "unknown unit field '" + key + "'");
    }
    switch (*c) {
      case Component::kAspect:
        if (value.is_null()) {
          unit.aspect = AspectField::Implicit();
        } else if (value.is_string()) {
          unit.aspect = AspectField::FromText(value.get<std::string>());
        } else {
          SchemaError(line, "aspect must be a string or null");
        }
        break;
      case Component::kOpinion:
        if (!value.is_string()) SchemaError(line, "opinion must be a string");
        unit.opinion = value.get<std::string>();
        break;
      case Component::kCategory:
        if (!value.is_string()) SchemaError(line, "category must be a string");
        try {
          unit.category = CategoryLabel::Parse(value.get<std::string>());
        } catch (const ValidationError& e) {
          SchemaError(line, e.what());
        }
        break;
      case Component::kSentiment: {
        if (!value.is_string()) SchemaError(line, "sentiment must be a string");
        std::optional<Sentiment> s = ParseSentiment(value.get<std::string>());
        if (!s) {
          SchemaError(line, "unknown sentiment '" + value.get<std::string>() + "'");
        }
        unit.sentiment = *s;
        break;
      }
    }
  }
  if (TaskHasComponent(task, Component::kAspect) && !unit.aspect) {
    unit.aspect = AspectField::Implicit();
  }
  try {
    ValidateUnit(unit, task);
  } catch (const ValidationError& e) {
    SchemaError(line, e.what());
  }
  return unit;
}

nlohmann::ordered_json UnitToJson(const OpinionUnit& unit) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (unit.aspect) {
    if (unit.aspect->is_implicit()) {
      j["aspect"] = nullptr;
    } else {
      j["aspect"] = unit.aspect->span();
    }
  }
  if (unit.opinion) j["opinion"] = *unit.opinion;
  if (unit.category) j["category"] = unit.category->ToString();
  if (unit.sentiment) j["sentiment"] = std::string(SentimentName(*unit.sentiment));
  return j;
}

CorpusRecord RecordFromJson(const json& j, std::size_t line) {
  if (!j.is_object()) SchemaError(line, "record must be a JSON object");
  static const std::set<std::string> kKnown = {"id", "text", "task", "units", "raw"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) SchemaError(line, "unknown record field '" + key + "'");
  }
  CorpusRecord r;
  r.line = line;
  r.id = RequireString(j, "id", line);
  const std::string& task_name = RequireString(j, "task", line);
  std::optional<TaskKind> task = ParseTaskKind(task_name);
  if (!task) SchemaError(line, "unknown task '" + task_name + "'");
  r.task = *task;
  if (j.contains("text")) r.text = RequireString(j, "text", line);

  bool has_units = j.contains("units");
  bool has_raw = j.contains("raw");
  if (has_units == has_raw) {
    SchemaError(line, "record needs exactly one of 'units' and 'raw'");
  }
  if (has_raw) {
    r.raw = RequireString(j, "raw", line);
  } else {
    const json& units = j.at("units");
    if (!units.is_array()) SchemaError(line, "'units' must be an array");
    r.units.emplace();
    for (const json& u : units) r.units->push_back(UnitFromJson(u, r.task, line));
  }
  return r;
}

nlohmann::ordered_json RecordToJson(const CorpusRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.id;
  if (record.text) j["text"] = *record.text;
  j["task"] = std::string(TaskName(record.task));
  if (record.units) {
    nlohmann::ordered_json units = nlohmann::ordered_json::array();
    for (const OpinionUnit& u : *record.units) units.push_back(UnitToJson(u));
    j["units"] = std::move(units);
  }
  if (record.raw) j["raw"] = *record.raw;
  return j;
}

std::vector<CorpusRecord> ReadCorpus(std::istream& in) {
  std::vector<CorpusRecord> records;
  std::set<std::pair<TaskKind, std::string>> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (Trim(text).empty()) continue;
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) SchemaError(line, "malformed JSON");
    CorpusRecord r = RecordFromJson(j, line);
    if (!seen.emplace(r.task, r.id).second) {
      SchemaError(line, "duplicate id '" + r.id + "' for task " +
                            std::string(TaskName(r.task)));
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<CorpusRecord> ReadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CorpusError(CorpusError::Kind::kMissingFile, "cannot open " + path);
  }
  try {
    return ReadCorpus(in);
  } catch (const CorpusError& e) {
    throw CorpusError(e.kind(), path + ": " + e.what());
  }
}

void WriteCorpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& r : records) out << RecordToJson(r).dump() << '\n';
}

std::vector<EvalEntry> JoinCorpora(const std::vector<CorpusRecord>& gold,
                                   const std::vector<CorpusRecord>& pred,
                                   TaskKind task, const JoinOptions& options) {
  std::map<std::string, const CorpusRecord*> preds;
  for (const CorpusRecord& r : pred) {
    if (r.task == task) preds.emplace(r.id, &r);
  }

  std::vector<EvalEntry> entries;
  std::set<std::string> gold_ids;
  std::vector<std::string> missing_preds;
  for (const CorpusRecord& g : gold) {
    if (g.task != task) continue;
    if (!g.units) SchemaError(g.line, "gold record '" + g.id + "' has no units");
    if (!g.text) SchemaError(g.line, "gold record '" + g.id + "' has no text");
    gold_ids.insert(g.id);

    EvalEntry e;
    e.id = g.id;
    e.text = *g.text;
    e.task = task;
    e.gold = *g.units;
    auto it = preds.find(g.id);
    if (it == preds.end()) {
      missing_preds.push_back(g.id);
    } else if (it->second->raw) {
      ParsedOutput parsed = ParseOutput(*it->second->raw, task);
      e.pred = std::move(parsed.units);
      e.pred_parse_failed = parsed.failed;
      if (e.pred_parse_failed) e.pred.clear();
    } else {
      e.pred = *it->second->units;
    }
    entries.push_back(std::move(e));
  }

  std::vector<std::string> orphan_preds;
  for (const auto& [id, record] : preds) {
    if (!gold_ids.contains(id)) orphan_preds.push_back(id);
  }
  if (!orphan_preds.empty() ||
      (!missing_preds.empty() && !options.allow_missing_preds)) {
    std::string msg = "gold/pred id mismatch for task " + std::string(TaskName(task));
    auto list = [&msg](const char* label, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string("; ") + label + ":";
      for (const std::string& id : ids) msg += " " + id;
    };
    list("predictions without gold", orphan_preds);
    if (!options.allow_missing_preds) list("gold without predictions", missing_preds);
    throw CorpusError(CorpusError::Kind::kIdMismatch, msg);
  }
  return entries;
}

FtsConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) SchemaError(0, "config must be a JSON object");
  FtsConfig config = DefaultConfig();
  for (const auto& [key, value] : j.items()) {
    if (key == "stopwords") {
      if (!value.is_array()) SchemaError(0, "stopwords must be an array");
      config.stopwords.clear();
      for (const json& w : value) {
        if (!w.is_string()) SchemaError(0, "stopwords must be strings");
        config.stopwords.insert(ToLower(w.get<std::string>()));
      }
    } else if (key == "threshold_schedule") {
      if (!value.is_array()) SchemaError(0, "threshold_schedule must be an array");
      config.threshold_schedule.clear();
      for (const json& band : value) {
        if (!band.is_object() || !band.contains("threshold") ||
            !band.at("threshold").is_number()) {
          SchemaError(0, "threshold band needs a numeric 'threshold'");
        }
        for (const auto& [bkey, bvalue] : band.items()) {
          if (bkey != "threshold" && bkey != "max_gold_len") {
            SchemaError(0, "unknown threshold band field '" + bkey + "'");
          }
        }
        ThresholdBand b;
        b.threshold = band.at("threshold").get<double>();
        if (band.contains("max_gold_len") && !band.at("max_gold_len").is_null()) {
          if (!band.at("max_gold_len").is_number_unsigned()) {
            SchemaError(0, "max_gold_len must be a non-negative integer or null");
          }
          b.max_gold_len = band.at("max_gold_len").get<std::size_t>();
        }
        config.threshold_schedule.push_back(b);
      }
    } else if (key == "partial_main_category_score") {
      if (!value.is_number()) SchemaError(0, key + " must be a number");
      config.partial_main_category_score = value.get<double>();
    } else if (key == "component_weights") {
      if (!value.is_object()) SchemaError(0, "component_weights must be an object");
      for (const auto& [name, w] : value.items()) {
        std::optional<Component> c = ParseComponent(name);
        if (!c || name != ComponentName(*c)) {
          SchemaError(0, "unknown component '" + name + "'");
        }
        if (!w.is_number()) SchemaError(0, "component weight must be a number");
        config.component_weights[static_cast<std::size_t>(*c)] = w.get<double>();
      }
    } else if (key == "degenerate_entry_policy") {
      if (!value.is_string()) SchemaError(0, key + " must be a string");
      std::optional<DegeneratePolicy> p = ParseDegeneratePolicy(value.get<std::string>());
      if (!p) SchemaError(0, "unknown degenerate_entry_policy");
      config.degenerate_policy = *p;
    } else if (key == "diagnostics_include_unmatched") {
      if (!value.is_boolean()) SchemaError(0, key + " must be a boolean");
      config.diagnostics_include_unmatched = value.get<bool>();
    } else {
      SchemaError(0, "unknown config key '" + key + "'");
    }
  }
  try {
    config.Validate();
  } catch (const ValidationError& e) {
    SchemaError(0, e.what());
  }
  return config;
}

FtsConfig ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CorpusError(CorpusError::Kind::kMissingFile, "cannot open " + path);
  }
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) SchemaError(0, path + ": malformed JSON");
  try {
    return ConfigFromJson(j);
  } catch (const CorpusError& e) {
    throw CorpusError(e.kind(), path + ": " + e.what());
  }
}

nlohmann::ordered_json ConfigToJson(const FtsConfig& config) {
  nlohmann::ordered_json j;
  j["stopwords"] = config.stopwords;
  nlohmann::ordered_json bands = nlohmann::ordered_json::array();
  for (const ThresholdBand& b : config.threshold_schedule) {
    nlohmann::ordered_json band;
    if (b.max_gold_len) {
      band["max_gold_len"] = *b.max_gold_len;
    } else {
      band["max_gold_len"] = nullptr;
    }
    band["threshold"] = b.threshold;
    bands.push_back(band);
  }
  j["threshold_schedule"] = bands;
  j["partial_main_category_score"] = config.partial_main_category_score;
  nlohmann::ordered_json weights;
  for (Component c : kAllComponents) {
    weights[std::string(ComponentName(c))] = config.weight(c);
  }
  j["component_weights"] = weights;
  j["degenerate_entry_policy"] = std::string(DegeneratePolicyName(config.degenerate_policy));
  j["diagnostics_include_unmatched"] = config.diagnostics_include_unmatched;
  return j;
}

std::vector<CorpusRecord> ConvertCorpus(const std::vector<CorpusRecord>& asqe,
                                        TaskKind target) {
  std::vector<CorpusRecord> out;
  for (const CorpusRecord& r : asqe) {
    if (r.task != TaskKind::kASQE) {
      SchemaError(r.line, "record '" + r.id + "' is not an ASQE record");
    }
    if (!r.units) SchemaError(r.line, "record '" + r.id + "' has no units");
    CorpusRecord c = r;
    c.task = target;
    c.units = DeriveSubtaskGold(*r.units, target);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace absa
