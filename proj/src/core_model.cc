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

#include "absa/core_model.h"

#include <cmath>

#include "absa/strings.h"

namespace absa {
namespace {

constexpr std::array<Component, 1> kOeComponents = {Component::kOpinion};
constexpr std::array<Component, 2> kAopeComponents = {Component::kAspect,
                                                      Component::kOpinion};
constexpr std::array<Component, 3> kAocComponents = {
    Component::kAspect, Component::kOpinion, Component::kCategory};
constexpr std::array<Component, 3> kAsteComponents = {
    Component::kAspect, Component::kOpinion, Component::kSentiment};

}  // namespace

std::string_view ComponentName(Component component) {
  switch (component) {
    case Component::kAspect:
      return "aspect";
    case Component::kOpinion:
      return "opinion";
    case Component::kCategory:
      return "category";
    case Component::kSentiment:
      return "sentiment";
  }
  return "unknown";
}

std::optional<Component> ParseComponent(std::string_view name) {
  for (Component c : kAllComponents) {
    if (EqualsIgnoreCase(name, ComponentName(c))) return c;
  }
  return std::nullopt;
}

std::string_view TaskName(TaskKind task) {
  switch (task) {
    case TaskKind::kOE:
      return "OE";
    case TaskKind::kAOPE:
      return "AOPE";
    case TaskKind::kAOC:
      return "AOC";
    case TaskKind::kASTE:
      return "ASTE";
    case TaskKind::kASQE:
      return "ASQE";
  }
  return "unknown";
}

std::optional<TaskKind> ParseTaskKind(std::string_view name) {
  name = Trim(name);
  for (TaskKind t : kAllTasks) {
    if (EqualsIgnoreCase(name, TaskName(t))) return t;
  }
  return std::nullopt;
}

std::span<const Component> TaskComponents(TaskKind task) {
  switch (task) {
    case TaskKind::kOE:
      return kOeComponents;
    case TaskKind::kAOPE:
      return kAopeComponents;
    case TaskKind::kAOC:
      return kAocComponents;
    case TaskKind::kASTE:
      return kAsteComponents;
    case TaskKind::kASQE:
      return kAllComponents;
  }
  return {};
}

bool TaskHasComponent(TaskKind task, Component component) {
  for (Component c : TaskComponents(task)) {
    if (c == component) return true;
  }
  return false;
}

AspectField AspectField::Explicit(std::string span) {
  std::string_view trimmed = Trim(span);
  if (trimmed.empty()) {
    throw ValidationError("explicit aspect span is blank");
  }
  if (EqualsIgnoreCase(trimmed, "null")) {
    throw ValidationError("\"null\" denotes an implicit aspect, not a span");
  }
  return AspectField(std::move(span));
}

AspectField AspectField::FromText(std::string_view text) {
  std::string_view trimmed = Trim(text);
  if (trimmed.empty() || EqualsIgnoreCase(trimmed, "null")) return Implicit();
  return AspectField(std::string(trimmed));
}

const std::string& AspectField::span() const {
  static const std::string kEmpty;
  return span_ ? *span_ : kEmpty;
}

std::string AspectField::ToString() const {
  return span_ ? *span_ : std::string("null");
}

CategoryLabel CategoryLabel::Parse(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw ValidationError("category label is blank");
  if (text.starts_with("- ") || text.ends_with(" -")) {
    throw ValidationError("category label has a blank half: " + std::string(text));
  }
  CategoryLabel label;
  std::size_t sep = text.find(" - ");
  if (sep == std::string_view::npos) {
    label.main = std::string(text);
    return label;
  }
  label.main = std::string(Trim(text.substr(0, sep)));
  label.sub = std::string(Trim(text.substr(sep + 3)));
  if (label.main.empty() || label.sub->empty()) {
    throw ValidationError("category label has a blank half: " +
                          std::string(text));
  }
  return label;
}

std::string CategoryLabel::ToString() const {
  return sub ? main + " - " + *sub : main;
}

std::string_view SentimentName(Sentiment sentiment) {
  switch (sentiment) {
    case Sentiment::kPositive:
      return "positive";
    case Sentiment::kNeutral:
      return "neutral";
    case Sentiment::kNegative:
      return "negative";
  }
  return "unknown";
}

std::optional<Sentiment> ParseSentiment(std::string_view text) {
  text = Trim(text);
  for (Sentiment s :
       {Sentiment::kPositive, Sentiment::kNeutral, Sentiment::kNegative}) {
    if (EqualsIgnoreCase(text, SentimentName(s))) return s;
  }
  return std::nullopt;
}

bool OpinionUnit::Has(Component component) const {
  switch (component) {
    case Component::kAspect:
      return aspect.has_value();
    case Component::kOpinion:
      return opinion.has_value();
    case Component::kCategory:
      return category.has_value();
    case Component::kSentiment:
      return sentiment.has_value();
  }
  return false;
}

bool IsValidFor(const OpinionUnit& unit, TaskKind task) {
  for (Component c : kAllComponents) {
    if (unit.Has(c) != TaskHasComponent(task, c)) return false;
  }
  return true;
}

void ValidateUnit(const OpinionUnit& unit, TaskKind task) {
  for (Component c : kAllComponents) {
    bool expected = TaskHasComponent(task, c);
    if (unit.Has(c) == expected) continue;
    std::string msg(expected ? "unit is missing component '"
                             : "unit has component '");
    msg += ComponentName(c);
    msg += expected ? "' required by task " : "' not used by task ";
    msg += TaskName(task);
    throw ValidationError(msg);
  }
}

std::string_view DegeneratePolicyName(DegeneratePolicy policy) {
  switch (policy) {
    case DegeneratePolicy::kBothEmptyPerfect:
      return "both-empty-perfect";
    case DegeneratePolicy::kBothEmptyZero:
      return "both-empty-zero";
    case DegeneratePolicy::kBothEmptyExcluded:
      return "both-empty-excluded";
  }
  return "unknown";
}

std::optional<DegeneratePolicy> ParseDegeneratePolicy(std::string_view name) {
  for (DegeneratePolicy p :
       {DegeneratePolicy::kBothEmptyPerfect, DegeneratePolicy::kBothEmptyZero,
        DegeneratePolicy::kBothEmptyExcluded}) {
    if (name == DegeneratePolicyName(p)) return p;
  }
  return std::nullopt;
}

void FtsConfig::Validate() const {
  if (threshold_schedule.empty()) {
    throw ValidationError("threshold schedule is empty");
  }
  for (std::size_t i = 0; i < threshold_schedule.size(); ++i) {
    const ThresholdBand& band = threshold_schedule[i];
    if (!(band.threshold > 0.0 && band.threshold <= 1.0)) {
      throw ValidationError("threshold must lie in (0, 1]");
    }
    bool last = i + 1 == threshold_schedule.size();
    if (last != !band.max_gold_len.has_value()) {
      throw ValidationError(
          "only the last threshold band may (and must) be unbounded");
    }
    if (i > 0 && !last &&
        *band.max_gold_len <= *threshold_schedule[i - 1].max_gold_len) {
      throw ValidationError("threshold band bounds must increase");
    }
  }
  if (!(partial_main_category_score >= 0.0 &&
        partial_main_category_score <= 1.0)) {
    throw ValidationError("partial_main_category_score must lie in [0, 1]");
  }
  double total = 0.0;
  for (double w : component_weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ValidationError("component weights must be finite and >= 0");
    }
    total += w;
  }
  if (total <= 0.0) throw ValidationError("component weights are all zero");
  for (const std::string& word : stopwords) {
    if (word != ToLower(word)) {
      throw ValidationError("stopwords must be lowercase: " + word);
    }
  }
}

FtsConfig DefaultConfig() {
  FtsConfig config;
  config.stopwords = {"a",      "an",     "the",        "is",
                      "are",    "was",    "were",       "be",
                      "to",     "of",     "and",        "in",
                      "this",   "that",   "have",       "it",
                      "very",   "really", "extremely",  "super",
                      "absolutely", "definitely"};
  config.threshold_schedule = {{2, 0.5}, {4, 0.6}, {std::nullopt, 0.7}};
  config.partial_main_category_score = 0.3;
  config.component_weights = {1.0, 1.0, 1.0, 1.0};
  config.degenerate_policy = DegeneratePolicy::kBothEmptyPerfect;
  return config;
}

std::vector<ThresholdBand> UniformSchedule(double threshold) {
  return {{std::nullopt, threshold}};
}

}  // namespace absa
