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

// Domain types shared by the evaluation pipeline: ABSA tasks and their
// components, opinion units, evaluation entries and the scorer
// configuration.

#ifndef ABSA_CORE_MODEL_H_
#define ABSA_CORE_MODEL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace absa {

// Raised when a value violates a domain invariant (bad label, unit/task
// mismatch, invalid configuration).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Component { kAspect = 0, kOpinion = 1, kCategory = 2, kSentiment = 3 };

inline constexpr std::array<Component, 4> kAllComponents = {
    Component::kAspect, Component::kOpinion, Component::kCategory,
    Component::kSentiment};

// Lowercase name: "aspect", "opinion", "category", "sentiment".
std::string_view ComponentName(Component component);
std::optional<Component> ParseComponent(std::string_view name);

enum class TaskKind { kOE, kAOPE, kAOC, kASTE, kASQE };

inline constexpr std::array<TaskKind, 5> kAllTasks = {
    TaskKind::kOE, TaskKind::kAOPE, TaskKind::kAOC, TaskKind::kASTE,
    TaskKind::kASQE};

// Canonical uppercase name, e.g. "ASTE".
std::string_view TaskName(TaskKind task);

// Case-insensitive.
std::optional<TaskKind> ParseTaskKind(std::string_view name);

// Components of a task in canonical order (aspect, opinion, category,
// sentiment).
std::span<const Component> TaskComponents(TaskKind task);
bool TaskHasComponent(TaskKind task, Component component);

// An aspect term: either implicit (serialized as "null") or an explicit,
// non-empty span of the review text.
class AspectField {
 public:
  static AspectField Implicit() { return AspectField(); }

  // Throws ValidationError if `span` is blank or the literal "null".
  static AspectField Explicit(std::string span);

  // "null" (any case) or blank text is implicit, anything else explicit.
  static AspectField FromText(std::string_view text);

  bool is_implicit() const { return !span_.has_value(); }

  // Empty for implicit aspects.
  const std::string& span() const;

  // "null" for implicit aspects, the span otherwise.
  std::string ToString() const;

  friend bool operator==(const AspectField&, const AspectField&) = default;

 private:
  AspectField() = default;
  explicit AspectField(std::string span) : span_(std::move(span)) {}

  std::optional<std::string> span_;
};

// Possibly two-level category label, serialized as "main - sub".
struct CategoryLabel {
  std::string main;
  std::optional<std::string> sub;

  // Splits on the first " - "; both halves are trimmed. Throws on blank
  // input or a blank half.
  static CategoryLabel Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const CategoryLabel&, const CategoryLabel&) = default;
};

enum class Sentiment { kPositive, kNeutral, kNegative };

std::string_view SentimentName(Sentiment sentiment);
// Case-insensitive, surrounding whitespace ignored.
std::optional<Sentiment> ParseSentiment(std::string_view text);

// One aspect/opinion/category/sentiment tuple. Only the components of the
// owning task are populated.
struct OpinionUnit {
  std::optional<AspectField> aspect;
  std::optional<std::string> opinion;
  std::optional<CategoryLabel> category;
  std::optional<Sentiment> sentiment;

  bool Has(Component component) const;

  friend bool operator==(const OpinionUnit&, const OpinionUnit&) = default;
};

bool IsValidFor(const OpinionUnit& unit, TaskKind task);

// Throws ValidationError naming the first offending component.
void ValidateUnit(const OpinionUnit& unit, TaskKind task);

struct EvalEntry {
  std::string id;
  std::string text;
  TaskKind task = TaskKind::kASQE;
  std::vector<OpinionUnit> gold;
  std::vector<OpinionUnit> pred;
  // Set when the raw model output could not be parsed; `pred` is then empty.
  bool pred_parse_failed = false;
};

// Inclusive upper bound on the (stopword-filtered) gold length; an unset
// bound covers every longer length.
struct ThresholdBand {
  std::optional<std::size_t> max_gold_len;
  double threshold = 0.0;

  friend bool operator==(const ThresholdBand&, const ThresholdBand&) = default;
};

// How entries with no gold and/or no predicted units are scored.
enum class DegeneratePolicy {
  // 0 gold and 0 pred is a correct abstention: P = R = F1 = 1.
  kBothEmptyPerfect,
  // 0 gold and 0 pred scores P = R = F1 = 0.
  kBothEmptyZero,
  // 0 gold and 0 pred entries are left out of macro averages.
  kBothEmptyExcluded,
};

std::string_view DegeneratePolicyName(DegeneratePolicy policy);
std::optional<DegeneratePolicy> ParseDegeneratePolicy(std::string_view name);

struct FtsConfig {
  std::set<std::string> stopwords;
  // Sorted by max_gold_len; the last band is unbounded.
  std::vector<ThresholdBand> threshold_schedule;
  double partial_main_category_score = 0.0;
  // Indexed by Component.
  std::array<double, 4> component_weights = {1.0, 1.0, 1.0, 1.0};
  DegeneratePolicy degenerate_policy = DegeneratePolicy::kBothEmptyPerfect;
  // Count unmatched units as rejected pairs in match-case diagnostics.
  bool diagnostics_include_unmatched = false;

  double weight(Component c) const {
    return component_weights[static_cast<std::size_t>(c)];
  }

  // Throws ValidationError when a band gap, out-of-range threshold, or
  // all-zero weight vector is found.
  void Validate() const;
};

// 22 stopwords, length-banded thresholds 0.5/0.6/0.7, partial main-category
// score 0.3, equal weights, both-empty entries count as perfect.
FtsConfig DefaultConfig();

// One unbounded band: `threshold` applies to every gold length.
std::vector<ThresholdBand> UniformSchedule(double threshold);

}  // namespace absa

#endif  // ABSA_CORE_MODEL_H_
