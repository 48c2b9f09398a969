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

#include "absa/tagged_format.h"

#include <array>
#include <optional>
#include <stdexcept>

#include "absa/strings.h"

namespace absa {
namespace {

std::string OpenTag(Component c) {
  return "<" + std::string(ComponentTag(c)) + ">";
}

std::string CloseTag(Component c) {
  return "</" + std::string(ComponentTag(c)) + ">";
}

bool ContainsTagMarker(std::string_view s) {
  for (Component c : kAllComponents) {
    if (s.find(OpenTag(c)) != std::string_view::npos ||
        s.find(CloseTag(c)) != std::string_view::npos) {
      return true;
    }
  }
  return false;
}

// Attempts to read one tag group starting exactly at `start`. On success
// returns the offset just past the group and fills `contents` (trimmed, one
// per task component).
std::optional<std::size_t> ReadGroup(std::string_view raw, std::size_t start,
                                     std::span<const Component> components,
                                     std::vector<std::string_view>* contents) {
  contents->clear();
  std::size_t cur = start;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k > 0) {
      while (cur < raw.size() && IsSpace(raw[cur])) ++cur;
    }
    const std::string open = OpenTag(components[k]);
    if (raw.compare(cur, open.size(), open) != 0) return std::nullopt;
    cur += open.size();
    const std::string close = CloseTag(components[k]);
    std::size_t end = raw.find(close, cur);
    if (end == std::string_view::npos) return std::nullopt;
    std::string_view content = raw.substr(cur, end - cur);
    if (ContainsTagMarker(content)) return std::nullopt;
    contents->push_back(Trim(content));
    cur = end + close.size();
  }
  return cur;
}

// Builds a unit from tag contents; nullopt for labels that cannot be
// represented (blank category, unknown sentiment).
std::optional<OpinionUnit> UnitFromContents(
    std::span<const Component> components,
    std::span<const std::string_view> contents) {
  OpinionUnit unit;
  for (std::size_t k = 0; k < components.size(); ++k) {
    std::string_view text = contents[k];
    switch (components[k]) {
      case Component::kAspect:
        unit.aspect = AspectField::FromText(text);
        break;
      case Component::kOpinion:
        unit.opinion = std::string(text);
        break;
      case Component::kCategory:
        if (text.empty()) return std::nullopt;
        try {
          unit.category = CategoryLabel::Parse(text);
        } catch (const ValidationError&) {
          return std::nullopt;
        }
        break;
      case Component::kSentiment: {
        std::optional<Sentiment> s = ParseSentiment(text);
        if (!s) return std::nullopt;
        unit.sentiment = *s;
        break;
      }
    }
  }
  return unit;
}

bool IsEmptyListForm(std::string_view raw) {
  raw = Trim(raw);
  if (raw.empty()) return true;
  if (raw.front() != '[' || raw.back() != ']') return false;
  return Trim(raw.substr(1, raw.size() - 2)).empty();
}

std::string ComponentText(const OpinionUnit& unit, Component c) {
  switch (c) {
    case Component::kAspect:
      return unit.aspect->ToString();
    case Component::kOpinion:
      return *unit.opinion;
    case Component::kCategory:
      return unit.category->ToString();
    case Component::kSentiment:
      return std::string(SentimentName(*unit.sentiment));
  }
  return {};
}

}  // namespace

std::string_view ComponentTag(Component component) {
  switch (component) {
    case Component::kAspect:
      return "asp";
    case Component::kOpinion:
      return "opn";
    case Component::kCategory:
      return "cat";
    case Component::kSentiment:
      return "sen";
  }
  return "";
}

ParsedOutput ParseOutput(std::string_view raw, TaskKind task) {
  ParsedOutput out;
  std::span<const Component> components = TaskComponents(task);
  const std::string first_open = OpenTag(components.front());
  std::vector<std::string_view> contents;
  bool well_formed_seen = false;

  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t start = raw.find(first_open, pos);
    if (start == std::string_view::npos) break;
    std::optional<std::size_t> end = ReadGroup(raw, start, components, &contents);
    if (!end) {
      pos = start + 1;
      continue;
    }
    pos = *end;
    bool all_empty = true;
    for (std::string_view c : contents) all_empty = all_empty && c.empty();
    if (all_empty) {
      well_formed_seen = true;
      continue;
    }
    if (std::optional<OpinionUnit> unit = UnitFromContents(components, contents)) {
      out.units.push_back(std::move(*unit));
      well_formed_seen = true;
    }
  }
  out.failed = !well_formed_seen && !IsEmptyListForm(raw);
  return out;
}

std::string SerializeUnit(const OpinionUnit& unit, TaskKind task) {
  ValidateUnit(unit, task);
  std::string out;
  for (Component c : TaskComponents(task)) {
    std::string text = ComponentText(unit, c);
    if (ContainsTagMarker(text)) {
      throw ValidationError("component text contains a tag marker: " + text);
    }
    out += OpenTag(c);
    out += text;
    out += CloseTag(c);
  }
  return out;
}

std::string SerializeUnits(std::span<const OpinionUnit> units, TaskKind task) {
  std::string out = "[";
  if (units.empty()) {
    for (Component c : TaskComponents(task)) out += OpenTag(c) + CloseTag(c);
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i > 0) out += ", ";
    out += SerializeUnit(units[i], task);
  }
  out += "]";
  return out;
}

std::vector<OpinionUnit> DeriveSubtaskGold(std::span<const OpinionUnit> asqe,
                                           TaskKind target) {
  std::vector<OpinionUnit> out;
  out.reserve(asqe.size());
  for (const OpinionUnit& q : asqe) {
    OpinionUnit u;
    if (TaskHasComponent(target, Component::kAspect)) u.aspect = q.aspect;
    if (TaskHasComponent(target, Component::kOpinion)) u.opinion = q.opinion;
    if (TaskHasComponent(target, Component::kCategory)) u.category = q.category;
    if (TaskHasComponent(target, Component::kSentiment)) {
      u.sentiment = q.sentiment;
    }
    out.push_back(std::move(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prompt templates.

namespace {

struct TaskWording {
  std::string_view title;
  std::string_view unit;   // singular
  std::string_view units;  // capitalized plural
};

TaskWording WordingFor(TaskKind task) {
  switch (task) {
    case TaskKind::kOE:
      return {"opinion extraction (OE)", "opinion", "Opinions"};
    case TaskKind::kAOPE:
      return {"aspect-opinion pair extraction (AOPE)", "pair", "Pairs"};
    case TaskKind::kAOC:
      return {"aspect-opinion categorisation (AOC)", "triplet", "Triplets"};
    case TaskKind::kASTE:
      return {"aspect sentiment triplet extraction (ASTE)", "triplet",
              "Triplets"};
    case TaskKind::kASQE:
      return {"aspect-sentiment quadruplet extraction (ASQE)", "quadruplet",
              "Quadruplets"};
  }
  return {};
}

std::string_view TagDescription(Component c) {
  switch (c) {
    case Component::kAspect:
      return "<asp>aspect terms</asp>";
    case Component::kOpinion:
      return "<opn>opinion expressions</opn>";
    case Component::kCategory:
      return "<cat>category</cat>";
    case Component::kSentiment:
      return "<sen>sentiment</sen>";
  }
  return "";
}

struct PromptExample {
  std::string_view input;
  std::vector<OpinionUnit> output;
};

OpinionUnit Quad(std::string_view aspect, std::string_view opinion,
                 std::string_view category, Sentiment sentiment) {
  OpinionUnit u;
  u.aspect = AspectField::FromText(aspect);
  u.opinion = std::string(opinion);
  u.category = CategoryLabel::Parse(category);
  u.sentiment = sentiment;
  return u;
}

std::vector<PromptExample> ReferenceExamples() {
  return {
      {"The professor was knowledgeable but the assignments were too hard.",
       {Quad("professor", "knowledgeable", "Staff - Knowledge & skills",
             Sentiment::kPositive),
        Quad("assignments", "too hard", "Course - Assessment",
             Sentiment::kNegative)}},
      {"It was disappointing overall.",
       {Quad("null", "disappointing", "Course - Overall",
             Sentiment::kNegative)}},
      {"She never reply to emails or answer questions",
       {Quad("She", "never reply to emails or answer questions",
             "Staff - Helpfulness", Sentiment::kNegative)}},
      {"There were 10 assignments, 5 quizzes, 1 final exam.", {}},
  };
}

}  // namespace

std::string EmitPrompt(TaskKind task, int shots) {
  if (shots != 0 && shots != 4) {
    throw std::invalid_argument("prompt shots must be 0 or 4");
  }
  const bool aspect = TaskHasComponent(task, Component::kAspect);
  const bool category = TaskHasComponent(task, Component::kCategory);
  const bool sentiment = TaskHasComponent(task, Component::kSentiment);
  const TaskWording wording = WordingFor(task);

  std::string p;
  auto line = [&p](std::string_view text) {
    p += text;
    p += '\n';
  };

  line("### Task type:");
  line(wording.title);
  line("");
  line("### Instruction:");
  line("");

  std::string intro = "Given the input text, extract ALL ";
  intro += aspect ? "pairs of opinion expressions and their corresponding "
                    "aspect terms"
                  : "opinion expressions";
  intro += " about the course, staff, or university.";
  if (category && sentiment) {
    intro += " Then classify the category and sentiment for each "
             "aspect-opinion pair.";
  } else if (category) {
    intro += " Then classify the category for each aspect-opinion pair.";
  } else if (sentiment) {
    intro += " Then classify the sentiment for each aspect-opinion pair.";
  }
  line(intro);
  line("Opinion expressions are words/phrases expressing evaluation, feeling, "
       "or judgment (including both explicit and implicit opinions, not "
       "objective facts).");
  if (aspect) {
    line("Aspect terms are opinion targets. Only use a pronoun if you cannot "
         "find a direct aspect term in the same sentence or adjacent "
         "context.");
    std::string combo = "Each aspect-opinion";
    if (category) combo += "-category";
    if (sentiment) combo += "-sentiment";
    combo += " combination is a ";
    combo += wording.unit;
    combo += ".";
    line(combo);
  }
  line("");

  line("**Rules:**");
  line("- Extract EVERY opinion in the text, including both explicit and "
       "implicit opinion expressions.");
  line(aspect ? "- Extract all opinion and aspect terms VERBATIM and as "
                "CONSECUTIVE tokens."
              : "- Extract all opinion terms VERBATIM and as CONSECUTIVE "
                "tokens.");
  line(aspect ? "- Use 'null' for implicit aspects. Opinions cannot be null."
              : "- Opinions cannot be null.");
  if (aspect) {
    line("- If an aspect is mapped to multiple opinion expressions, or vice "
         "versa, extract each 1:1 pair separately.");
  }
  if (category) {
    line("- Categorise each aspect-opinion pair first into one main category "
         "(the keys) in the category_mapping below, and then into one of its "
         "appropriate subcategories (values for the key). The category label "
         "follows \"Main category - subcategory\" format.");
    line("category_mapping = {");
    line("  \"Course\": [\"Content\", \"Learning activity\", \"Assessment\", "
         "\"Workload\", \"Difficulty\", \"Course materials\", "
         "\"Technology & tools\", \"Overall\"],");
    line("  \"Staff\": [\"Teaching\", \"Knowledge & skills\", \"Helpfulness\", "
         "\"Attitude\", \"Personal traits\", \"Overall\"],");
    line("  \"University\": [\"Cost\", \"Opportunities\", \"Programme\", "
         "\"Campus & facilities\", \"Culture & diversity\", "
         "\"Information & Services\", \"Social engagement & activities\", "
         "\"Overall\"]");
    line("}");
    line("");
  }
  if (sentiment) {
    line("- Classify the sentiment into one of 'positive', 'neutral', "
         "'negative'.");
    line("");
  }

  std::string tags = "- Use these specific tags for each component within "
                     "each ";
  tags += wording.unit;
  tags += ": ";
  std::string unit_pattern;
  bool first = true;
  for (Component c : TaskComponents(task)) {
    if (!first) tags += ", ";
    first = false;
    tags += TagDescription(c);
    unit_pattern += OpenTag(c) + "..." + CloseTag(c);
  }
  line(tags);
  line("");

  line("**Critical formatting requirements:**");
  line("- Output MUST be a valid Python list");
  line("- " + std::string(wording.units) + " MUST be separated by commas");
  line("");
  line("**Output format:**");
  line("[" + unit_pattern + ", " + unit_pattern + ", ..., " + unit_pattern +
       "]");
  line("");

  if (shots == 4) {
    line("### Examples:");
    line("");
    for (const PromptExample& ex : ReferenceExamples()) {
      std::vector<OpinionUnit> units = DeriveSubtaskGold(ex.output, task);
      line("Input: \"" + std::string(ex.input) + "\"");
      line("Output: " + SerializeUnits(units, task));
      line("");
    }
  }

  line("### Input:");
  line("```<review text entry>```");
  return p;
}

}  // namespace absa
