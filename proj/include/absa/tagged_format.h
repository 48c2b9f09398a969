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

// XML-style tagged unit strings:
//
//   [<asp>pie</asp><opn>the best</opn><cat>food</cat><sen>positive</sen>, ...]
//
// Only the tags of the task's components appear, always in the order
// asp, opn, cat, sen. An empty unit list is written as a single unit whose
// tags are all empty.

#ifndef ABSA_TAGGED_FORMAT_H_
#define ABSA_TAGGED_FORMAT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absa/core_model.h"

namespace absa {

// "asp", "opn", "cat" or "sen".
std::string_view ComponentTag(Component component);

struct ParsedOutput {
  std::vector<OpinionUnit> units;
  // True when non-empty output held neither a well-formed tag group nor an
  // empty-list form such as "[]".
  bool failed = false;
};

// Best-effort extraction of the task's tag groups from model output. Never
// throws: malformed groups are skipped and reported only through `failed`
// when nothing usable remains.
ParsedOutput ParseOutput(std::string_view raw, TaskKind task);

// Throws ValidationError if a unit does not match `task`.
std::string SerializeUnits(std::span<const OpinionUnit> units, TaskKind task);

// Single unit without the surrounding brackets.
std::string SerializeUnit(const OpinionUnit& unit, TaskKind task);

// Projects ASQE quadruplets onto `target`'s components. Order and
// projection duplicates are kept.
std::vector<OpinionUnit> DeriveSubtaskGold(std::span<const OpinionUnit> asqe,
                                           TaskKind target);

// Instruction prompt for `task`, 0-shot or 4-shot. The ASQE 4-shot prompt is
// the reference template; other tasks drop the lines about components they do
// not use. Throws std::invalid_argument for shot counts other than 0 and 4.
std::string EmitPrompt(TaskKind task, int shots);

}  // namespace absa

#endif  // ABSA_TAGGED_FORMAT_H_
