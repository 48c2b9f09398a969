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

#ifndef ABSA_STRINGS_H_
#define ABSA_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace absa {

// ASCII-only helpers; other bytes pass through unchanged.
bool IsSpace(char c);
bool IsAlnum(char c);
std::string ToLower(std::string_view s);
std::string_view Trim(std::string_view s);

// Lowercases, trims and collapses every whitespace run to one space.
std::string NormalizeSpaces(std::string_view s);

// Splits on whitespace runs, dropping empties.
std::vector<std::string> SplitWhitespace(std::string_view s);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

}  // namespace absa

#endif  // ABSA_STRINGS_H_
