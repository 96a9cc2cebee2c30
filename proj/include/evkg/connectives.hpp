// Copyright 2026 The evkg Authors.
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

#ifndef EVKG_CONNECTIVES_HPP_
#define EVKG_CONNECTIVES_HPP_

#include <set>
#include <string>
#include <vector>

#include "evkg/relation_type.hpp"

namespace evkg {

// Where the connective sits relative to the second eventuality.
enum class TemplateSide {
  kBetween,   // "E1, because E2"
  kTrailing,  // "E1, E2 instead"
};

// An unambiguous discourse connective and the directed type it signals.
struct SeedRule {
  std::vector<std::string> connective;  // lowercase words, no punctuation
  RelationType relation;
  TemplateSide side = TemplateSide::kBetween;

  std::string text() const;
};

// The full seed connective inventory (34 rules over the 14 discourse types).
const std::vector<SeedRule> &seed_rules();

// First words of the seed connectives ("so", "then", "however", "at", ...).
// The extractor never pulls these into an eventuality as optional modifiers.
const std::set<std::string> &connective_lead_words();

}  // namespace evkg

#endif  // EVKG_CONNECTIVES_HPP_
