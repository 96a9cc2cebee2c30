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

#include "evkg/connectives.hpp"

#include "text_util.hpp"

namespace evkg {
namespace {

SeedRule rule(const char *words, RelationType type,
              TemplateSide side = TemplateSide::kBetween) {
  return SeedRule{text::split_words(words), type, side};
}

}  // namespace

std::string SeedRule::text() const { return text::join(connective, " "); }

const std::vector<SeedRule> &seed_rules() {
  using R = RelationType;
  static const std::vector<SeedRule> kRules = {
      rule("before", R::kPrecedence),
      rule("then", R::kPrecedence),
      rule("till", R::kPrecedence),
      rule("until", R::kPrecedence),
      rule("after", R::kSuccession),
      rule("once", R::kSuccession),
      rule("meanwhile", R::kSynchronous),
      rule("meantime", R::kSynchronous),
      rule("at the same time", R::kSynchronous),
      rule("because", R::kReason),
      rule("so", R::kResult),
      rule("thus", R::kResult),
      rule("therefore", R::kResult),
      rule("so that", R::kResult),
      rule("if", R::kCondition),
      rule("as long as", R::kCondition),
      rule("but", R::kContrast),
      rule("however", R::kContrast),
      rule("by contrast", R::kContrast),
      rule("in contrast", R::kContrast),
      rule("on the other hand", R::kContrast),
      rule("on the contrary", R::kContrast),
      rule("although", R::kConcession),
      rule("and", R::kConjunction),
      rule("also", R::kConjunction),
      rule("for example", R::kInstantiation),
      rule("for instance", R::kInstantiation),
      rule("in other words", R::kRestatement),
      rule("or", R::kAlternative),
      rule("unless", R::kAlternative),
      rule("as an alternative", R::kAlternative),
      rule("otherwise", R::kAlternative),
      rule("instead", R::kChosenAlternative, TemplateSide::kTrailing),
      rule("except", R::kException),
  };
  return kRules;
}

const std::set<std::string> &connective_lead_words() {
  static const std::set<std::string> kWords = [] {
    std::set<std::string> out;
    for (const SeedRule &r : seed_rules()) out.insert(r.connective.front());
    return out;
  }();
  return kWords;
}

}  // namespace evkg
