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

#include "evkg/relation_type.hpp"

#include "evkg/error.hpp"

namespace evkg {
namespace {

constexpr std::array<std::string_view, kNumRelationTypes> kNames = {
    "Precedence",  "Succession",    "Synchronous", "Reason",      "Result",
    "Condition",   "Contrast",      "Concession",  "Conjunction", "Instantiation",
    "Restatement", "Alternative",   "ChosenAlternative", "Exception",
    "Co_Occurrence"};

}  // namespace

const std::array<RelationType, kNumRelationTypes> &all_relation_types() {
  static const auto kAll = [] {
    std::array<RelationType, kNumRelationTypes> out{};
    for (int i = 0; i < kNumRelationTypes; ++i) out[i] = static_cast<RelationType>(i);
    return out;
  }();
  return kAll;
}

std::string_view relation_name(RelationType type) {
  return kNames[static_cast<int>(type)];
}

std::optional<RelationType> parse_relation(std::string_view name) {
  for (int i = 0; i < kNumRelationTypes; ++i)
    if (kNames[i] == name) return static_cast<RelationType>(i);
  if (name == "Co-Occurrence" || name == "CoOccurrence") return RelationType::kCoOccurrence;
  return std::nullopt;
}

RelationType relation_from_name(std::string_view name) {
  auto type = parse_relation(name);
  if (!type) throw InvalidArgument("unknown relation type '" + std::string(name) + "'");
  return *type;
}

Category category_of(RelationType type) {
  switch (type) {
    case RelationType::kPrecedence:
    case RelationType::kSuccession:
    case RelationType::kSynchronous:
      return Category::kTemporal;
    case RelationType::kReason:
    case RelationType::kResult:
    case RelationType::kCondition:
      return Category::kContingency;
    case RelationType::kContrast:
    case RelationType::kConcession:
      return Category::kComparison;
    case RelationType::kConjunction:
    case RelationType::kInstantiation:
    case RelationType::kRestatement:
    case RelationType::kAlternative:
    case RelationType::kChosenAlternative:
    case RelationType::kException:
      return Category::kExpansion;
    case RelationType::kCoOccurrence:
      return Category::kCoOccurrence;
  }
  return Category::kCoOccurrence;
}

std::string_view category_name(Category category) {
  switch (category) {
    case Category::kTemporal: return "Temporal";
    case Category::kContingency: return "Contingency";
    case Category::kComparison: return "Comparison";
    case Category::kExpansion: return "Expansion";
    case Category::kCoOccurrence: return "Co_Occurrence";
  }
  return "";
}

std::vector<RelationType> types_in(Category category) {
  std::vector<RelationType> out;
  for (RelationType t : all_relation_types())
    if (category_of(t) == category) out.push_back(t);
  return out;
}

}  // namespace evkg
