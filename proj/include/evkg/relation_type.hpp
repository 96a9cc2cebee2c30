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

#ifndef EVKG_RELATION_TYPE_HPP_
#define EVKG_RELATION_TYPE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evkg {

// The fourteen directed discourse types plus untyped co-occurrence. The
// direction is always head -> tail as written in the source sentence, so
// <E1, Succession, E2> reads "E1 happens after E2".
enum class RelationType : int {
  kPrecedence,
  kSuccession,
  kSynchronous,
  kReason,
  kResult,
  kCondition,
  kContrast,
  kConcession,
  kConjunction,
  kInstantiation,
  kRestatement,
  kAlternative,
  kChosenAlternative,
  kException,
  kCoOccurrence,
};

inline constexpr int kNumRelationTypes = 15;

enum class Category : int {
  kTemporal,
  kContingency,
  kComparison,
  kExpansion,
  kCoOccurrence,
};

// Categories that get a bootstrap classifier.
inline constexpr std::array<Category, 4> kDiscourseCategories = {
    Category::kTemporal, Category::kContingency, Category::kComparison,
    Category::kExpansion};

const std::array<RelationType, kNumRelationTypes> &all_relation_types();

std::string_view relation_name(RelationType type);
std::optional<RelationType> parse_relation(std::string_view name);
// Throws InvalidArgument on unknown names.
RelationType relation_from_name(std::string_view name);

Category category_of(RelationType type);
std::string_view category_name(Category category);
std::vector<RelationType> types_in(Category category);

}  // namespace evkg

#endif  // EVKG_RELATION_TYPE_HPP_
