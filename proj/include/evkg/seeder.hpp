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

#ifndef EVKG_SEEDER_HPP_
#define EVKG_SEEDER_HPP_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evkg/connectives.hpp"
#include "evkg/conllu.hpp"
#include "evkg/eventuality.hpp"
#include "evkg/relation_type.hpp"

namespace evkg {

// Sentence material an instance carries so that later stages (seeding,
// classification) can run from the instance file alone.
struct InstanceContext {
  std::vector<std::string> tokens;  // forms in sentence order
  std::vector<std::string> upos;
  std::vector<int> heads;           // 1-based, 0 = root
  std::vector<int> e1_positions;    // 1-based sentence positions
  std::vector<int> e2_positions;

  bool empty() const { return tokens.empty(); }
  std::vector<std::string> e1_words() const;
  std::vector<std::string> e2_words() const;
};

// (E1, E2, sentence) with E1 starting before E2 in the text.
struct TrainingInstance {
  std::string e1_key;
  std::string e2_key;
  std::string sentence_id;
  // Token positions strictly between the two eventualities' word spans,
  // [lo, hi] inclusive; lo > hi when the spans touch or overlap.
  std::pair<int, int> span_gap{0, -1};
  std::set<RelationType> labels;
  InstanceContext context;

  // Stable identity used to join instance files.
  std::string id() const { return sentence_id + "\t" + e1_key + "\t" + e2_key; }
};

// One instance per unordered pair of eventualities, ordered by text position.
std::vector<TrainingInstance> build_instances(const DependencyGraph &graph,
                                              const std::vector<Eventuality> &eventualities);

// Types of every rule whose connective sits in the instance's gap (or after
// E2 for trailing rules) and attaches to one of the two eventualities.
std::set<RelationType> match_seed(const TrainingInstance &instance,
                                  const std::vector<SeedRule> &rules = seed_rules());

// Same, but reads the sentence from `graph` instead of the instance context.
std::set<RelationType> match_seed(const TrainingInstance &instance,
                                  const DependencyGraph &graph,
                                  const std::vector<SeedRule> &rules = seed_rules());

// Keys of every unordered pair, ordered by text position.
std::vector<std::pair<std::string, std::string>> co_occurrence_pairs(
    const std::vector<Eventuality> &eventualities);

InstanceContext make_context(const DependencyGraph &graph, const Eventuality &e1,
                             const Eventuality &e2);

}  // namespace evkg

#endif  // EVKG_SEEDER_HPP_
