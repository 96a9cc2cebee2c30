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

#ifndef EVKG_EXTRACTOR_HPP_
#define EVKG_EXTRACTOR_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evkg/conllu.hpp"
#include "evkg/eventuality.hpp"

namespace evkg {

// Coarse part-of-speech requirement on a pattern slot.
enum class PosClass {
  kAny,
  kVerb,          // VERB
  kAdjective,     // ADJ
  kNominal,       // NOUN, PROPN, PRON
  kCopularHead,   // ADJ, NOUN, PROPN
};

bool pos_matches(PosClass pos, const std::string &upos);

// governor-slot --relation--> dependent-slot
struct EdgeTemplate {
  std::string relation;
  std::string governor;
  std::string dependent;
  PosClass pos = PosClass::kAny;  // constraint on the dependent
};

struct Pattern {
  std::string code;
  std::string center_slot;
  PosClass center_pos = PosClass::kVerb;
  std::vector<EdgeTemplate> positive;
  std::vector<std::string> optional;
  std::set<std::string> negative;
};

// Labels that may attach to any matched word: advmod, amod, nummod, aux,
// compound, neg.
const std::vector<std::string> &optional_labels();

// Argument-structure labels. A pattern's negative set is this set minus its
// positive labels; other labels (det, punct, mark, cc, ...) are inert.
const std::set<std::string> &structural_labels();

// The fourteen built-in patterns, in a fixed order.
const std::vector<Pattern> &builtin_patterns();
const Pattern &pattern_by_code(const std::string &code);

// Tries one pattern with `center` placed in the centre slot. Returns nothing
// when a positive edge is missing or a negative edge touches a matched word.
std::optional<Eventuality> match_pattern(const DependencyGraph &graph, int center,
                                         const Pattern &pattern);

// Verbs, plus adjectival or nominal heads of a cop edge.
std::vector<int> candidate_centers(const DependencyGraph &graph);

// All eventualities of a sentence, ordered by centre position. When one
// match binds another candidate centre as an argument (xcomp chains), only
// the governing match is kept.
std::vector<Eventuality> extract_eventualities(const DependencyGraph &graph);

// For exhaustive checks: codes of every pattern that matches at `center`.
std::vector<std::string> matching_patterns(const DependencyGraph &graph, int center);

}  // namespace evkg

#endif  // EVKG_EXTRACTOR_HPP_
