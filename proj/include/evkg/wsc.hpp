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

#ifndef EVKG_WSC_HPP_
#define EVKG_WSC_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "evkg/conllu.hpp"
#include "evkg/eventuality.hpp"
#include "evkg/kg_store.hpp"
#include "evkg/relation_type.hpp"
#include "evkg/serialization.hpp"

namespace evkg {

// Two candidate nouns and a pronoun, all as 1-based token positions.
struct WscQuestion {
  std::string id;
  DependencyGraph sentence;
  int candidates[2] = {0, 0};
  int pronoun = 0;
  std::optional<int> answer;  // 0 or 1, indexing `candidates`

  // Throws InvalidArgument when positions are out of range, equal, or the
  // pronoun is one of the candidates.
  void validate() const;
  std::string candidate_word(int which) const;
};

enum class Placeholder { kX, kY, kP };

// An eventuality with one word position marked as the placeholder. The
// original word is kept so callers can show what was replaced.
struct PseudoEventuality {
  Eventuality base;
  int slot = 0;  // local index of the placeholder
  Placeholder marker = Placeholder::kX;
  int first_position = 0;  // sentence position of the first word

  std::string display() const;  // words with the marker substituted
  // True when `e` has the same edges and the same words everywhere except
  // the placeholder slot.
  bool matches(const Eventuality &e) const;
};

// Everything needed to score one candidate.
struct CandidateSide {
  std::optional<PseudoEventuality> candidate;  // E'_n
  std::optional<PseudoEventuality> pronoun;    // E'_p
  RelationType relation = RelationType::kCoOccurrence;
  // Whether the candidate eventuality precedes the pronoun eventuality in
  // the text; graph edges are oriented the same way.
  bool candidate_first = true;

  bool usable() const { return candidate && pronoun; }
};

struct PreparedQuestion {
  CandidateSide sides[2];
};

PreparedQuestion prepare(const WscQuestion &q);

// Edges (h, T, t) of `graph` where h matches one pseudo-eventuality, t the
// other, and the two placeholder words are identical.
std::size_t support_count(const KnowledgeGraph &graph, const CandidateSide &side);

struct WscPrediction {
  std::optional<int> choice;  // nullopt = abstain
  std::size_t scores[2] = {0, 0};
  RelationType relations[2] = {RelationType::kCoOccurrence, RelationType::kCoOccurrence};
  bool extractable[2] = {false, false};
};

// The candidate with strictly more support wins; ties abstain.
WscPrediction resolve(const KnowledgeGraph &graph, const WscQuestion &q);

// One question per line: {"id", "tokens": [[form, upos, head, deprel], ...],
// "candidates": [i, j], "pronoun": k, "answer": 0|1 (optional)}.
WscQuestion question_from_json(const Json &j);
std::vector<WscQuestion> read_questions(std::istream &in, const std::string &source);

struct WscSummary {
  std::size_t correct = 0;
  std::size_t wrong = 0;
  std::size_t abstain = 0;
  std::size_t ungraded = 0;  // no gold answer
  std::optional<double> precision;  // correct / (correct + wrong)
  std::optional<double> overall;    // abstentions count as half correct
};

WscSummary summarize(const std::vector<WscQuestion> &questions,
                     const std::vector<WscPrediction> &predictions);

Json wsc_report(const std::vector<WscQuestion> &questions,
                const std::vector<WscPrediction> &predictions);

}  // namespace evkg

#endif  // EVKG_WSC_HPP_
