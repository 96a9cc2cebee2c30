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

#include "evkg/extractor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "evkg/connectives.hpp"
#include "evkg/error.hpp"

namespace evkg {
namespace {

using P = PosClass;

Pattern make_pattern(std::string code, std::string center_slot, PosClass center_pos,
                     std::vector<EdgeTemplate> positive) {
  Pattern p;
  p.code = std::move(code);
  p.center_slot = std::move(center_slot);
  p.center_pos = center_pos;
  p.positive = std::move(positive);
  p.optional = optional_labels();
  p.negative = structural_labels();
  for (const EdgeTemplate &t : p.positive) p.negative.erase(t.relation);
  return p;
}

// auxpass counts as aux when collecting optional words ("the bill is paid").
bool is_optional(const Pattern &pattern, const std::string &label) {
  const std::string &l = label == "auxpass" ? std::string("aux") : label;
  return std::find(pattern.optional.begin(), pattern.optional.end(), l) !=
         pattern.optional.end();
}

struct Match {
  Eventuality eventuality;
  std::vector<int> bound;  // positively bound sentence positions
};

std::optional<Match> match_detail(const DependencyGraph &graph, int center,
                                  const Pattern &pattern) {
  if (center < 1 || center > graph.size()) return std::nullopt;
  if (!pos_matches(pattern.center_pos, graph.token(center).upos)) return std::nullopt;

  std::map<std::string, int> slots{{pattern.center_slot, center}};
  std::set<int> bound{center};
  struct SentenceEdge {
    int governor;
    std::string relation;
    int dependent;
  };
  std::vector<SentenceEdge> edges;

  for (const EdgeTemplate &t : pattern.positive) {
    auto gov = slots.find(t.governor);
    if (gov == slots.end()) return std::nullopt;
    int found = 0;
    for (int dep : graph.dependents(gov->second)) {
      const Token &tok = graph.token(dep);
      if (tok.deprel == t.relation && pos_matches(t.pos, tok.upos) && !bound.count(dep)) {
        found = dep;
        break;
      }
    }
    if (!found) return std::nullopt;
    slots[t.dependent] = found;
    bound.insert(found);
    edges.push_back({gov->second, t.relation, found});
  }

  std::set<int> words = bound;
  const auto &lead_words = connective_lead_words();
  for (int b : bound) {
    for (int dep : graph.dependents(b)) {
      const Token &tok = graph.token(dep);
      if (words.count(dep) || !is_optional(pattern, tok.deprel)) continue;
      if (lead_words.count(tok.form)) continue;
      words.insert(dep);
      edges.push_back({b, tok.deprel, dep});
    }
  }

  for (int w : words) {
    const Token &tok = graph.token(w);
    if (tok.head != 0 && pattern.negative.count(tok.deprel)) return std::nullopt;
    for (int dep : graph.dependents(w))
      if (pattern.negative.count(graph.token(dep).deprel)) return std::nullopt;
  }

  Match m;
  Eventuality &e = m.eventuality;
  std::map<int, int> local;
  for (int w : words) {
    local[w] = e.size();
    const Token &tok = graph.token(w);
    e.words.push_back(tok.form);
    e.upos.push_back(tok.upos);
    e.positions.push_back(w);
  }
  for (const SentenceEdge &se : edges)
    e.edges.push_back({local[se.governor], se.relation, local[se.dependent]});
  std::sort(e.edges.begin(), e.edges.end());
  e.pattern = pattern.code;
  e.center = local[center];
  e.frequency = 1;
  assign_key(e);
  m.bound.assign(bound.begin(), bound.end());
  return m;
}

}  // namespace

bool pos_matches(PosClass pos, const std::string &upos) {
  switch (pos) {
    case P::kAny: return true;
    case P::kVerb: return upos == "VERB";
    case P::kAdjective: return upos == "ADJ";
    case P::kNominal: return upos == "NOUN" || upos == "PROPN" || upos == "PRON";
    case P::kCopularHead: return upos == "ADJ" || upos == "NOUN" || upos == "PROPN";
  }
  return false;
}

const std::vector<std::string> &optional_labels() {
  static const std::vector<std::string> kLabels = {"advmod", "amod", "nummod",
                                                   "aux",    "compound", "neg"};
  return kLabels;
}

const std::set<std::string> &structural_labels() {
  static const std::set<std::string> kLabels = {
      "nsubj", "nsubjpass", "dobj", "iobj",  "xcomp",     "cop",
      "nmod",  "case",      "ccomp", "csubj", "csubjpass"};
  return kLabels;
}

const std::vector<Pattern> &builtin_patterns() {
  static const std::vector<Pattern> kPatterns = {
      make_pattern("s-v", "v1", P::kVerb, {{"nsubj", "v1", "n1"}}),
      make_pattern("s-v-o", "v1", P::kVerb, {{"nsubj", "v1", "n1"}, {"dobj", "v1", "n2"}}),
      make_pattern("s-v-a", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"}, {"xcomp", "v1", "a", P::kAdjective}}),
      make_pattern("s-v-o-o", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"}, {"iobj", "v1", "n2"}, {"dobj", "v1", "n3"}}),
      make_pattern("s-be-a", "a1", P::kCopularHead,
                   {{"nsubj", "a1", "n1"}, {"cop", "a1", "be"}}),
      make_pattern("s-v-be-a", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"},
                    {"xcomp", "v1", "a1", P::kAdjective},
                    {"cop", "a1", "be"}}),
      make_pattern("s-v-be-o", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"},
                    {"xcomp", "v1", "n2", P::kNominal},
                    {"cop", "n2", "be"}}),
      make_pattern("s-v-v-o", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"},
                    {"xcomp", "v1", "v2", P::kVerb},
                    {"dobj", "v2", "n2"}}),
      make_pattern("s-v-v", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"}, {"xcomp", "v1", "v2", P::kVerb}}),
      make_pattern("s-be-a-p-o", "a1", P::kCopularHead,
                   {{"nsubj", "a1", "n1"},
                    {"cop", "a1", "be"},
                    {"nmod", "a1", "n2"},
                    {"case", "n2", "p1"}}),
      make_pattern("s-v-p-o", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"}, {"nmod", "v1", "n2"}, {"case", "n2", "p1"}}),
      make_pattern("s-v-o-p-o", "v1", P::kVerb,
                   {{"nsubj", "v1", "n1"},
                    {"dobj", "v1", "n2"},
                    {"nmod", "v1", "n3"},
                    {"case", "n3", "p1"}}),
      make_pattern("spass-v", "v1", P::kVerb, {{"nsubjpass", "v1", "n1"}}),
      make_pattern("spass-v-p-o", "v1", P::kVerb,
                   {{"nsubjpass", "v1", "n1"}, {"nmod", "v1", "n2"}, {"case", "n2", "p1"}}),
  };
  return kPatterns;
}

const Pattern &pattern_by_code(const std::string &code) {
  for (const Pattern &p : builtin_patterns())
    if (p.code == code) return p;
  throw InvalidArgument("unknown pattern code '" + code + "'");
}

std::optional<Eventuality> match_pattern(const DependencyGraph &graph, int center,
                                         const Pattern &pattern) {
  auto m = match_detail(graph, center, pattern);
  if (!m) return std::nullopt;
  return std::move(m->eventuality);
}

std::vector<int> candidate_centers(const DependencyGraph &graph) {
  std::vector<int> out;
  for (const Token &t : graph.tokens) {
    if (t.upos == "VERB") {
      out.push_back(t.index);
      continue;
    }
    if (t.upos == "ADJ" || t.upos == "NOUN" || t.upos == "PROPN") {
      for (int dep : graph.dependents(t.index)) {
        if (graph.token(dep).deprel == "cop") {
          out.push_back(t.index);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::string> matching_patterns(const DependencyGraph &graph, int center) {
  std::vector<std::string> codes;
  for (const Pattern &p : builtin_patterns())
    if (match_detail(graph, center, p)) codes.push_back(p.code);
  return codes;
}

std::vector<Eventuality> extract_eventualities(const DependencyGraph &graph) {
  std::vector<Match> matches;
  for (int center : candidate_centers(graph)) {
    for (const Pattern &p : builtin_patterns()) {
      if (auto m = match_detail(graph, center, p)) {
        matches.push_back(std::move(*m));
        break;
      }
    }
  }

  std::set<int> claimed;
  for (const Match &m : matches) {
    const int center = m.eventuality.positions[m.eventuality.center];
    for (int b : m.bound)
      if (b != center) claimed.insert(b);
  }

  std::vector<Eventuality> out;
  for (Match &m : matches) {
    if (claimed.count(m.eventuality.positions[m.eventuality.center])) continue;
    out.push_back(std::move(m.eventuality));
  }
  return out;
}

}  // namespace evkg
