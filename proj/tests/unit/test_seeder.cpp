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

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <fstream>

#include "evkg/connectives.hpp"
#include "evkg/extractor.hpp"
#include "evkg/seeder.hpp"
#include "evkg/serialization.hpp"
#include "test_support.hpp"

using namespace evkg;
using evkg::testing::data_path;
using evkg::testing::load_graphs;

namespace {

DependencyGraph sentence(const std::vector<std::tuple<std::string, std::string, int, std::string>> &rows) {
  std::string text;
  int i = 0;
  for (const auto &[form, upos, head, rel] : rows)
    text += std::to_string(++i) + "\t" + form + "\t_\t" + upos + "\t_\t_\t" + std::to_string(head) +
            "\t" + rel + "\t_\t_\n";
  auto results = parse_conllu_string(text + "\n");
  REQUIRE(results.size() == 1);
  REQUIRE(results[0].ok());
  return *results[0].graph;
}

std::set<RelationType> seeds_of(const DependencyGraph &g) {
  const auto events = extract_eventualities(g);
  const auto instances = build_instances(g, events);
  REQUIRE(instances.size() == 1);
  return match_seed(instances[0], g);
}

}  // namespace

TEST_CASE("the seed inventory") {
  const auto &rules = seed_rules();
  CHECK(rules.size() == 34);
  auto has = [&](const std::string &text, RelationType t) {
    return std::any_of(rules.begin(), rules.end(),
                       [&](const SeedRule &r) { return r.text() == text && r.relation == t; });
  };
  CHECK(has("so that", RelationType::kResult));
  CHECK(has("because", RelationType::kReason));
  CHECK(has("except", RelationType::kException));
  CHECK(has("instead", RelationType::kChosenAlternative));
  for (const SeedRule &r : rules) {
    CHECK(r.text() != "while");
    CHECK(!r.connective.empty());
    for (const auto &w : r.connective)
      CHECK(std::none_of(w.begin(), w.end(), [](unsigned char c) { return std::isupper(c); }));
  }
  std::set<RelationType> covered;
  for (const SeedRule &r : rules) covered.insert(r.relation);
  CHECK(covered.size() == 14);
  CHECK(!covered.count(RelationType::kCoOccurrence));
}

TEST_CASE("the connective fixture yields exactly the expected seeds") {
  std::ifstream in(data_path("connectives.expected.json"));
  const Json expected = Json::parse(in);
  const auto graphs = load_graphs("connectives.conllu");
  REQUIRE(graphs.size() == 20);
  std::set<RelationType> covered;
  for (const DependencyGraph &g : graphs) {
    CAPTURE(g.sentence_id);
    const Json &want = expected.at(g.sentence_id);
    const auto events = extract_eventualities(g);
    REQUIRE(events.size() == 2);
    const auto instances = build_instances(g, events);
    REQUIRE(instances.size() == 1);
    const TrainingInstance &x = instances[0];
    std::string e1, e2;
    for (const auto &w : words_of_key(x.e1_key)) e1 += (e1.empty() ? "" : " ") + w;
    for (const auto &w : words_of_key(x.e2_key)) e2 += (e2.empty() ? "" : " ") + w;
    CHECK(e1 == want["e1"].get<std::string>());
    CHECK(e2 == want["e2"].get<std::string>());
    std::set<RelationType> labels;
    for (const auto &name : want["labels"]) labels.insert(relation_from_name(name.get<std::string>()));
    CHECK(match_seed(x) == labels);
    CHECK(match_seed(x, g) == labels);
    covered.insert(labels.begin(), labels.end());
  }
  CHECK(covered.size() == 14);
}

TEST_CASE("'while' is not a seed connective") {
  const auto graphs = load_graphs("while.conllu");
  REQUIRE(graphs.size() == 1);
  CHECK(seeds_of(graphs[0]).empty());
}

TEST_CASE("the comma before a connective is optional") {
  const auto ok = sentence({{"I", "PRON", 3, "nsubj"},
                            {"am", "AUX", 3, "cop"},
                            {"hungry", "ADJ", 0, "root"},
                            {"so", "CCONJ", 6, "cc"},
                            {"i", "PRON", 6, "nsubj"},
                            {"have", "VERB", 3, "conj"},
                            {"lunch", "NOUN", 6, "dobj"}});
  CHECK(seeds_of(ok) == std::set<RelationType>{RelationType::kResult});
}

TEST_CASE("several connectives give a multi-label instance") {
  const auto g = sentence({{"i", "PRON", 3, "nsubj"},
                           {"am", "AUX", 3, "cop"},
                           {"tired", "ADJ", 0, "root"},
                           {",", "PUNCT", 8, "punct"},
                           {"so", "CCONJ", 8, "cc"},
                           {"then", "ADV", 8, "advmod"},
                           {"i", "PRON", 8, "nsubj"},
                           {"sleep", "VERB", 3, "conj"}});
  CHECK(seeds_of(g) == std::set<RelationType>{RelationType::kResult, RelationType::kPrecedence});
}

TEST_CASE("a connective attached outside both eventualities does not fire") {
  // "because" hangs off the root noun of an unextracted fragment.
  const auto g = sentence({{"i", "PRON", 2, "nsubj"},
                           {"eat", "VERB", 0, "root"},
                           {"because", "SCONJ", 6, "mark"},
                           {"i", "PRON", 5, "nsubj"},
                           {"run", "VERB", 2, "advcl"},
                           {"reasons", "NOUN", 2, "dep"}});
  const auto events = extract_eventualities(g);
  REQUIRE(events.size() == 2);
  const auto instances = build_instances(g, events);
  REQUIRE(instances.size() == 1);
  CHECK(match_seed(instances[0], g).empty());
}

TEST_CASE("instances cover every pair in text order") {
  const auto patterns = load_graphs("patterns.conllu");
  const auto g = patterns.front();
  const auto one = extract_eventualities(g);
  CHECK(build_instances(g, one).empty());
  CHECK(co_occurrence_pairs(one).empty());

  Eventuality a = evkg::testing::simple_event("a", "x"), b = evkg::testing::simple_event("b", "y"),
              c = evkg::testing::simple_event("c", "z");
  a.positions = {1, 2};
  b.positions = {3, 4};
  c.positions = {5, 6};
  DependencyGraph six = sentence({{"a", "PRON", 2, "nsubj"}, {"x", "VERB", 0, "root"},
                                  {"b", "PRON", 4, "nsubj"}, {"y", "VERB", 2, "conj"},
                                  {"c", "PRON", 6, "nsubj"}, {"z", "VERB", 2, "conj"}});
  CHECK(build_instances(six, {a, b}).size() == 1);
  const auto three = build_instances(six, {c, a, b});
  REQUIRE(three.size() == 3);
  for (const auto &x : three) {
    CHECK(x.e1_key != x.e2_key);
    CHECK(x.context.e1_positions.front() < x.context.e2_positions.front());
  }
  const auto pairs = co_occurrence_pairs({c, a, b});
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::make_pair(a.key, b.key));
  CHECK(pairs[1] == std::make_pair(a.key, c.key));
  CHECK(pairs[2] == std::make_pair(b.key, c.key));
}

TEST_CASE("seeds are a subset of co-occurrence pairs and sound on connective-free gaps") {
  for (const std::string file : {"connectives.conllu", "while.conllu", "patterns.conllu"}) {
    for (const DependencyGraph &g : load_graphs(file)) {
      const auto events = extract_eventualities(g);
      const auto pairs = co_occurrence_pairs(events);
      for (const TrainingInstance &x : build_instances(g, events)) {
        const auto labels = match_seed(x);
        if (!labels.empty())
          CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(x.e1_key, x.e2_key)) !=
                pairs.end());
        bool gap_has_connective = false;
        for (int p = x.span_gap.first; p <= x.span_gap.second; ++p)
          for (const auto &lead : connective_lead_words())
            if (g.token(p).form == lead) gap_has_connective = true;
        const bool trailing = g.tokens.back().form == "instead";
        if (!gap_has_connective && !trailing) CHECK(labels.empty());
      }
    }
  }
}

TEST_CASE("instances round-trip through JSON with their context") {
  const auto graphs = load_graphs("connectives.conllu");
  for (const DependencyGraph &g : graphs) {
    for (TrainingInstance x : build_instances(g, extract_eventualities(g))) {
      x.labels = match_seed(x);
      const TrainingInstance y = instance_from_json(Json::parse(to_jsonl_line(instance_to_json(x))));
      CHECK(y.id() == x.id());
      CHECK(y.labels == x.labels);
      CHECK(y.span_gap == x.span_gap);
      CHECK(y.context.tokens == x.context.tokens);
      CHECK(match_seed(y) == x.labels);
    }
  }
}
