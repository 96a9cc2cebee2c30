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

#include <map>
#include <set>

#include "evkg/conllu.hpp"
#include "evkg/extractor.hpp"
#include "test_support.hpp"

using namespace evkg;
using evkg::testing::load_graphs;

namespace {

DependencyGraph parse_one(const std::string &conllu) {
  auto results = parse_conllu_string(conllu);
  REQUIRE(results.size() == 1);
  REQUIRE(results[0].ok());
  return *results[0].graph;
}

// rows: form upos head deprel
DependencyGraph sentence(const std::vector<std::tuple<std::string, std::string, int, std::string>> &rows) {
  std::string text;
  int i = 0;
  for (const auto &[form, upos, head, rel] : rows)
    text += std::to_string(++i) + "\t" + form + "\t_\t" + upos + "\t_\t_\t" + std::to_string(head) +
            "\t" + rel + "\t_\t_\n";
  return parse_one(text + "\n");
}

}  // namespace

TEST_CASE("each fixture row yields its own pattern and word set") {
  const std::map<std::string, std::string> expected = {
      {"s-v", "dog barks"},
      {"s-v-o", "i love you"},
      {"s-v-a", "he felt ill"},
      {"s-v-o-o", "you give me book"},
      {"s-be-a", "dog is cute"},
      {"s-v-be-a", "i want be slim"},
      {"s-v-be-o", "i want be hero"},
      {"s-v-v-o", "i want eat apple"},
      {"s-v-v", "i want go"},
      {"s-be-a-p-o", "it 's cheap for quality"},
      {"s-v-p-o", "he walks into room"},
      {"s-v-o-p-o", "he plays soccer with me"},
      {"spass-v", "bill is paid"},
      {"spass-v-p-o", "bill is paid by me"},
  };
  const auto graphs = load_graphs("patterns.conllu");
  REQUIRE(graphs.size() == 14);
  std::set<std::string> seen;
  for (const DependencyGraph &g : graphs) {
    CAPTURE(g.sentence_id);
    const auto events = extract_eventualities(g);
    REQUIRE(events.size() == 1);
    CHECK(events[0].pattern == g.sentence_id);
    CHECK(events[0].phrase() == expected.at(g.sentence_id));
    CHECK(events[0].key == canonical_key(events[0]));
    seen.insert(events[0].pattern);
  }
  CHECK(seen.size() == 14);
}

TEST_CASE("a dobj edge rules out s-v so only s-v-o matches") {
  const auto graphs = load_graphs("negative_edge.conllu");
  REQUIRE(graphs.size() == 1);
  CHECK(match_pattern(graphs[0], 2, pattern_by_code("s-v")) == std::nullopt);
  const auto events = extract_eventualities(graphs[0]);
  REQUIRE(events.size() == 1);
  CHECK(events[0].pattern == "s-v-o");
  CHECK(events[0].phrase() == "i have book");
}

TEST_CASE("patterns are mutually exclusive at every centre of the fixtures") {
  for (const std::string file : {"patterns.conllu", "negative_edge.conllu", "connectives.conllu"}) {
    for (const DependencyGraph &g : load_graphs(file)) {
      for (int c = 1; c <= g.size(); ++c) {
        CAPTURE(g.sentence_id);
        CAPTURE(c);
        CHECK(matching_patterns(g, c).size() <= 1);
      }
    }
  }
}

TEST_CASE("optional modifiers are collected, determiners are not") {
  const auto g = sentence({{"The", "DET", 3, "det"},
                           {"big", "ADJ", 3, "amod"},
                           {"dog", "NOUN", 4, "nsubj"},
                           {"barks", "VERB", 0, "root"},
                           {"loudly", "ADV", 4, "advmod"}});
  const auto events = extract_eventualities(g);
  REQUIRE(events.size() == 1);
  CHECK(events[0].phrase() == "big dog barks loudly");
  CHECK(events[0].pattern == "s-v");
}

TEST_CASE("negation and auxiliaries stay inside the eventuality") {
  const auto g = sentence({{"I", "PRON", 4, "nsubj"},
                           {"do", "AUX", 4, "aux"},
                           {"not", "PART", 4, "neg"},
                           {"go", "VERB", 0, "root"}});
  const auto events = extract_eventualities(g);
  REQUIRE(events.size() == 1);
  CHECK(events[0].phrase() == "i do not go");
}

TEST_CASE("seed connective words are not absorbed as modifiers") {
  const auto g = sentence({{"I", "PRON", 3, "nsubj"},
                           {"am", "AUX", 3, "cop"},
                           {"hungry", "ADJ", 0, "root"},
                           {",", "PUNCT", 8, "punct"},
                           {"so", "ADV", 8, "advmod"},
                           {"I", "PRON", 8, "nsubj"},
                           {"then", "ADV", 8, "advmod"},
                           {"eat", "VERB", 3, "conj"},
                           {"anything", "PRON", 8, "dobj"}});
  const auto events = extract_eventualities(g);
  REQUIRE(events.size() == 2);
  CHECK(events[0].phrase() == "i am hungry");
  CHECK(events[1].phrase() == "i eat anything");
}

TEST_CASE("an xcomp chain keeps only the governing match") {
  const auto graphs = load_graphs("patterns.conllu");
  for (const DependencyGraph &g : graphs) {
    if (g.sentence_id != "s-v-v-o") continue;
    const auto events = extract_eventualities(g);
    REQUIRE(events.size() == 1);
    CHECK(events[0].words.front() == "i");
  }
}

TEST_CASE("equal words and edges share a key; different labels do not") {
  const Eventuality a = make_eventuality({"dog", "barks"}, {{1, "nsubj", 0}}, "s-v");
  const Eventuality b = make_eventuality({"dog", "barks"}, {{1, "nsubj", 0}}, "s-v");
  const Eventuality c = make_eventuality({"dog", "barks"}, {{1, "nsubjpass", 0}}, "spass-v");
  CHECK(a.key == b.key);
  CHECK(a.key != c.key);
  CHECK(words_of_key(a.key) == std::vector<std::string>{"dog", "barks"});
}

TEST_CASE("a sentence without a verb or copula yields nothing") {
  const auto g = sentence({{"Good", "ADJ", 2, "amod"}, {"morning", "NOUN", 0, "root"}});
  CHECK(extract_eventualities(g).empty());
}

TEST_CASE("extraction time grows about linearly with corpus size") {
  auto graphs = load_graphs("patterns.conllu");
  auto run = [&](int copies) {
    evkg::testing::Stopwatch w;
    std::size_t n = 0;
    for (int k = 0; k < copies; ++k)
      for (const auto &g : graphs) n += extract_eventualities(g).size();
    CHECK(n == static_cast<std::size_t>(copies) * graphs.size());
    return w.seconds();
  };
  run(50);  // warm up
  const double small = run(400), large = run(1600);
  // Four times the input should not cost much more than four times the time.
  CHECK(large < 4.0 * small * 2.0 + 0.05);
}
