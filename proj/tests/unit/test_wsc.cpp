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

#include <fstream>

#include "evkg/error.hpp"
#include "evkg/wsc.hpp"
#include "graph_builder.hpp"
#include "test_support.hpp"

using namespace evkg;

namespace {

KnowledgeGraph fixture_graph() {
  return evkg::testing::graph_from_sentences(evkg::testing::load_graphs("wsc/kg.conllu"));
}

std::vector<WscQuestion> questions(const std::string &name) {
  std::ifstream in(evkg::testing::data_path(name));
  return read_questions(in, name);
}

// Same sentence with the connective token inserted before the pronoun clause.
Json with_connective(const Json &base, const std::string &word, const std::string &upos,
                     const std::string &rel) {
  Json q = base;
  Json tokens = Json::array();
  int index = 0;
  for (const Json &t : base["tokens"]) {
    ++index;
    if (index == 7) tokens.push_back(Json::array({word, upos, 10, rel}));
    Json copy = t;
    const int head = copy[2].get<int>();
    if (head >= 7) copy[2] = head + 1;
    tokens.push_back(copy);
  }
  q["tokens"] = tokens;
  q["pronoun"] = 8;
  return q;
}

}  // namespace

TEST_CASE("question files parse and validate") {
  const auto qs = questions("wsc/questions.jsonl");
  REQUIRE(qs.size() == 2);
  CHECK(qs[0].id == "q97");
  CHECK(qs[0].candidate_word(0) == "fish");
  CHECK(qs[0].candidate_word(1) == "worm");
  CHECK(qs[0].answer == 0);
  CHECK(qs[1].answer == 1);

  Json bad = Json::parse(evkg::testing::slurp(evkg::testing::data_path("wsc/tie.jsonl")));
  bad["pronoun"] = 2;
  CHECK_THROWS_AS(question_from_json(bad), InvalidArgument);
  bad["pronoun"] = 40;
  CHECK_THROWS_AS(question_from_json(bad), InvalidArgument);
  std::istringstream broken("{\"id\": \"x\"}\n");
  CHECK_THROWS(read_questions(broken, "broken"));
}

TEST_CASE("placeholders replace the candidates and the pronoun") {
  const auto q = questions("wsc/questions.jsonl")[0];
  const PreparedQuestion p = prepare(q);
  REQUIRE(p.sides[0].usable());
  REQUIRE(p.sides[1].usable());
  CHECK(p.sides[0].candidate->display() == "X ate worm");
  CHECK(p.sides[1].candidate->display() == "fish ate Y");
  CHECK(p.sides[0].pronoun->display() == "P was hungry");
  CHECK(p.sides[0].relation == RelationType::kCoOccurrence);
  CHECK(p.sides[0].candidate_first);
}

TEST_CASE("the hungry and tasty questions are answered from edge counts") {
  const KnowledgeGraph g = fixture_graph();
  const auto qs = questions("wsc/questions.jsonl");
  const WscPrediction hungry = resolve(g, qs[0]);
  CHECK(hungry.scores[0] == 18);
  CHECK(hungry.scores[1] == 1);
  CHECK(hungry.choice == 0);
  const WscPrediction tasty = resolve(g, qs[1]);
  CHECK(tasty.scores[0] == 0);
  CHECK(tasty.scores[1] == 7);
  CHECK(tasty.choice == 1);

  const WscSummary s = summarize(qs, {hungry, tasty});
  CHECK(s.correct == 2);
  CHECK(s.precision == 1.0);
  CHECK(s.overall == 1.0);
}

TEST_CASE("equal support abstains") {
  const auto tie = questions("wsc/tie.jsonl");
  REQUIRE(tie.size() == 1);
  const WscPrediction p = resolve(fixture_graph(), tie[0]);
  CHECK(p.scores[0] == 3);
  CHECK(p.scores[1] == 3);
  CHECK(!p.choice);
  const WscSummary s = summarize(tie, {p});
  CHECK(s.abstain == 1);
  CHECK(!s.precision);
  CHECK(s.overall == 0.5);
  CHECK(!resolve(KnowledgeGraph{}, tie[0]).choice);
}

TEST_CASE("an empty graph supports nothing") {
  for (const auto &q : questions("wsc/questions.jsonl")) {
    const WscPrediction p = resolve(KnowledgeGraph{}, q);
    CHECK(p.scores[0] == 0);
    CHECK(p.scores[1] == 0);
    CHECK(!p.choice);
  }
}

TEST_CASE("the placeholder words must agree") {
  // "cat ate worm , dog was hungry" matches both patterns but not the word.
  const std::string text =
      "1\tcat\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n2\tate\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tworm\t_\tNOUN\t_\t_\t2\tdobj\t_\t_\n4\t,\t_\tPUNCT\t_\t_\t7\tpunct\t_\t_\n"
      "5\tdog\t_\tNOUN\t_\t_\t7\tnsubj\t_\t_\n6\twas\t_\tAUX\t_\t_\t7\tcop\t_\t_\n"
      "7\thungry\t_\tADJ\t_\t_\t2\tconj\t_\t_\n\n";
  const auto parsed = parse_conllu_string(text);
  REQUIRE(parsed[0].ok());
  const KnowledgeGraph g = evkg::testing::graph_from_sentences({*parsed[0].graph});
  CHECK(g.edges().size() == 1);
  const auto q = questions("wsc/questions.jsonl")[0];
  const WscPrediction p = resolve(g, q);
  CHECK(p.scores[0] == 0);
  CHECK(p.scores[1] == 0);
}

TEST_CASE("a seed connective between the clauses sets the relation") {
  const Json base = Json::parse(evkg::testing::slurp(evkg::testing::data_path("wsc/tie.jsonl")));
  const WscQuestion because = question_from_json(with_connective(base, "because", "SCONJ", "mark"));
  const PreparedQuestion p = prepare(because);
  REQUIRE(p.sides[0].usable());
  CHECK(p.sides[0].relation == RelationType::kReason);
  CHECK(p.sides[1].relation == RelationType::kReason);
  // The fixture graph only has Co_Occurrence edges, so nothing supports a Reason.
  const WscPrediction r = resolve(fixture_graph(), because);
  CHECK(r.scores[0] == 0);
  CHECK(!r.choice);
}

TEST_CASE("a pronoun outside every eventuality scores zero") {
  Json q = Json::parse(evkg::testing::slurp(evkg::testing::data_path("wsc/tie.jsonl")));
  // Drop the copula so "it ... small" no longer forms an eventuality.
  q["tokens"][7] = Json::array({"very", "ADV", 9, "advmod"});
  const WscQuestion broken = question_from_json(q);
  const WscPrediction p = resolve(fixture_graph(), broken);
  CHECK(!p.extractable[0]);
  CHECK(!p.extractable[1]);
  CHECK(p.scores[0] == 0);
  CHECK(!p.choice);
}

TEST_CASE("swapping the candidates swaps the prediction") {
  const KnowledgeGraph g = fixture_graph();
  auto all = questions("wsc/questions.jsonl");
  const auto tie = questions("wsc/tie.jsonl");
  all.insert(all.end(), tie.begin(), tie.end());
  for (const WscQuestion &q : all) {
    WscQuestion swapped = q;
    std::swap(swapped.candidates[0], swapped.candidates[1]);
    const WscPrediction a = resolve(g, q), b = resolve(g, swapped);
    CHECK(a.scores[0] == b.scores[1]);
    CHECK(a.scores[1] == b.scores[0]);
    if (a.choice)
      CHECK(b.choice == 1 - *a.choice);
    else
      CHECK(!b.choice);
  }
}

TEST_CASE("adding a supporting edge never lowers the score") {
  KnowledgeGraph g = fixture_graph();
  const auto q = questions("wsc/tie.jsonl")[0];
  std::size_t before = resolve(g, q).scores[0];
  const std::vector<std::string> extra = {"yak", "emu", "ox"};
  for (const std::string &w : extra) {
    const std::string text =
        "1\t" + w + "\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n2\tate\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
        "3\tworm\t_\tNOUN\t_\t_\t2\tdobj\t_\t_\n4\t" + w +
        "\t_\tNOUN\t_\t_\t6\tnsubj\t_\t_\n5\twas\t_\tAUX\t_\t_\t6\tcop\t_\t_\n"
        "6\tsmall\t_\tADJ\t_\t_\t2\tconj\t_\t_\n\n";
    const auto more = evkg::testing::graph_from_sentences({*parse_conllu_string(text)[0].graph});
    for (const auto &[key, e] : more.eventualities()) g.upsert_eventuality(e, e.frequency);
    for (const auto &[pair, edge] : more.edges())
      for (RelationType r : all_relation_types())
        if (edge.weight(r) > 0) g.upsert_relation(pair.first, pair.second, r, edge.weight(r));
    const WscPrediction p = resolve(g, q);
    CHECK(p.scores[0] >= before);
    CHECK(p.scores[0] == before + 1);
    before = p.scores[0];
  }
  CHECK(resolve(g, q).choice == 0);
}

TEST_CASE("the report carries predictions and aggregates") {
  const KnowledgeGraph g = fixture_graph();
  auto qs = questions("wsc/questions.jsonl");
  const auto tie = questions("wsc/tie.jsonl");
  qs.insert(qs.end(), tie.begin(), tie.end());
  std::vector<WscPrediction> preds;
  for (const auto &q : qs) preds.push_back(resolve(g, q));
  const Json report = wsc_report(qs, preds);
  REQUIRE(report["questions"].size() == 3);
  CHECK(report["questions"][0]["prediction"] == "fish");
  CHECK(report["questions"][1]["prediction"] == "worm");
  CHECK(report["questions"][2]["prediction"].is_null());
  CHECK(report["questions"][2]["outcome"] == "abstain");
  CHECK(report["summary"]["A_p"] == 1.0);
  CHECK(report["summary"]["A_o"].get<double>() == doctest::Approx(2.5 / 3));
}
