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

#include <cmath>
#include <random>

#include "evkg/error.hpp"
#include "evkg/inference.hpp"
#include "daily_life.hpp"
#include "inference_checks.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace evkg;
using evkg::testing::simple_event;

namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kScaleTol = 1e-12;

struct Diamond {
  KnowledgeGraph g;
  std::string h, m1, m2, t;
};

Diamond diamond() {
  Diamond d;
  d.h = d.g.upsert_eventuality(simple_event("h", "x"), 1);
  d.m1 = d.g.upsert_eventuality(simple_event("m1", "x"), 1);
  d.m2 = d.g.upsert_eventuality(simple_event("m2", "x"), 1);
  d.t = d.g.upsert_eventuality(simple_event("t", "x"), 1);
  d.g.upsert_relation(d.h, d.m1, RelationType::kResult, 1);
  d.g.upsert_relation(d.h, d.m2, RelationType::kResult, 1);
  d.g.upsert_relation(d.m1, d.t, RelationType::kPrecedence, 1);
  d.g.upsert_relation(d.m2, d.t, RelationType::kPrecedence, 1);
  return d;
}

double get(const KeyDistribution &m, const std::string &k) {
  auto it = m.find(k);
  return it == m.end() ? 0.0 : it->second;
}

double get(const TypeDistribution &m, RelationType k) {
  auto it = m.find(k);
  return it == m.end() ? 0.0 : it->second;
}

}  // namespace

TEST_CASE("one-hop tails normalise the typed weights") {
  KnowledgeGraph g;
  const auto h = g.upsert_eventuality(simple_event("h", "x"), 1);
  const auto t1 = g.upsert_eventuality(simple_event("t1", "x"), 1);
  const auto t2 = g.upsert_eventuality(simple_event("t2", "x"), 1);
  g.upsert_relation(h, t1, RelationType::kResult, 3);
  g.upsert_relation(h, t2, RelationType::kResult, 1);
  g.upsert_relation(h, t2, RelationType::kReason, 5);
  InferenceEngine e(g);
  const auto d = e.tail_distribution(h, RelationType::kResult);
  CHECK(d.size() == 2);
  CHECK(get(d, t1) == doctest::Approx(0.75));
  CHECK(get(d, t2) == doctest::Approx(0.25));
  CHECK(get(e.tail_distribution(h, RelationType::kReason), t2) == 1.0);
  CHECK(e.tail_distribution(h, RelationType::kPrecedence).empty());
  CHECK_THROWS_AS(e.tail_distribution("no such|", RelationType::kResult), UnknownEventuality);
}

TEST_CASE("two hops over a diamond") {
  const Diamond d = diamond();
  InferenceEngine e(d.g);
  const auto dist = e.tail_distribution(d.h, RelationType::kResult, RelationType::kPrecedence);
  CHECK(dist.size() == 1);
  CHECK(get(dist, d.t) == doctest::Approx(1.0));

  const auto results = e.retrieve(d.h, {RelationType::kResult, RelationType::kPrecedence}, 5);
  REQUIRE(results.size() == 1);
  CHECK(results[0].target == d.t);
  CHECK(results[0].support == std::vector<std::string>{d.m1, d.m2});

  const auto back = e.retrieve(d.t, {RelationType::kResult, RelationType::kPrecedence}, 5,
                               Direction::kBackward);
  REQUIRE(back.size() == 1);
  CHECK(back[0].target == d.h);
  CHECK(back[0].probability == doctest::Approx(1.0));
}

TEST_CASE("relation distribution and prior") {
  KnowledgeGraph g;
  const auto h = g.upsert_eventuality(simple_event("h", "x"), 1);
  const auto t = g.upsert_eventuality(simple_event("t", "x"), 1);
  const auto u = g.upsert_eventuality(simple_event("u", "x"), 1);
  g.upsert_relation(h, t, RelationType::kResult, 3);
  g.upsert_relation(h, t, RelationType::kReason, 1);
  g.upsert_relation(h, u, RelationType::kResult, 3);
  g.upsert_relation(h, u, RelationType::kReason, 1);
  InferenceEngine e(g);
  const auto rel = e.relation_distribution(h, t);
  CHECK(get(rel, RelationType::kResult) == doctest::Approx(0.75));
  CHECK(get(rel, RelationType::kReason) == doctest::Approx(0.25));
  CHECK(e.relation_distribution(t, h).empty());
  CHECK(e.relation_prior(h, RelationType::kResult) == doctest::Approx(0.75));
  CHECK(e.relation_prior(t, RelationType::kResult) == 0.0);
  CHECK_THROWS_AS(e.relation_distribution(h, "gone|"), UnknownEventuality);
}

TEST_CASE("two-relation path on a three-node chain, with and without co-occurrence") {
  KnowledgeGraph g;
  const auto hungry = g.upsert_eventuality(simple_event("i", "hunger"), 1);
  const auto tired = g.upsert_eventuality(simple_event("i", "tire"), 1);
  const auto sleep = g.upsert_eventuality(simple_event("i", "sleep"), 1);
  g.upsert_relation(hungry, tired, RelationType::kSynchronous, 1);
  g.upsert_relation(hungry, tired, RelationType::kCoOccurrence, 1);
  g.upsert_relation(tired, sleep, RelationType::kResult, 1);
  // P(Sync | hungry) = 1/2, P(tired | Sync, hungry) = 1, P(Result | tired, sleep) = 1.
  InferenceEngine with(g);
  CHECK(with.path_probability(hungry, sleep, RelationType::kSynchronous, RelationType::kResult) ==
        doctest::Approx(0.5));
  InferenceEngine without(g, InferenceOptions{false});
  CHECK(without.path_probability(hungry, sleep, RelationType::kSynchronous,
                                 RelationType::kResult) == doctest::Approx(1.0));
  CHECK(with.path_probability(sleep, hungry, RelationType::kResult, RelationType::kResult) == 0.0);

  const auto paths = without.relation_paths(hungry, sleep);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].target == "Synchronous,Result");
  CHECK(paths[0].support == std::vector<std::string>{tired});
}

TEST_CASE("retrieve validates its arguments and truncates") {
  const Diamond d = diamond();
  InferenceEngine e(d.g);
  CHECK_THROWS_AS(e.retrieve(d.h, {}, 3), InvalidArgument);
  CHECK_THROWS_AS(e.retrieve(d.h, {RelationType::kResult, RelationType::kResult,
                                   RelationType::kResult}, 3),
                  InvalidArgument);
  CHECK_THROWS_AS(e.retrieve(d.h, {RelationType::kResult}, 0), InvalidArgument);
  CHECK(e.retrieve(d.h, {RelationType::kResult}, 100).size() == 2);
  const auto one = e.retrieve(d.h, {RelationType::kResult}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].target == d.m1);  // tie broken by key
}

TEST_CASE("the hungry query ranks having lunch first") {
  const auto f = evkg::testing::make_daily_life();
  InferenceEngine e(f.graph);
  const auto r = e.retrieve(f.hungry, {RelationType::kResult}, 5);
  REQUIRE(r.size() == 2);
  CHECK(r[0].target == f.lunch);
  CHECK(r[0].probability == doctest::Approx(8.0 / 11.0));
  // Hunger is the reason for lunch rather than the other way round.
  CHECK(get(e.relation_distribution(f.lunch, f.hungry), RelationType::kReason) > 0.0);
  CHECK(e.relation_distribution(f.hungry, f.lunch).count(RelationType::kReason) == 0);
  // Two hops: sleeping and resting on a bench share the reason "i am tired".
  const auto shared = e.retrieve(f.sleep, {RelationType::kReason, RelationType::kReason}, 5,
                                 Direction::kForward);
  CHECK(shared.empty());
  const auto siblings = e.head_distribution(f.tired, RelationType::kReason);
  CHECK(get(siblings, f.bench) == doctest::Approx(0.25));
}

TEST_CASE("normalisation identities on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = evkg::testing::random_dense_graph(rng);
    InferenceEngine e(d.graph);
    for (const auto &h : d.keys) {
      double prior_sum = 0.0;
      for (RelationType r : d.types) {
        prior_sum += e.relation_prior(h, r);
        const auto one = e.tail_distribution(h, r);
        double s = 0.0;
        for (const auto &[k, p] : one) s += p;
        if (!one.empty()) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        for (RelationType r2 : d.types) {
          double s2 = 0.0;
          for (const auto &[k, p] : e.tail_distribution(h, r, r2)) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-12);
            s2 += p;
          }
          CHECK(s2 <= 1.0 + 1e-12);
        }
      }
      if (!d.graph.successors(h).empty()) CHECK(prior_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("every quantity matches the brute-force oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const bool with_co = trial % 2 == 0;
    const auto d = evkg::testing::random_dense_graph(rng);
    InferenceEngine e(d.graph, InferenceOptions{with_co});
    const evkg::testing::Oracle o{d, with_co};
    for (int h = 0; h < d.n(); ++h) {
      for (std::size_t r1 = 0; r1 < d.types.size(); ++r1) {
        const auto one = e.tail_distribution(d.keys[h], d.types[r1]);
        const auto heads = e.head_distribution(d.keys[h], d.types[r1]);
        CHECK(std::abs(e.relation_prior(d.keys[h], d.types[r1]) - o.prior(h, r1)) <= kOracleTol);
        for (int t = 0; t < d.n(); ++t) {
          CHECK(std::abs(get(one, d.keys[t]) - o.tail(h, r1, t)) <= kOracleTol);
          CHECK(std::abs(get(heads, d.keys[t]) - o.head(h, r1, t)) <= kOracleTol);
        }
        for (std::size_t r2 = 0; r2 < d.types.size(); ++r2) {
          const auto two = e.tail_distribution(d.keys[h], d.types[r1], d.types[r2]);
          const auto back = e.head_distribution(d.keys[h], d.types[r1], d.types[r2]);
          for (int t = 0; t < d.n(); ++t) {
            CHECK(std::abs(get(two, d.keys[t]) - o.tail2(h, r1, r2, t)) <= kOracleTol);
            CHECK(std::abs(get(back, d.keys[t]) - o.head2(h, r1, r2, t)) <= kOracleTol);
          }
        }
      }
      for (int t = 0; t < d.n(); t += 3) {
        const auto rel = e.relation_distribution(d.keys[h], d.keys[t]);
        for (std::size_t r = 0; r < d.types.size(); ++r) {
          CHECK(std::abs(get(rel, d.types[r]) - o.relation(h, t, r)) <= kOracleTol);
          for (std::size_t r2 = 0; r2 < d.types.size(); ++r2)
            CHECK(std::abs(e.path_probability(d.keys[h], d.keys[t], d.types[r], d.types[r2]) -
                           o.path(h, t, r, r2)) <= kOracleTol);
        }
      }
    }
  }
}

TEST_CASE("retrieval cost follows the branching factor") {
  // Regular graph: every node has exactly A Result successors.
  for (int A : {2, 3, 5}) {
    KnowledgeGraph g;
    const int n = 40;
    std::vector<std::string> keys;
    for (int i = 0; i < n; ++i) keys.push_back(g.upsert_eventuality(simple_event("n" + std::to_string(i), "x"), 1));
    for (int i = 0; i < n; ++i)
      for (int k = 1; k <= A; ++k) g.upsert_relation(keys[i], keys[(i + k) % n], RelationType::kResult, 1);
    InferenceEngine e(g);
    QueryStats one, two;
    e.retrieve(keys[0], {RelationType::kResult}, 10, Direction::kForward, &one);
    e.retrieve(keys[0], {RelationType::kResult, RelationType::kResult}, 10, Direction::kForward, &two);
    CHECK(one.edges_visited == static_cast<std::size_t>(A));
    CHECK(two.edges_visited == static_cast<std::size_t>(A + A * A));
  }
}

TEST_CASE("outputs do not change when every weight is scaled") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = evkg::testing::random_dense_graph(rng);
    for (double c : {0.5, 3.0, 100.0}) {
      CAPTURE(c);
      CHECK(evkg::testing::scale_deviation(d, c, trial % 2 == 0) <= kScaleTol);
    }
  }
}

TEST_CASE("the shared whole-graph oracle comparison agrees") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(evkg::testing::oracle_deviation(evkg::testing::random_dense_graph(rng), trial % 2 == 0) <=
          kOracleTol);
}
