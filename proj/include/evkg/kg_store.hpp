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

#ifndef EVKG_KG_STORE_HPP_
#define EVKG_KG_STORE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evkg/eventuality.hpp"
#include "evkg/relation_type.hpp"

namespace evkg {

// A directed eventuality pair and its per-type weights. A weight counts how
// many corpus instances assert the type; bootstrapped labels add 1 each.
struct RelationEdge {
  std::string head;
  std::string tail;
  std::map<RelationType, double> weights;

  double weight(RelationType type) const;
  double total() const;
  bool operator==(const RelationEdge &) const = default;
};

struct Neighbor {
  std::string key;
  double weight = 0.0;
  bool operator==(const Neighbor &) const = default;
};

// Deduplicated eventualities with frequencies plus weighted, typed edges.
// Adjacency is indexed by head and by tail; a word index supports exact
// phrase lookup.
class KnowledgeGraph {
 public:
  using EdgeKey = std::pair<std::string, std::string>;

  // Inserts `e` (keyed by its canonical key) or adds `count` to the stored
  // frequency. Returns the key.
  std::string upsert_eventuality(const Eventuality &e, std::int64_t count = 1);

  // weights[type] += delta. Throws UnknownEventuality for a missing endpoint
  // and InvalidArgument for delta <= 0.
  double upsert_relation(const std::string &head, const std::string &tail, RelationType type,
                         double delta = 1.0);

  bool contains(const std::string &key) const { return eventualities_.count(key) > 0; }
  const Eventuality *find(const std::string &key) const;
  const Eventuality &eventuality(const std::string &key) const;  // throws if absent

  double weight(const std::string &head, RelationType type, const std::string &tail) const;
  const RelationEdge *edge(const std::string &head, const std::string &tail) const;

  // Sorted by descending weight, ties by key.
  std::vector<Neighbor> out_neighbors(const std::string &head, RelationType type) const;
  std::vector<Neighbor> in_neighbors(const std::string &tail, RelationType type) const;

  // Every key reachable by one edge of any type, in key order.
  const std::set<std::string> &successors(const std::string &head) const;
  const std::set<std::string> &predecessors(const std::string &tail) const;

  // Eventualities whose word sequence equals `words`; edges are ignored.
  std::vector<const Eventuality *> match_by_words(const std::vector<std::string> &words) const;
  // Keys of eventualities containing `word` anywhere.
  const std::set<std::string> &keys_with_word(const std::string &word) const;

  // Keeps eventualities with frequency >= min_freq and edges whose pair
  // count (the Co_Occurrence weight, or the largest weight when the edge has
  // no Co_Occurrence entry) reaches min_freq with both endpoints kept.
  KnowledgeGraph filter_core(std::int64_t min_freq = 2) const;

  const std::map<std::string, Eventuality> &eventualities() const { return eventualities_; }
  const std::map<EdgeKey, RelationEdge> &edges() const { return edges_; }
  size_t num_eventualities() const { return eventualities_.size(); }
  size_t num_edges() const { return edges_.size(); }

  // Throws Error describing the first broken invariant (dangling edge,
  // stale index entry, non-positive edge).
  void check_integrity() const;

  bool operator==(const KnowledgeGraph &other) const;

 private:
  std::map<std::string, Eventuality> eventualities_;
  std::map<EdgeKey, RelationEdge> edges_;
  std::map<std::string, std::set<std::string>> out_;
  std::map<std::string, std::set<std::string>> in_;
  std::map<std::string, std::set<std::string>> word_index_;
};

// Pair count used by filter_core.
double pair_count(const RelationEdge &edge);

// Writes `eventualities.jsonl` and `relations.jsonl` into `directory`.
void save(const KnowledgeGraph &graph, const std::filesystem::path &directory);
// Throws ParseError naming the file and line on missing or corrupt input.
KnowledgeGraph load(const std::filesystem::path &directory);

}  // namespace evkg

#endif  // EVKG_KG_STORE_HPP_
