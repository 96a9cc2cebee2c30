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

#include "evkg/kg_store.hpp"

#include <algorithm>
#include <fstream>

#include "evkg/error.hpp"
#include "evkg/serialization.hpp"

namespace evkg {
namespace {

const std::set<std::string> kEmptySet;

std::vector<Neighbor> sorted(std::vector<Neighbor> v) {
  std::sort(v.begin(), v.end(), [](const Neighbor &a, const Neighbor &b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.key < b.key;
  });
  return v;
}

bool same_eventuality(const Eventuality &a, const Eventuality &b) {
  return a.key == b.key && a.words == b.words && a.upos == b.upos && a.edges == b.edges &&
         a.pattern == b.pattern && a.frequency == b.frequency;
}

}  // namespace

double RelationEdge::weight(RelationType type) const {
  auto it = weights.find(type);
  return it == weights.end() ? 0.0 : it->second;
}

double RelationEdge::total() const {
  double sum = 0.0;
  for (const auto &[type, w] : weights) sum += w;
  return sum;
}

std::string KnowledgeGraph::upsert_eventuality(const Eventuality &e, std::int64_t count) {
  if (count < 1) throw InvalidArgument("upsert_eventuality: count must be >= 1");
  std::string key = e.key.empty() ? canonical_key(e) : e.key;
  auto it = eventualities_.find(key);
  if (it != eventualities_.end()) {
    it->second.frequency += count;
    return key;
  }
  Eventuality stored = e;
  stored.key = key;
  stored.positions.clear();
  stored.frequency = count;
  for (const std::string &w : stored.words) word_index_[w].insert(key);
  eventualities_.emplace(key, std::move(stored));
  return key;
}

double KnowledgeGraph::upsert_relation(const std::string &head, const std::string &tail,
                                       RelationType type, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("upsert_relation: delta must be > 0");
  if (!contains(head)) throw UnknownEventuality(head);
  if (!contains(tail)) throw UnknownEventuality(tail);
  auto [it, inserted] = edges_.try_emplace({head, tail});
  if (inserted) {
    it->second.head = head;
    it->second.tail = tail;
    out_[head].insert(tail);
    in_[tail].insert(head);
  }
  return it->second.weights[type] += delta;
}

const Eventuality *KnowledgeGraph::find(const std::string &key) const {
  auto it = eventualities_.find(key);
  return it == eventualities_.end() ? nullptr : &it->second;
}

const Eventuality &KnowledgeGraph::eventuality(const std::string &key) const {
  const Eventuality *e = find(key);
  if (!e) throw UnknownEventuality(key);
  return *e;
}

double KnowledgeGraph::weight(const std::string &head, RelationType type,
                              const std::string &tail) const {
  const RelationEdge *e = edge(head, tail);
  return e ? e->weight(type) : 0.0;
}

const RelationEdge *KnowledgeGraph::edge(const std::string &head, const std::string &tail) const {
  auto it = edges_.find({head, tail});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<Neighbor> KnowledgeGraph::out_neighbors(const std::string &head,
                                                    RelationType type) const {
  std::vector<Neighbor> out;
  for (const std::string &tail : successors(head))
    if (double w = weight(head, type, tail); w > 0.0) out.push_back({tail, w});
  return sorted(std::move(out));
}

std::vector<Neighbor> KnowledgeGraph::in_neighbors(const std::string &tail,
                                                   RelationType type) const {
  std::vector<Neighbor> out;
  for (const std::string &head : predecessors(tail))
    if (double w = weight(head, type, tail); w > 0.0) out.push_back({head, w});
  return sorted(std::move(out));
}

const std::set<std::string> &KnowledgeGraph::successors(const std::string &head) const {
  auto it = out_.find(head);
  return it == out_.end() ? kEmptySet : it->second;
}

const std::set<std::string> &KnowledgeGraph::predecessors(const std::string &tail) const {
  auto it = in_.find(tail);
  return it == in_.end() ? kEmptySet : it->second;
}

const std::set<std::string> &KnowledgeGraph::keys_with_word(const std::string &word) const {
  auto it = word_index_.find(word);
  return it == word_index_.end() ? kEmptySet : it->second;
}

std::vector<const Eventuality *> KnowledgeGraph::match_by_words(
    const std::vector<std::string> &words) const {
  std::vector<const Eventuality *> out;
  if (words.empty()) return out;
  for (const std::string &key : keys_with_word(words.front())) {
    const Eventuality &e = eventualities_.at(key);
    if (e.words == words) out.push_back(&e);
  }
  return out;
}

double pair_count(const RelationEdge &edge) {
  double co = edge.weight(RelationType::kCoOccurrence);
  if (co > 0.0) return co;
  double best = 0.0;
  for (const auto &[type, w] : edge.weights) best = std::max(best, w);
  return best;
}

KnowledgeGraph KnowledgeGraph::filter_core(std::int64_t min_freq) const {
  if (min_freq < 1) throw InvalidArgument("filter_core: min_freq must be >= 1");
  if (min_freq == 1) return *this;
  KnowledgeGraph out;
  for (const auto &[key, e] : eventualities_)
    if (e.frequency >= min_freq) out.upsert_eventuality(e, e.frequency);
  for (const auto &[k, edge] : edges_) {
    if (pair_count(edge) < static_cast<double>(min_freq)) continue;
    if (!out.contains(edge.head) || !out.contains(edge.tail)) continue;
    for (const auto &[type, w] : edge.weights)
      if (w > 0.0) out.upsert_relation(edge.head, edge.tail, type, w);
  }
  return out;
}

void KnowledgeGraph::check_integrity() const {
  for (const auto &[k, edge] : edges_) {
    if (k.first != edge.head || k.second != edge.tail) throw Error("edge stored under wrong key");
    if (!contains(edge.head) || !contains(edge.tail))
      throw Error("dangling edge " + edge.head + " -> " + edge.tail);
    if (!(edge.total() > 0.0)) throw Error("edge without positive weight");
    if (!successors(edge.head).count(edge.tail) || !predecessors(edge.tail).count(edge.head))
      throw Error("adjacency index misses edge " + edge.head + " -> " + edge.tail);
  }
  for (const auto &[head, tails] : out_)
    for (const auto &tail : tails)
      if (!edges_.count({head, tail})) throw Error("stale out-index entry");
  for (const auto &[tail, heads] : in_)
    for (const auto &head : heads)
      if (!edges_.count({head, tail})) throw Error("stale in-index entry");
  for (const auto &[key, e] : eventualities_) {
    if (key != e.key) throw Error("eventuality stored under wrong key");
    for (const auto &w : e.words)
      if (!keys_with_word(w).count(key)) throw Error("word index misses " + key);
  }
  for (const auto &[word, keys] : word_index_)
    for (const auto &key : keys)
      if (!contains(key)) throw Error("word index has stale key " + key);
}

bool KnowledgeGraph::operator==(const KnowledgeGraph &other) const {
  if (edges_ != other.edges_ || eventualities_.size() != other.eventualities_.size())
    return false;
  auto it = other.eventualities_.begin();
  for (const auto &[key, e] : eventualities_) {
    if (key != it->first || !same_eventuality(e, it->second)) return false;
    ++it;
  }
  return true;
}

void save(const KnowledgeGraph &graph, const std::filesystem::path &directory) {
  std::filesystem::create_directories(directory);
  {
    std::ofstream out(directory / "eventualities.jsonl", std::ios::binary);
    if (!out) throw Error("cannot write " + (directory / "eventualities.jsonl").string());
    for (const auto &[key, e] : graph.eventualities()) out << to_jsonl_line(eventuality_to_json(e));
  }
  std::ofstream out(directory / "relations.jsonl", std::ios::binary);
  if (!out) throw Error("cannot write " + (directory / "relations.jsonl").string());
  for (const auto &[k, edge] : graph.edges()) {
    Json w = Json::object();
    for (const auto &[type, value] : edge.weights) w[std::string(relation_name(type))] = value;
    Json j;
    j["h"] = edge.head;
    j["t"] = edge.tail;
    j["w"] = std::move(w);
    out << to_jsonl_line(j);
  }
}

KnowledgeGraph load(const std::filesystem::path &directory) {
  KnowledgeGraph graph;
  const auto events_path = directory / "eventualities.jsonl";
  const auto relations_path = directory / "relations.jsonl";
  std::ifstream events(events_path, std::ios::binary);
  if (!events) throw ParseError(events_path.string(), 0, "cannot open file");
  read_jsonl(events, events_path.string(), [&](const Json &j, int) {
    Eventuality e = eventuality_from_json(j);
    if (graph.contains(e.key)) throw InvalidArgument("duplicate eventuality " + e.key);
    if (e.frequency < 1) throw InvalidArgument("eventuality frequency must be >= 1");
    graph.upsert_eventuality(e, e.frequency);
  });

  std::ifstream relations(relations_path, std::ios::binary);
  if (!relations) throw ParseError(relations_path.string(), 0, "cannot open file");
  read_jsonl(relations, relations_path.string(), [&](const Json &j, int) {
    if (!j.is_object() || !j.contains("h") || !j.contains("t") || !j.contains("w") ||
        !j["h"].is_string() || !j["t"].is_string() || !j["w"].is_object())
      throw InvalidArgument("relation record needs string 'h', 't' and object 'w'");
    const auto head = j["h"].get<std::string>();
    const auto tail = j["t"].get<std::string>();
    if (graph.edge(head, tail)) throw InvalidArgument("duplicate relation record");
    if (j["w"].empty()) throw InvalidArgument("relation record has no weights");
    for (const auto &[name, value] : j["w"].items()) {
      if (!value.is_number()) throw InvalidArgument("weight for " + name + " is not a number");
      graph.upsert_relation(head, tail, relation_from_name(name), value.get<double>());
    }
  });
  return graph;
}

}  // namespace evkg
