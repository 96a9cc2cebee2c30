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

#include "evkg/inference.hpp"

#include <algorithm>
#include <set>

#include "evkg/error.hpp"

namespace evkg {
namespace {

void count_visit(QueryStats *stats) {
  if (stats) ++stats->edges_visited;
}

std::vector<ScoredResult> rank(const KeyDistribution &dist, std::size_t topk) {
  std::vector<ScoredResult> out;
  for (const auto &[key, p] : dist) out.push_back({key, {}, p, {}});
  std::sort(out.begin(), out.end(), [](const ScoredResult &a, const ScoredResult &b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.target < b.target;
  });
  if (out.size() > topk) out.resize(topk);
  return out;
}

}  // namespace

std::string path_name(const std::vector<RelationType> &path) {
  std::string out;
  for (RelationType r : path) {
    if (!out.empty()) out += ',';
    out += relation_name(r);
  }
  return out;
}

InferenceEngine::InferenceEngine(const KnowledgeGraph &graph, InferenceOptions options)
    : graph_(graph), options_(options) {}

bool InferenceEngine::in_relation_set(RelationType r) const {
  return options_.include_cooccurrence || r != RelationType::kCoOccurrence;
}

void InferenceEngine::require(const std::string &key) const {
  if (!graph_.contains(key)) throw UnknownEventuality(key);
}

KeyDistribution InferenceEngine::tail_distribution(const std::string &head, RelationType r1,
                                                   QueryStats *stats) const {
  require(head);
  KeyDistribution out;
  double total = 0.0;
  for (const std::string &tail : graph_.successors(head)) {
    count_visit(stats);
    if (double w = graph_.weight(head, r1, tail); w > 0.0) {
      out[tail] = w;
      total += w;
    }
  }
  for (auto &[key, p] : out) p /= total;
  return out;
}

KeyDistribution InferenceEngine::tail_distribution(const std::string &head, RelationType r1,
                                                   RelationType r2, QueryStats *stats) const {
  KeyDistribution out;
  for (const auto &[mid, p_mid] : tail_distribution(head, r1, stats))
    for (const auto &[tail, p_tail] : tail_distribution(mid, r2, stats))
      out[tail] += p_mid * p_tail;
  return out;
}

KeyDistribution InferenceEngine::head_distribution(const std::string &tail, RelationType r1,
                                                   QueryStats *stats) const {
  require(tail);
  KeyDistribution out;
  double total = 0.0;
  for (const std::string &head : graph_.predecessors(tail)) {
    count_visit(stats);
    if (double w = graph_.weight(head, r1, tail); w > 0.0) {
      out[head] = w;
      total += w;
    }
  }
  for (auto &[key, p] : out) p /= total;
  return out;
}

KeyDistribution InferenceEngine::head_distribution(const std::string &tail, RelationType r1,
                                                   RelationType r2, QueryStats *stats) const {
  KeyDistribution out;
  for (const auto &[mid, p_mid] : head_distribution(tail, r2, stats))
    for (const auto &[head, p_head] : head_distribution(mid, r1, stats))
      out[head] += p_mid * p_head;
  return out;
}

TypeDistribution InferenceEngine::relation_distribution(const std::string &head,
                                                        const std::string &tail) const {
  require(head);
  require(tail);
  TypeDistribution out;
  const RelationEdge *edge = graph_.edge(head, tail);
  if (!edge) return out;
  double total = 0.0;
  for (const auto &[type, w] : edge->weights) {
    if (!in_relation_set(type) || !(w > 0.0)) continue;
    out[type] = w;
    total += w;
  }
  for (auto &[type, p] : out) p /= total;
  return out;
}

double InferenceEngine::relation_prior(const std::string &head, RelationType r) const {
  require(head);
  if (!in_relation_set(r)) return 0.0;
  double numerator = 0.0, denominator = 0.0;
  for (const std::string &tail : graph_.successors(head)) {
    for (const auto &[type, w] : graph_.edge(head, tail)->weights) {
      if (!in_relation_set(type)) continue;
      denominator += w;
      if (type == r) numerator += w;
    }
  }
  return denominator > 0.0 ? numerator / denominator : 0.0;
}

double InferenceEngine::path_probability(const std::string &head, const std::string &tail,
                                         RelationType r1, RelationType r2,
                                         std::vector<std::string> *support) const {
  require(head);
  require(tail);
  const double prior = relation_prior(head, r1);
  if (prior == 0.0) return 0.0;
  std::vector<std::pair<double, std::string>> parts;
  double total = 0.0;
  for (const auto &[mid, p_mid] : tail_distribution(head, r1)) {
    if (!graph_.edge(mid, tail)) continue;
    auto rel = relation_distribution(mid, tail);
    auto it = rel.find(r2);
    if (it == rel.end()) continue;
    const double term = prior * p_mid * it->second;
    total += term;
    parts.emplace_back(term, mid);
  }
  if (support) {
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (auto &[term, key] : parts) support->push_back(key);
  }
  return total;
}

std::vector<ScoredResult> InferenceEngine::retrieve(const std::string &key,
                                                    const std::vector<RelationType> &path,
                                                    std::size_t topk, Direction direction,
                                                    QueryStats *stats) const {
  if (path.empty() || path.size() > 2)
    throw InvalidArgument("retrieve: relation paths must have one or two relations");
  if (topk < 1) throw InvalidArgument("retrieve: topk must be >= 1");
  const bool forward = direction == Direction::kForward;
  if (path.size() == 1) {
    return rank(forward ? tail_distribution(key, path[0], stats)
                        : head_distribution(key, path[0], stats),
                topk);
  }

  auto results = rank(forward ? tail_distribution(key, path[0], path[1], stats)
                              : head_distribution(key, path[0], path[1], stats),
                      topk);
  // Attach the intermediates each result was reached through.
  const auto first = forward ? tail_distribution(key, path[0]) : head_distribution(key, path[1]);
  for (ScoredResult &r : results) {
    std::vector<std::pair<double, std::string>> parts;
    for (const auto &[mid, p_mid] : first) {
      const double step = forward ? graph_.weight(mid, path[1], r.target)
                                  : graph_.weight(r.target, path[0], mid);
      if (step > 0.0) parts.emplace_back(p_mid * step, mid);
    }
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (auto &[w, mid] : parts) r.support.push_back(mid);
  }
  return results;
}

std::vector<ScoredResult> InferenceEngine::relation_paths(const std::string &head,
                                                          const std::string &tail,
                                                          std::size_t topk) const {
  std::vector<ScoredResult> out;
  for (const auto &[type, p] : relation_distribution(head, tail))
    out.push_back({std::string(relation_name(type)), {type}, p, {}});

  std::set<RelationType> first, second;
  for (const std::string &mid : graph_.successors(head)) {
    if (!graph_.edge(mid, tail)) continue;
    for (const auto &[t, w] : graph_.edge(head, mid)->weights)
      if (in_relation_set(t)) first.insert(t);
    for (const auto &[t, w] : graph_.edge(mid, tail)->weights)
      if (in_relation_set(t)) second.insert(t);
  }
  for (RelationType r1 : first) {
    for (RelationType r2 : second) {
      ScoredResult r;
      r.path = {r1, r2};
      r.target = path_name(r.path);
      r.probability = path_probability(head, tail, r1, r2, &r.support);
      if (r.probability > 0.0) out.push_back(std::move(r));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ScoredResult &a, const ScoredResult &b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.target < b.target;
  });
  if (out.size() > topk) out.resize(topk);
  return out;
}

}  // namespace evkg
