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

#ifndef EVKG_INFERENCE_HPP_
#define EVKG_INFERENCE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "evkg/kg_store.hpp"
#include "evkg/relation_type.hpp"

namespace evkg {

struct InferenceOptions {
  // Whether Co_Occurrence counts as a member of the relation set in the
  // relation-retrieval denominators.
  bool include_cooccurrence = true;
};

// Edge visits of the last query, for cost assertions.
struct QueryStats {
  std::size_t edges_visited = 0;
};

enum class Direction {
  kForward,   // given a head, rank tails
  kBackward,  // given a tail, rank heads
};

struct ScoredResult {
  std::string target;                // eventuality key, or "R1[,R2]" for paths
  std::vector<RelationType> path;    // set for relation-path results
  double probability = 0.0;
  std::vector<std::string> support;  // intermediate eventualities, best first
};

using KeyDistribution = std::map<std::string, double>;
using TypeDistribution = std::map<RelationType, double>;

// Conditional retrieval over one and two hops of a loaded graph. Read-only;
// one engine may serve concurrent queries when `stats` pointers differ.
class InferenceEngine {
 public:
  explicit InferenceEngine(const KnowledgeGraph &graph, InferenceOptions options = {});

  // P(Et | Eh, R1): weight over the total R1 weight leaving Eh.
  KeyDistribution tail_distribution(const std::string &head, RelationType r1,
                                    QueryStats *stats = nullptr) const;
  // P(Et | Eh, R1, R2) = sum_m P(Em | Eh, R1) P(Et | Em, R2).
  KeyDistribution tail_distribution(const std::string &head, RelationType r1, RelationType r2,
                                    QueryStats *stats = nullptr) const;

  // Mirror images for predicting heads: P(Eh | Et, R1) and the two-hop form
  // for the path Eh -R1-> Em -R2-> Et.
  KeyDistribution head_distribution(const std::string &tail, RelationType r1,
                                    QueryStats *stats = nullptr) const;
  KeyDistribution head_distribution(const std::string &tail, RelationType r1, RelationType r2,
                                    QueryStats *stats = nullptr) const;

  // P(R | Eh, Et) over the relation set.
  TypeDistribution relation_distribution(const std::string &head,
                                         const std::string &tail) const;
  // P(R | Eh): share of Eh's outgoing weight carried by R.
  double relation_prior(const std::string &head, RelationType r) const;
  // P(R1, R2 | Eh, Et) = sum_m P(R1 | Eh) P(Em | R1, Eh) P(R2 | Em, Et).
  // Contributing intermediates are appended to `support`, best first.
  double path_probability(const std::string &head, const std::string &tail, RelationType r1,
                          RelationType r2, std::vector<std::string> *support = nullptr) const;

  // Top-k eventualities reachable along `path` (one or two relations).
  std::vector<ScoredResult> retrieve(const std::string &key,
                                     const std::vector<RelationType> &path, std::size_t topk,
                                     Direction direction = Direction::kForward,
                                     QueryStats *stats = nullptr) const;

  // Every one- and two-relation path from head to tail with its
  // probability, best first, truncated to topk.
  std::vector<ScoredResult> relation_paths(const std::string &head, const std::string &tail,
                                           std::size_t topk = 100) const;

  const KnowledgeGraph &graph() const { return graph_; }
  const InferenceOptions &options() const { return options_; }

 private:
  bool in_relation_set(RelationType r) const;
  void require(const std::string &key) const;

  const KnowledgeGraph &graph_;
  InferenceOptions options_;
};

std::string path_name(const std::vector<RelationType> &path);

}  // namespace evkg

#endif  // EVKG_INFERENCE_HPP_
