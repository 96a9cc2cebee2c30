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

#ifndef EVKG_BOOTSTRAP_HPP_
#define EVKG_BOOTSTRAP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evkg/classifier.hpp"
#include "evkg/relation_type.hpp"
#include "evkg/seeder.hpp"
#include "evkg/serialization.hpp"

namespace evkg {

struct BootstrapConfig {
  double tau0 = 0.5;
  int iterations = 10;  // K; 0 leaves the seeds untouched
  double learning_rate = 0.01;
  int batch_size = 32;
  double dropout = 0.2;
  ModelDims dims;
  int negative_ratio = 1;  // sampled unlabeled negatives per positive
  int epochs = 5;          // per iteration
  std::uint64_t seed = 42;
  std::string pretrained;  // optional "word v1 ... vd" embeddings file

  // Throws InvalidArgument when a field is out of range.
  void validate() const;
};

// tau_k = tau0 + (1 - tau0) / (1 + exp(-(k - K/2))).
// Requires 0 < tau0 < 1, K > 0 and 0 <= k <= K.
double anneal_threshold(double tau0, double k, double K);

// Every token of every instance context, in first-seen order.
Vocabulary build_vocabulary(const std::vector<TrainingInstance> &instances);

EncodedInstance encode_instance(const ClassifierModel &model, const TrainingInstance &x);

// Softmax output split into the category types and None.
struct InstanceScores {
  std::map<RelationType, double> types;
  double none = 0.0;
};

// Deterministic: dropout is off. Unknown words map to the reserved index.
InstanceScores score_instance(const ClassifierModel &model, const TrainingInstance &x);

// Runs `config.epochs` epochs of minibatch Adam on the category's labeled
// instances plus sampled negatives, updating `model` in place. Returns the
// mean loss of each epoch. Throws InvalidArgument when no instance carries
// a label of the category.
std::vector<double> train_epochs(ClassifierModel &model,
                                 const std::vector<TrainingInstance> &instances,
                                 Category category, const BootstrapConfig &config,
                                 std::uint64_t seed);

// Fresh model over the instances' vocabulary, trained as above.
ClassifierModel train_category(const std::vector<TrainingInstance> &instances,
                               Category category, const BootstrapConfig &config,
                               std::vector<double> *epoch_losses = nullptr);

struct IterationTelemetry {
  int iter = 0;
  double tau = 0.0;
  std::size_t labeled = 0;
  std::map<RelationType, std::size_t> per_type;
  std::map<Category, double> loss;  // last-epoch mean, trained categories only

  Json to_json() const;
};

struct BootstrapResult {
  // Every input instance with its final labels, in input order; seeds that
  // are missing from `all` are appended.
  std::vector<TrainingInstance> instances;
  std::vector<IterationTelemetry> telemetry;
  std::map<Category, ClassifierModel> models;

  std::vector<TrainingInstance> labeled() const;
};

// Self-training: each iteration trains one classifier per discourse category
// on the current labeled pool, then labels instances whose best type clears
// the annealed threshold. Labels are only ever added.
BootstrapResult bootstrap(const std::vector<TrainingInstance> &all,
                          const std::vector<TrainingInstance> &seeds,
                          const BootstrapConfig &config);

}  // namespace evkg

#endif  // EVKG_BOOTSTRAP_HPP_
