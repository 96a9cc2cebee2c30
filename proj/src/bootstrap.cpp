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

#include "evkg/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>

#include "evkg/error.hpp"

namespace evkg {
namespace {

struct Example {
  const TrainingInstance *instance;
  int label;  // output index
};

bool has_label_in(const TrainingInstance &x, Category c) {
  for (RelationType t : x.labels)
    if (category_of(t) == c) return true;
  return false;
}

int output_index(const ClassifierModel &model, RelationType t) {
  const auto &types = model.types();
  auto it = std::find(types.begin(), types.end(), t);
  return it == types.end() ? -1 : static_cast<int>(it - types.begin());
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{seed, a, b};
  std::uint64_t out;
  seq.generate(reinterpret_cast<std::uint32_t *>(&out),
               reinterpret_cast<std::uint32_t *>(&out) + 2);
  return out;
}

ClassifierModel fresh_model(const Vocabulary &vocab, Category category,
                            const BootstrapConfig &config, std::uint64_t seed) {
  ClassifierModel model(vocab, types_in(category), config.dims, seed);
  if (!config.pretrained.empty()) model.load_pretrained(config.pretrained);
  return model;
}

struct CategoryOutcome {
  bool trained = false;
  double loss = 0.0;
  std::vector<std::pair<std::size_t, RelationType>> new_labels;
};

}  // namespace

void BootstrapConfig::validate() const {
  if (!(tau0 > 0.0 && tau0 < 1.0)) throw InvalidArgument("tau0 must be in (0, 1)");
  if (iterations < 0) throw InvalidArgument("iterations must be >= 0");
  if (!(learning_rate > 0.0)) throw InvalidArgument("learning_rate must be > 0");
  if (batch_size < 1) throw InvalidArgument("batch_size must be >= 1");
  if (!(dropout >= 0.0 && dropout < 1.0)) throw InvalidArgument("dropout must be in [0, 1)");
  if (dims.embedding < 1 || dims.hidden < 2 || dims.hidden % 2 != 0 || dims.ffn_hidden < 1)
    throw InvalidArgument("model sizes must be positive with an even hidden size");
  if (negative_ratio < 0) throw InvalidArgument("negative_ratio must be >= 0");
  if (epochs < 1) throw InvalidArgument("epochs must be >= 1");
}

double anneal_threshold(double tau0, double k, double K) {
  if (!(tau0 > 0.0 && tau0 < 1.0)) throw InvalidArgument("anneal_threshold: tau0 must be in (0, 1)");
  if (!(K > 0.0)) throw InvalidArgument("anneal_threshold: K must be > 0");
  if (!(k >= 0.0 && k <= K)) throw InvalidArgument("anneal_threshold: k must be in [0, K]");
  return tau0 + (1.0 - tau0) / (1.0 + std::exp(-(k - K / 2.0)));
}

Vocabulary build_vocabulary(const std::vector<TrainingInstance> &instances) {
  Vocabulary vocab;
  for (const TrainingInstance &x : instances) {
    for (const auto &w : x.context.tokens) vocab.add(w);
    for (const auto &w : words_of_key(x.e1_key)) vocab.add(w);
    for (const auto &w : words_of_key(x.e2_key)) vocab.add(w);
  }
  return vocab;
}

EncodedInstance encode_instance(const ClassifierModel &model, const TrainingInstance &x) {
  if (x.context.empty()) {
    // No sentence available: fall back to the eventuality words alone.
    auto e1 = words_of_key(x.e1_key), e2 = words_of_key(x.e2_key);
    std::vector<std::string> sentence = e1;
    sentence.insert(sentence.end(), e2.begin(), e2.end());
    return model.encode(e1, e2, sentence);
  }
  // Seed connectives are masked out of the sentence so the classifier learns
  // from the rest of the context rather than memorising the seed rule.
  static const std::set<std::string> connective_words = [] {
    std::set<std::string> words;
    for (const SeedRule &r : seed_rules()) words.insert(r.connective.begin(), r.connective.end());
    return words;
  }();
  std::set<int> inside(x.context.e1_positions.begin(), x.context.e1_positions.end());
  inside.insert(x.context.e2_positions.begin(), x.context.e2_positions.end());
  std::vector<std::string> sentence;
  for (std::size_t i = 0; i < x.context.tokens.size(); ++i) {
    const std::string &w = x.context.tokens[i];
    if (connective_words.count(w) && !inside.count(static_cast<int>(i) + 1)) continue;
    sentence.push_back(w);
  }
  return model.encode(x.context.e1_words(), x.context.e2_words(), sentence);
}

InstanceScores score_instance(const ClassifierModel &model, const TrainingInstance &x) {
  const Eigen::VectorXd p = model.predict(encode_instance(model, x));
  InstanceScores out;
  for (std::size_t k = 0; k < model.types().size(); ++k) out.types[model.types()[k]] = p[k];
  out.none = p[model.none_index()];
  return out;
}

std::vector<double> train_epochs(ClassifierModel &model,
                                 const std::vector<TrainingInstance> &instances,
                                 Category category, const BootstrapConfig &config,
                                 std::uint64_t seed) {
  config.validate();
  std::vector<Example> positives;
  std::vector<const TrainingInstance *> unlabeled;
  for (const TrainingInstance &x : instances) {
    bool any = false;
    for (RelationType t : x.labels) {
      if (category_of(t) != category) continue;
      const int idx = output_index(model, t);
      if (idx < 0) continue;
      positives.push_back({&x, idx});
      any = true;
    }
    if (!any) unlabeled.push_back(&x);
  }
  if (positives.empty())
    throw InvalidArgument("train_category: no labeled instance for category " +
                          std::string(category_name(category)));

  std::mt19937_64 rng(seed);
  AdamOptimizer adam(model.params(), config.learning_rate);
  ClassifierParams grad = model.params().zeros_like();
  std::vector<double> losses;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    // Fresh negatives every epoch, drawn without replacement.
    std::vector<Example> examples = positives;
    std::shuffle(unlabeled.begin(), unlabeled.end(), rng);
    const std::size_t wanted =
        std::min(unlabeled.size(), positives.size() * static_cast<std::size_t>(config.negative_ratio));
    for (std::size_t k = 0; k < wanted; ++k) examples.push_back({unlabeled[k], model.none_index()});
    std::shuffle(examples.begin(), examples.end(), rng);

    double total = 0.0;
    for (std::size_t start = 0; start < examples.size(); start += config.batch_size) {
      const std::size_t end = std::min(examples.size(), start + config.batch_size);
      grad.set_zero();
      for (std::size_t k = start; k < end; ++k) {
        const EncodedInstance x = encode_instance(model, *examples[k].instance);
        total += model.accumulate_gradient(x, examples[k].label, config.dropout, grad, &rng);
      }
      const double scale = 1.0 / static_cast<double>(end - start);
      for (auto &v : grad.views())
        for (Eigen::Index n = 0; n < v.size(); ++n) v.data[n] *= scale;
      adam.step(model.params(), grad);
    }
    losses.push_back(total / static_cast<double>(examples.size()));
  }
  if (!model.params().all_finite()) throw Error("training diverged: non-finite parameters");
  return losses;
}

ClassifierModel train_category(const std::vector<TrainingInstance> &instances,
                               Category category, const BootstrapConfig &config,
                               std::vector<double> *epoch_losses) {
  ClassifierModel model =
      fresh_model(build_vocabulary(instances), category, config,
                  mix_seed(config.seed, static_cast<std::uint64_t>(category), 0));
  auto losses = train_epochs(model, instances, category, config,
                             mix_seed(config.seed, static_cast<std::uint64_t>(category), 1));
  if (epoch_losses) *epoch_losses = std::move(losses);
  return model;
}

Json IterationTelemetry::to_json() const {
  Json j;
  j["iter"] = iter;
  j["tau"] = tau;
  j["labeled"] = labeled;
  Json types = Json::object();
  for (const auto &[t, n] : per_type) types[std::string(relation_name(t))] = n;
  j["per_type"] = std::move(types);
  Json l = Json::object();
  for (const auto &[c, v] : loss) l[std::string(category_name(c))] = v;
  j["loss"] = std::move(l);
  return j;
}

std::vector<TrainingInstance> BootstrapResult::labeled() const {
  std::vector<TrainingInstance> out;
  for (const TrainingInstance &x : instances)
    if (!x.labels.empty()) out.push_back(x);
  return out;
}

BootstrapResult bootstrap(const std::vector<TrainingInstance> &all,
                          const std::vector<TrainingInstance> &seeds,
                          const BootstrapConfig &config) {
  config.validate();
  BootstrapResult result;
  result.instances = all;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < result.instances.size(); ++k)
    index.emplace(result.instances[k].id(), k);
  for (const TrainingInstance &s : seeds) {
    auto it = index.find(s.id());
    if (it == index.end()) {
      index.emplace(s.id(), result.instances.size());
      result.instances.push_back(s);
    } else {
      result.instances[it->second].labels.insert(s.labels.begin(), s.labels.end());
    }
  }
  if (config.iterations == 0) return result;

  const Vocabulary vocab = build_vocabulary(result.instances);
  std::map<Category, ClassifierModel> models;
  for (int k = 1; k <= config.iterations; ++k) {
    const double tau = anneal_threshold(config.tau0, k, config.iterations);
    std::vector<Category> active;
    for (Category c : kDiscourseCategories) {
      const bool has_pos = std::any_of(result.instances.begin(), result.instances.end(),
                                       [&](const TrainingInstance &x) { return has_label_in(x, c); });
      if (!has_pos) continue;
      active.push_back(c);
      if (!models.count(c))
        models.emplace(c, fresh_model(vocab, c, config,
                                      mix_seed(config.seed, static_cast<std::uint64_t>(c), 0)));
    }

    // Categories share nothing mutable: each task owns its model and reads
    // the pool, which is only modified after every task has finished.
    std::vector<std::future<CategoryOutcome>> tasks;
    for (Category c : active) {
      ClassifierModel *model = &models.at(c);
      tasks.push_back(std::async(std::launch::async, [&, c, model] {
        CategoryOutcome out;
        auto losses = train_epochs(*model, result.instances, c, config,
                                   mix_seed(config.seed, static_cast<std::uint64_t>(c), 100 + k));
        out.trained = true;
        out.loss = losses.back();
        for (std::size_t n = 0; n < result.instances.size(); ++n) {
          const TrainingInstance &x = result.instances[n];
          if (has_label_in(x, c)) continue;
          const InstanceScores s = score_instance(*model, x);
          double best = tau;
          std::optional<RelationType> pick;
          for (const auto &[t, p] : s.types) {
            if (p > best) {
              best = p;
              pick = t;
            }
          }
          if (pick) out.new_labels.emplace_back(n, *pick);
        }
        return out;
      }));
    }

    IterationTelemetry tel;
    tel.iter = k;
    tel.tau = tau;
    std::vector<CategoryOutcome> outcomes;
    for (auto &t : tasks) outcomes.push_back(t.get());
    for (std::size_t a = 0; a < active.size(); ++a) {
      tel.loss[active[a]] = outcomes[a].loss;
      for (const auto &[n, t] : outcomes[a].new_labels) result.instances[n].labels.insert(t);
    }
    for (const TrainingInstance &x : result.instances) {
      if (!x.labels.empty()) ++tel.labeled;
      for (RelationType t : x.labels) ++tel.per_type[t];
    }
    result.telemetry.push_back(std::move(tel));
  }
  result.models = std::move(models);
  return result;
}

}  // namespace evkg
