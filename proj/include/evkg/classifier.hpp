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

#ifndef EVKG_CLASSIFIER_HPP_
#define EVKG_CLASSIFIER_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "evkg/relation_type.hpp"
#include "evkg/serialization.hpp"

namespace evkg {

// Word -> row index. Index 0 is reserved for unknown words.
class Vocabulary {
 public:
  Vocabulary();

  int add(const std::string &word);
  int lookup(const std::string &word) const;  // 0 when unknown
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<std::string> &words() const { return words_; }

  static constexpr int kUnknown = 0;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
};

struct ModelDims {
  int embedding = 32;  // d_e
  int hidden = 32;     // d_h, size of each encoder summary (even)
  int ffn_hidden = 64;
};

// One LSTM direction; gates are stacked as [input, forget, output, cell].
struct LstmParams {
  Eigen::MatrixXd w;  // 4H x d_e
  Eigen::MatrixXd u;  // 4H x H
  Eigen::VectorXd b;  // 4H
};

struct EncoderParams {
  LstmParams forward;
  LstmParams backward;
};

// Encoders are indexed by role: E1 words, E2 words, sentence tokens.
inline constexpr int kNumEncoders = 3;

struct ClassifierParams {
  Eigen::MatrixXd embeddings;  // d_e x |V|, one column per word
  std::array<EncoderParams, kNumEncoders> encoders;
  Eigen::MatrixXd w1;  // ffn x 5 d_h
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;  // outputs x ffn
  Eigen::VectorXd b2;

  struct View {
    std::string name;
    double *data;
    Eigen::Index rows;
    Eigen::Index cols;
    Eigen::Index size() const { return rows * cols; }
  };
  // Every tensor in a fixed order.
  std::vector<View> views();

  // Same shapes, all zeros.
  ClassifierParams zeros_like() const;
  void set_zero();
  bool all_finite() const;
};

// Word ids of one (E1, E2, sentence) triple.
struct EncodedInstance {
  std::vector<int> e1;
  std::vector<int> e2;
  std::vector<int> sentence;
};

// Three BiLSTM encoders summarise E1, E2 and the sentence into h1, h2, hs.
// The feature [h1, h2, h1 - h2, h1 * h2, hs] feeds a two-layer ReLU network
// and a softmax over the category's types plus a trailing None class.
class ClassifierModel {
 public:
  ClassifierModel() = default;
  ClassifierModel(Vocabulary vocab, std::vector<RelationType> types, ModelDims dims,
                  std::uint64_t seed);

  // Copies vectors for known words from a "word v1 ... vd" text file.
  // An optional "count dim" first line is skipped. Returns how many
  // vocabulary words were found; throws ParseError on a wrong dimension.
  int load_pretrained(const std::filesystem::path &path);

  EncodedInstance encode(const std::vector<std::string> &e1, const std::vector<std::string> &e2,
                         const std::vector<std::string> &sentence) const;

  // Softmax output with dropout off.
  Eigen::VectorXd predict(const EncodedInstance &x) const;

  // Cross-entropy of `label` (an output index). Adds d loss / d params into
  // `grad`. Dropout is applied on the hidden layer when `dropout_rng` is set.
  double accumulate_gradient(const EncodedInstance &x, int label, double dropout,
                             ClassifierParams &grad, std::mt19937_64 *dropout_rng) const;

  double loss(const EncodedInstance &x, int label) const;

  int num_outputs() const { return static_cast<int>(types_.size()) + 1; }
  int none_index() const { return static_cast<int>(types_.size()); }
  const std::vector<RelationType> &types() const { return types_; }
  const Vocabulary &vocabulary() const { return vocab_; }
  const ModelDims &dims() const { return dims_; }
  ClassifierParams &params() { return params_; }
  const ClassifierParams &params() const { return params_; }

  Json to_json() const;
  static ClassifierModel from_json(const Json &j);
  void save(const std::filesystem::path &path) const;
  static ClassifierModel load(const std::filesystem::path &path);

 private:
  Vocabulary vocab_;
  std::vector<RelationType> types_;
  ModelDims dims_;
  ClassifierParams params_;
};

// Adam with bias correction.
class AdamOptimizer {
 public:
  AdamOptimizer(const ClassifierParams &shape, double learning_rate, double beta1 = 0.9,
                double beta2 = 0.999, double epsilon = 1e-8);

  void step(ClassifierParams &params, ClassifierParams &grad);

 private:
  ClassifierParams m_;
  ClassifierParams v_;
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
};

}  // namespace evkg

#endif  // EVKG_CLASSIFIER_HPP_
