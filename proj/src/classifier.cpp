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

#include "evkg/classifier.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "evkg/error.hpp"

namespace evkg {

using Eigen::ArrayXd;
using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr const char *kFormat = "evkg-classifier/1";

VectorXd sigmoid(const VectorXd &a) { return (1.0 / (1.0 + (-a.array()).exp())).matrix(); }

struct LstmTrace {
  std::vector<int> ids;
  std::vector<VectorXd> h, c;  // T + 1 entries; [0] is the zero state
  std::vector<VectorXd> i, f, o, g;
};

VectorXd lstm_forward(const LstmParams &p, const MatrixXd &emb, const std::vector<int> &ids,
                      LstmTrace *trace) {
  const Index H = p.u.cols();
  VectorXd h = VectorXd::Zero(H), c = VectorXd::Zero(H);
  if (trace) {
    *trace = LstmTrace{};
    trace->ids = ids;
    trace->h.push_back(h);
    trace->c.push_back(c);
  }
  for (int id : ids) {
    VectorXd a = p.w * emb.col(id) + p.u * h + p.b;
    VectorXd i = sigmoid(a.segment(0, H));
    VectorXd f = sigmoid(a.segment(H, H));
    VectorXd o = sigmoid(a.segment(2 * H, H));
    VectorXd g = a.segment(3 * H, H).array().tanh().matrix();
    c = f.cwiseProduct(c) + i.cwiseProduct(g);
    h = o.cwiseProduct(c.array().tanh().matrix());
    if (trace) {
      trace->h.push_back(h);
      trace->c.push_back(c);
      trace->i.push_back(std::move(i));
      trace->f.push_back(std::move(f));
      trace->o.push_back(std::move(o));
      trace->g.push_back(std::move(g));
    }
  }
  return h;
}

// Backpropagation through time from the gradient of the final hidden state.
void lstm_backward(const LstmParams &p, const MatrixXd &emb, const LstmTrace &tr, VectorXd dh,
                   LstmParams &gp, MatrixXd &gemb) {
  const Index H = p.u.cols();
  VectorXd dc = VectorXd::Zero(H);
  VectorXd da(4 * H);
  for (int t = static_cast<int>(tr.ids.size()) - 1; t >= 0; --t) {
    const ArrayXd tc = tr.c[t + 1].array().tanh();
    const ArrayXd i = tr.i[t].array(), f = tr.f[t].array(), o = tr.o[t].array(),
                  g = tr.g[t].array();
    const ArrayXd d_out = dh.array() * tc;
    dc.array() += dh.array() * o * (1.0 - tc * tc);
    da.segment(0, H) = (dc.array() * g * i * (1.0 - i)).matrix();
    da.segment(H, H) = (dc.array() * tr.c[t].array() * f * (1.0 - f)).matrix();
    da.segment(2 * H, H) = (d_out * o * (1.0 - o)).matrix();
    da.segment(3 * H, H) = (dc.array() * i * (1.0 - g * g)).matrix();

    const int id = tr.ids[t];
    gp.w.noalias() += da * emb.col(id).transpose();
    gp.u.noalias() += da * tr.h[t].transpose();
    gp.b += da;
    gemb.col(id).noalias() += p.w.transpose() * da;
    dh = p.u.transpose() * da;
    dc = (dc.array() * f).matrix();
  }
}

struct EncoderTrace {
  LstmTrace forward, backward;
};

VectorXd encode_sequence(const EncoderParams &p, const MatrixXd &emb, const std::vector<int> &ids,
                         EncoderTrace *trace) {
  std::vector<int> reversed(ids.rbegin(), ids.rend());
  const Index H = p.forward.u.cols();
  VectorXd out(2 * H);
  out.head(H) = lstm_forward(p.forward, emb, ids, trace ? &trace->forward : nullptr);
  out.tail(H) = lstm_forward(p.backward, emb, reversed, trace ? &trace->backward : nullptr);
  return out;
}

void encoder_backward(const EncoderParams &p, const MatrixXd &emb, const EncoderTrace &tr,
                      const VectorXd &d_summary, EncoderParams &gp, MatrixXd &gemb) {
  const Index H = p.forward.u.cols();
  lstm_backward(p.forward, emb, tr.forward, d_summary.head(H), gp.forward, gemb);
  lstm_backward(p.backward, emb, tr.backward, d_summary.tail(H), gp.backward, gemb);
}

struct ForwardTrace {
  std::array<EncoderTrace, kNumEncoders> encoders;
  std::array<VectorXd, kNumEncoders> summaries;
  VectorXd z, u, r, mask, logits;
};

// Returns the logits.
VectorXd forward(const ClassifierParams &p, const EncodedInstance &x, double dropout,
                 std::mt19937_64 *rng, ForwardTrace *tr) {
  const std::array<const std::vector<int> *, kNumEncoders> inputs = {&x.e1, &x.e2, &x.sentence};
  std::array<VectorXd, kNumEncoders> s;
  for (int k = 0; k < kNumEncoders; ++k)
    s[k] = encode_sequence(p.encoders[k], p.embeddings, *inputs[k],
                           tr ? &tr->encoders[k] : nullptr);
  const Index d = s[0].size();
  VectorXd z(5 * d);
  z << s[0], s[1], s[0] - s[1], s[0].cwiseProduct(s[1]), s[2];
  VectorXd u = p.w1 * z + p.b1;
  VectorXd r = u.cwiseMax(0.0);
  VectorXd mask = VectorXd::Ones(r.size());
  if (rng && dropout > 0.0) {
    std::bernoulli_distribution keep(1.0 - dropout);
    for (Index k = 0; k < mask.size(); ++k) mask[k] = keep(*rng) ? 1.0 / (1.0 - dropout) : 0.0;
  }
  VectorXd logits = p.w2 * r.cwiseProduct(mask) + p.b2;
  if (tr) {
    tr->summaries = std::move(s);
    tr->z = std::move(z);
    tr->u = std::move(u);
    tr->r = std::move(r);
    tr->mask = std::move(mask);
    tr->logits = logits;
  }
  return logits;
}

VectorXd softmax(const VectorXd &logits) {
  VectorXd e = (logits.array() - logits.maxCoeff()).exp().matrix();
  return e / e.sum();
}

double cross_entropy(const VectorXd &logits, int label) {
  const double m = logits.maxCoeff();
  return std::log((logits.array() - m).exp().sum()) + m - logits[label];
}

void uniform_fill(double *data, Index n, double scale, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (Index k = 0; k < n; ++k) data[k] = dist(rng);
}

Json tensor_json(const ClassifierParams::View &v) {
  Json j;
  j["name"] = v.name;
  j["shape"] = Json::array({v.rows, v.cols});
  j["data"] = std::vector<double>(v.data, v.data + v.size());
  return j;
}

}  // namespace

Vocabulary::Vocabulary() { add("<unk>"); }

int Vocabulary::add(const std::string &word) {
  auto [it, inserted] = index_.try_emplace(word, static_cast<int>(words_.size()));
  if (inserted) words_.push_back(word);
  return it->second;
}

int Vocabulary::lookup(const std::string &word) const {
  auto it = index_.find(word);
  return it == index_.end() ? kUnknown : it->second;
}

std::vector<ClassifierParams::View> ClassifierParams::views() {
  std::vector<View> out;
  auto add = [&](std::string name, auto &t) {
    out.push_back({std::move(name), t.data(), t.rows(), t.cols()});
  };
  add("embeddings", embeddings);
  const char *roles[kNumEncoders] = {"e1", "e2", "sentence"};
  for (int k = 0; k < kNumEncoders; ++k) {
    for (auto [dir, lstm] : {std::pair<const char *, LstmParams *>{"fwd", &encoders[k].forward},
                             {"bwd", &encoders[k].backward}}) {
      const std::string prefix = std::string(roles[k]) + "." + dir + ".";
      add(prefix + "w", lstm->w);
      add(prefix + "u", lstm->u);
      add(prefix + "b", lstm->b);
    }
  }
  add("ffn.w1", w1);
  add("ffn.b1", b1);
  add("ffn.w2", w2);
  add("ffn.b2", b2);
  return out;
}

ClassifierParams ClassifierParams::zeros_like() const {
  ClassifierParams out = *this;
  out.set_zero();
  return out;
}

void ClassifierParams::set_zero() {
  for (View &v : views()) std::fill(v.data, v.data + v.size(), 0.0);
}

bool ClassifierParams::all_finite() const {
  for (const View &v : const_cast<ClassifierParams *>(this)->views())
    for (Index k = 0; k < v.size(); ++k)
      if (!std::isfinite(v.data[k])) return false;
  return true;
}

ClassifierModel::ClassifierModel(Vocabulary vocab, std::vector<RelationType> types,
                                 ModelDims dims, std::uint64_t seed)
    : vocab_(std::move(vocab)), types_(std::move(types)), dims_(dims) {
  if (dims.embedding < 1 || dims.hidden < 2 || dims.hidden % 2 != 0 || dims.ffn_hidden < 1)
    throw InvalidArgument("classifier dims must be positive with an even hidden size");
  if (types_.empty()) throw InvalidArgument("classifier needs at least one relation type");
  std::mt19937_64 rng(seed);
  const Index de = dims.embedding, H = dims.hidden / 2, F = dims.ffn_hidden;
  const Index feature = 5 * dims.hidden, outputs = num_outputs();

  params_.embeddings = MatrixXd(de, vocab_.size());
  uniform_fill(params_.embeddings.data(), params_.embeddings.size(), 0.1, rng);
  for (EncoderParams &enc : params_.encoders) {
    for (LstmParams *lstm : {&enc.forward, &enc.backward}) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(H));
      lstm->w = MatrixXd(4 * H, de);
      lstm->u = MatrixXd(4 * H, H);
      uniform_fill(lstm->w.data(), lstm->w.size(), scale, rng);
      uniform_fill(lstm->u.data(), lstm->u.size(), scale, rng);
      lstm->b = VectorXd::Zero(4 * H);
      lstm->b.segment(H, H).setOnes();  // forget gate starts open
    }
  }
  params_.w1 = MatrixXd(F, feature);
  uniform_fill(params_.w1.data(), params_.w1.size(), std::sqrt(6.0 / (F + feature)), rng);
  params_.b1 = VectorXd::Zero(F);
  params_.w2 = MatrixXd(outputs, F);
  uniform_fill(params_.w2.data(), params_.w2.size(), std::sqrt(6.0 / (outputs + F)), rng);
  params_.b2 = VectorXd::Zero(outputs);
}

int ClassifierModel::load_pretrained(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings file " + path.string());
  int found = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (line_no == 1 && values.size() == 1) continue;  // "count dim" header
    if (static_cast<int>(values.size()) != dims_.embedding)
      throw ParseError(path.string(), line_no,
                       "expected " + std::to_string(dims_.embedding) + " values");
    const int id = vocab_.lookup(word);
    if (id == Vocabulary::kUnknown) continue;
    params_.embeddings.col(id) = Eigen::Map<VectorXd>(values.data(), dims_.embedding);
    ++found;
  }
  return found;
}

EncodedInstance ClassifierModel::encode(const std::vector<std::string> &e1,
                                        const std::vector<std::string> &e2,
                                        const std::vector<std::string> &sentence) const {
  EncodedInstance x;
  for (const auto &w : e1) x.e1.push_back(vocab_.lookup(w));
  for (const auto &w : e2) x.e2.push_back(vocab_.lookup(w));
  for (const auto &w : sentence) x.sentence.push_back(vocab_.lookup(w));
  return x;
}

Eigen::VectorXd ClassifierModel::predict(const EncodedInstance &x) const {
  return softmax(forward(params_, x, 0.0, nullptr, nullptr));
}

double ClassifierModel::loss(const EncodedInstance &x, int label) const {
  return cross_entropy(forward(params_, x, 0.0, nullptr, nullptr), label);
}

double ClassifierModel::accumulate_gradient(const EncodedInstance &x, int label, double dropout,
                                            ClassifierParams &grad,
                                            std::mt19937_64 *dropout_rng) const {
  if (label < 0 || label >= num_outputs()) throw InvalidArgument("label out of range");
  ForwardTrace tr;
  forward(params_, x, dropout, dropout_rng, &tr);
  const double loss = cross_entropy(tr.logits, label);

  VectorXd d_logits = softmax(tr.logits);
  d_logits[label] -= 1.0;
  const VectorXd hidden = tr.r.cwiseProduct(tr.mask);
  grad.w2.noalias() += d_logits * hidden.transpose();
  grad.b2 += d_logits;
  VectorXd du = (params_.w2.transpose() * d_logits).cwiseProduct(tr.mask);
  for (Index k = 0; k < du.size(); ++k)
    if (tr.u[k] <= 0.0) du[k] = 0.0;
  grad.w1.noalias() += du * tr.z.transpose();
  grad.b1 += du;
  const VectorXd dz = params_.w1.transpose() * du;

  const Index d = tr.summaries[0].size();
  const VectorXd &h1 = tr.summaries[0], &h2 = tr.summaries[1];
  const VectorXd d_diff = dz.segment(2 * d, d), d_prod = dz.segment(3 * d, d);
  const std::array<VectorXd, kNumEncoders> d_summary = {
      dz.segment(0, d) + d_diff + d_prod.cwiseProduct(h2),
      dz.segment(d, d) - d_diff + d_prod.cwiseProduct(h1),
      dz.segment(4 * d, d)};
  for (int k = 0; k < kNumEncoders; ++k)
    encoder_backward(params_.encoders[k], params_.embeddings, tr.encoders[k], d_summary[k],
                     grad.encoders[k], grad.embeddings);
  return loss;
}

Json ClassifierModel::to_json() const {
  Json j;
  j["format"] = kFormat;
  Json types = Json::array();
  for (RelationType t : types_) types.push_back(std::string(relation_name(t)));
  j["types"] = std::move(types);
  j["dims"] = {{"embedding", dims_.embedding},
               {"hidden", dims_.hidden},
               {"ffn_hidden", dims_.ffn_hidden}};
  j["vocabulary"] = vocab_.words();
  Json tensors = Json::array();
  for (const auto &v : const_cast<ClassifierParams &>(params_).views())
    tensors.push_back(tensor_json(v));
  j["tensors"] = std::move(tensors);
  return j;
}

ClassifierModel ClassifierModel::from_json(const Json &j) {
  if (!j.is_object() || j.value("format", "") != kFormat)
    throw InvalidArgument(std::string("not a ") + kFormat + " checkpoint");
  Vocabulary vocab;
  const auto words = j.at("vocabulary").get<std::vector<std::string>>();
  if (words.empty() || words[0] != "<unk>") throw InvalidArgument("vocabulary must start with <unk>");
  for (const auto &w : words) vocab.add(w);
  std::vector<RelationType> types;
  for (const auto &name : j.at("types").get<std::vector<std::string>>())
    types.push_back(relation_from_name(name));
  ModelDims dims;
  dims.embedding = j.at("dims").at("embedding").get<int>();
  dims.hidden = j.at("dims").at("hidden").get<int>();
  dims.ffn_hidden = j.at("dims").at("ffn_hidden").get<int>();

  ClassifierModel model(std::move(vocab), std::move(types), dims, 0);
  auto views = model.params_.views();
  const Json &tensors = j.at("tensors");
  if (tensors.size() != views.size()) throw InvalidArgument("checkpoint tensor count mismatch");
  for (size_t k = 0; k < views.size(); ++k) {
    const Json &t = tensors[k];
    if (t.at("name").get<std::string>() != views[k].name)
      throw InvalidArgument("checkpoint tensor order mismatch at " + views[k].name);
    const auto shape = t.at("shape").get<std::vector<Index>>();
    const auto data = t.at("data").get<std::vector<double>>();
    if (shape.size() != 2 || shape[0] != views[k].rows || shape[1] != views[k].cols ||
        static_cast<Index>(data.size()) != views[k].size())
      throw InvalidArgument("checkpoint shape mismatch for " + views[k].name);
    std::copy(data.begin(), data.end(), views[k].data);
  }
  return model;
}

void ClassifierModel::save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json().dump() << '\n';
}

ClassifierModel ClassifierModel::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path.string(), 1, e.what());
  }
  return from_json(j);
}

AdamOptimizer::AdamOptimizer(const ClassifierParams &shape, double learning_rate, double beta1,
                             double beta2, double epsilon)
    : m_(shape.zeros_like()),
      v_(shape.zeros_like()),
      lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon) {}

void AdamOptimizer::step(ClassifierParams &params, ClassifierParams &grad) {
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  auto p = params.views(), g = grad.views(), m = m_.views(), v = v_.views();
  for (size_t k = 0; k < p.size(); ++k) {
    for (Index n = 0; n < p[k].size(); ++n) {
      const double gn = g[k].data[n];
      m[k].data[n] = beta1_ * m[k].data[n] + (1.0 - beta1_) * gn;
      v[k].data[n] = beta2_ * v[k].data[n] + (1.0 - beta2_) * gn * gn;
      p[k].data[n] -= lr_ * (m[k].data[n] / c1) / (std::sqrt(v[k].data[n] / c2) + eps_);
    }
  }
}

}  // namespace evkg
