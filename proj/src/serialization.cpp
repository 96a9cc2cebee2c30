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

#include "evkg/serialization.hpp"

#include "evkg/error.hpp"

namespace evkg {
namespace {

template <class T>
T field(const Json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception &) {
    throw InvalidArgument(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

Json eventuality_to_json(const Eventuality &e) {
  Json edges = Json::array();
  for (const LocalEdge &edge : e.edges)
    edges.push_back(Json::array({edge.governor, edge.relation, edge.dependent}));
  Json j;
  j["key"] = e.key.empty() ? canonical_key(e) : e.key;
  j["words"] = e.words;
  j["upos"] = e.upos;
  j["edges"] = std::move(edges);
  j["pattern"] = e.pattern;
  j["freq"] = e.frequency;
  return j;
}

Eventuality eventuality_from_json(const Json &j) {
  if (!j.is_object()) throw InvalidArgument("eventuality record is not an object");
  auto words = field<std::vector<std::string>>(j, "words");
  auto upos = field<std::vector<std::string>>(j, "upos");
  if (upos.size() != words.size()) throw InvalidArgument("'upos' and 'words' differ in length");
  std::vector<LocalEdge> edges;
  for (const Json &edge : field<Json>(j, "edges")) {
    if (!edge.is_array() || edge.size() != 3 || !edge[0].is_number_integer() ||
        !edge[1].is_string() || !edge[2].is_number_integer())
      throw InvalidArgument("malformed edge " + edge.dump());
    LocalEdge le{edge[0].get<int>(), edge[1].get<std::string>(), edge[2].get<int>()};
    const int n = static_cast<int>(words.size());
    if (le.governor < 0 || le.governor >= n || le.dependent < 0 || le.dependent >= n)
      throw InvalidArgument("edge endpoint out of range " + edge.dump());
    edges.push_back(std::move(le));
  }
  Eventuality e = make_eventuality(std::move(words), std::move(edges),
                                   field<std::string>(j, "pattern"), std::move(upos));
  e.frequency = field<std::int64_t>(j, "freq");
  if (e.frequency < 0) throw InvalidArgument("negative frequency");
  const auto key = field<std::string>(j, "key");
  if (key != e.key) throw InvalidArgument("key '" + key + "' does not match its words and edges");
  return e;
}

Json instance_to_json(const TrainingInstance &x, bool with_context) {
  Json labels = Json::array();
  for (RelationType t : x.labels) labels.push_back(std::string(relation_name(t)));
  Json j;
  j["e1"] = x.e1_key;
  j["e2"] = x.e2_key;
  j["sid"] = x.sentence_id;
  j["gap"] = Json::array({x.span_gap.first, x.span_gap.second});
  j["labels"] = std::move(labels);
  if (with_context && !x.context.empty()) {
    Json ctx;
    ctx["tokens"] = x.context.tokens;
    ctx["upos"] = x.context.upos;
    ctx["heads"] = x.context.heads;
    ctx["e1"] = x.context.e1_positions;
    ctx["e2"] = x.context.e2_positions;
    j["ctx"] = std::move(ctx);
  }
  return j;
}

TrainingInstance instance_from_json(const Json &j) {
  if (!j.is_object()) throw InvalidArgument("instance record is not an object");
  TrainingInstance x;
  x.e1_key = field<std::string>(j, "e1");
  x.e2_key = field<std::string>(j, "e2");
  x.sentence_id = field<std::string>(j, "sid");
  auto gap = field<std::vector<int>>(j, "gap");
  if (gap.size() != 2) throw InvalidArgument("'gap' must have two entries");
  x.span_gap = {gap[0], gap[1]};
  for (const auto &name : field<std::vector<std::string>>(j, "labels"))
    x.labels.insert(relation_from_name(name));
  if (j.contains("ctx")) {
    const Json &ctx = j["ctx"];
    x.context.tokens = field<std::vector<std::string>>(ctx, "tokens");
    x.context.upos = field<std::vector<std::string>>(ctx, "upos");
    x.context.heads = field<std::vector<int>>(ctx, "heads");
    x.context.e1_positions = field<std::vector<int>>(ctx, "e1");
    x.context.e2_positions = field<std::vector<int>>(ctx, "e2");
    const int n = static_cast<int>(x.context.tokens.size());
    if (static_cast<int>(x.context.heads.size()) != n ||
        static_cast<int>(x.context.upos.size()) != n)
      throw InvalidArgument("'ctx' columns differ in length");
    for (const auto *positions : {&x.context.e1_positions, &x.context.e2_positions})
      for (int p : *positions)
        if (p < 1 || p > n) throw InvalidArgument("'ctx' position out of range");
  }
  return x;
}

std::string to_jsonl_line(const Json &j) { return j.dump() + "\n"; }

void read_jsonl(std::istream &in, const std::string &source,
                const std::function<void(const Json &, int)> &fn) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(source, line_no, "malformed JSON: " + std::string(e.what()));
    }
    try {
      fn(j, line_no);
    } catch (const ParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw ParseError(source, line_no, e.what());
    }
  }
}

}  // namespace evkg
