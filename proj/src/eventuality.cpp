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

#include "evkg/eventuality.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace evkg {

std::string Eventuality::phrase() const { return text::join(words, " "); }

bool Eventuality::contains_position(int sentence_position) const {
  return local_index(sentence_position) >= 0;
}

int Eventuality::local_index(int sentence_position) const {
  auto it = std::find(positions.begin(), positions.end(), sentence_position);
  return it == positions.end() ? -1 : static_cast<int>(it - positions.begin());
}

std::string canonical_key(const Eventuality &e) {
  std::vector<std::string> edges;
  edges.reserve(e.edges.size());
  for (const LocalEdge &edge : e.edges)
    edges.push_back(std::to_string(edge.governor) + ":" + edge.relation + ":" +
                    std::to_string(edge.dependent));
  std::sort(edges.begin(), edges.end());
  return text::join(e.words, " ") + "|" + text::join(edges, ",");
}

const std::string &assign_key(Eventuality &e) {
  e.key = canonical_key(e);
  return e.key;
}

std::vector<std::string> words_of_key(const std::string &key) {
  return text::split_words(std::string_view(key).substr(0, key.find('|')));
}

Eventuality make_eventuality(std::vector<std::string> words, std::vector<LocalEdge> edges,
                             std::string pattern, std::vector<std::string> upos) {
  Eventuality e;
  e.words = std::move(words);
  e.edges = std::move(edges);
  e.pattern = std::move(pattern);
  e.upos = upos.empty() ? std::vector<std::string>(e.words.size(), "_") : std::move(upos);
  std::vector<bool> has_head(e.words.size(), false);
  for (const LocalEdge &edge : e.edges)
    if (edge.dependent >= 0 && edge.dependent < e.size()) has_head[edge.dependent] = true;
  for (int i = 0; i < e.size(); ++i) {
    if (!has_head[i]) {
      e.center = i;
      break;
    }
  }
  assign_key(e);
  return e;
}

}  // namespace evkg
