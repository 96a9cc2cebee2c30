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

#ifndef EVKG_EVENTUALITY_HPP_
#define EVKG_EVENTUALITY_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace evkg {

// A dependency edge inside an eventuality. Endpoints are local word indexes
// (0-based positions in Eventuality::words).
struct LocalEdge {
  int governor = 0;
  std::string relation;
  int dependent = 0;

  auto operator<=>(const LocalEdge &) const = default;
};

// A verb-centred hyperedge over words. Words are kept in sentence order.
struct Eventuality {
  std::vector<std::string> words;
  std::vector<std::string> upos;
  // 1-based positions in the source sentence; empty when the eventuality was
  // loaded from storage rather than extracted.
  std::vector<int> positions;
  std::vector<LocalEdge> edges;
  std::string pattern;
  int center = 0;  // local index of the centre verb or copular head
  std::int64_t frequency = 0;
  std::string key;

  int size() const { return static_cast<int>(words.size()); }
  std::string phrase() const;  // words joined by spaces
  bool contains_position(int sentence_position) const;
  // Local index of a sentence position, or -1.
  int local_index(int sentence_position) const;
};

// "forms joined by spaces|gov:rel:dep,..." with edges sorted as strings.
std::string canonical_key(const Eventuality &e);

// Recomputes e.key and returns it.
const std::string &assign_key(Eventuality &e);

// Words of a canonical key (the part before '|').
std::vector<std::string> words_of_key(const std::string &key);

// Builds an eventuality from explicit parts; used by storage, tests and
// question fixtures. The centre is the word without an incoming edge.
Eventuality make_eventuality(std::vector<std::string> words, std::vector<LocalEdge> edges,
                             std::string pattern, std::vector<std::string> upos = {});

}  // namespace evkg

#endif  // EVKG_EVENTUALITY_HPP_
