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

#ifndef EVKG_SERIALIZATION_HPP_
#define EVKG_SERIALIZATION_HPP_

#include <functional>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "evkg/eventuality.hpp"
#include "evkg/seeder.hpp"

namespace evkg {

using Json = nlohmann::ordered_json;

// {"key":..., "words":[...], "upos":[...], "edges":[[g,"rel",d],...],
//  "pattern":..., "freq":n}
Json eventuality_to_json(const Eventuality &e);
// Throws InvalidArgument on schema violations, including a key that does
// not match the words and edges.
Eventuality eventuality_from_json(const Json &j);

// {"e1":key, "e2":key, "sid":..., "gap":[lo,hi], "labels":[...], "ctx":{...}}
// "ctx" carries the sentence so later stages can run from this file alone.
Json instance_to_json(const TrainingInstance &x, bool with_context = true);
TrainingInstance instance_from_json(const Json &j);

// Compact single-line dump with a trailing newline.
std::string to_jsonl_line(const Json &j);

// Calls `fn(json, line_number)` for every non-blank line. Malformed JSON or
// an exception thrown by `fn` becomes a ParseError naming source and line.
void read_jsonl(std::istream &in, const std::string &source,
                const std::function<void(const Json &, int)> &fn);

}  // namespace evkg

#endif  // EVKG_SERIALIZATION_HPP_
