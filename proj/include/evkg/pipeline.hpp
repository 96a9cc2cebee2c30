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

#ifndef EVKG_PIPELINE_HPP_
#define EVKG_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evkg/bootstrap.hpp"
#include "evkg/kg_store.hpp"
#include "evkg/relation_type.hpp"
#include "evkg/wsc.hpp"

namespace evkg {

inline constexpr const char *kVersion = "0.1.0";
inline constexpr const char *kPatternSetVersion = "builtin-14/1";
inline constexpr const char *kSchemaVersion = "evkg-jsonl/1";

// Process exit codes shared by the CLI and the Python bindings.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitUnknownEvent = 3,
  kExitAmbiguousEvent = 4,
};

using Path = std::filesystem::path;

struct ExtractOptions {
  std::vector<Path> inputs;
  Path out_events;
  Path out_instances;
  bool ud2 = false;
  std::optional<std::string> clausal_labels;  // comma list; default set when unset
  int workers = 1;
};

struct ExtractSummary {
  std::size_t sentences = 0;
  std::size_t clausal = 0;  // dropped by the clause filter
  std::size_t errors = 0;   // malformed sentence blocks
  std::size_t eventualities = 0;  // occurrences, before merging
  std::size_t unique = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_pattern;
};

// CoNLL-U -> aggregated eventualities.jsonl + unlabeled instances.jsonl.
// Malformed sentences are reported on `log` and skipped.
ExtractSummary cmd_extract(const ExtractOptions &options, std::ostream &log);

struct SeedSummary {
  std::size_t instances = 0;
  std::size_t seeded = 0;
  std::map<RelationType, std::size_t> per_type;
};

// Labels every instance with the seed connectives; writes the labeled ones.
SeedSummary cmd_seed(const Path &instances, const Path &out, std::ostream &log);

struct BootstrapOptions {
  Path instances;
  Path seeds;
  Path out;
  Path telemetry;  // defaults to "<out>.telemetry.jsonl"
  Path model_dir;  // optional classifier checkpoints
  BootstrapConfig config;
};

// Writes every labeled instance (seeds plus bootstrapped) in instance order.
std::vector<IterationTelemetry> cmd_bootstrap(const BootstrapOptions &options, std::ostream &log);

struct BuildOptions {
  Path events;
  Path relations;
  std::optional<Path> instances;  // all instances, for Co_Occurrence weights
  Path out;
  bool core = false;
  std::int64_t min_freq = 2;
};

KnowledgeGraph cmd_build(const BuildOptions &options, std::ostream &log);

struct QueryOptions {
  std::string mode = "tails";  // tails | heads | rels
  Path kg;
  std::string event;
  std::string event2;
  std::vector<RelationType> relations;
  std::size_t topk = 10;
  bool exclude_cooccurrence = false;
};

// Writes a JSON document to `out` and returns an ExitCode. Events are given
// either as canonical keys or as space separated words.
int cmd_query(const QueryOptions &options, std::ostream &out, std::ostream &log);

// Same as above against an already loaded graph.
int run_query(const KnowledgeGraph &graph, const QueryOptions &options, std::ostream &out,
              std::ostream &log);

WscSummary cmd_wsc(const Path &kg, const Path &questions, const Path &report, std::ostream &log);

// "R1[,R2]" -> types; throws InvalidArgument on unknown names.
std::vector<RelationType> parse_relation_path(const std::string &text);

}  // namespace evkg

#endif  // EVKG_PIPELINE_HPP_
