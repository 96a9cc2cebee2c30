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

#include "evkg/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <future>

#include "evkg/conllu.hpp"
#include "evkg/error.hpp"
#include "evkg/extractor.hpp"
#include "evkg/inference.hpp"
#include "evkg/seeder.hpp"
#include "evkg/serialization.hpp"
#include "text_util.hpp"

namespace evkg {
namespace {

constexpr std::size_t kBatchSentences = 2048;

std::ifstream open_in(const Path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  return in;
}

std::ofstream open_out(const Path &p) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  return out;
}

std::vector<TrainingInstance> read_instances(const Path &p) {
  std::ifstream in = open_in(p);
  std::vector<TrainingInstance> out;
  read_jsonl(in, p.string(), [&](const Json &j, int) { out.push_back(instance_from_json(j)); });
  return out;
}

struct SentenceOutput {
  std::vector<Eventuality> eventualities;
  std::vector<TrainingInstance> instances;
  bool clausal = false;
};

SentenceOutput process_sentence(const DependencyGraph &graph, const ClauseFilter &filter) {
  SentenceOutput out;
  if (filter.is_clausal(graph)) {
    out.clausal = true;
    return out;
  }
  out.eventualities = extract_eventualities(graph);
  out.instances = build_instances(graph, out.eventualities);
  return out;
}

// Runs one batch over `workers` threads; results keep sentence order.
std::vector<SentenceOutput> process_batch(const std::vector<DependencyGraph> &batch,
                                          const ClauseFilter &filter, int workers) {
  std::vector<SentenceOutput> out(batch.size());
  const std::size_t n = batch.size();
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<std::future<void>> tasks;
  for (std::size_t s = 0; s < shards; ++s) {
    tasks.push_back(std::async(std::launch::async, [&, s] {
      for (std::size_t k = s; k < n; k += shards) out[k] = process_sentence(batch[k], filter);
    }));
  }
  for (auto &t : tasks) t.get();
  return out;
}

std::string resolve_event(const KnowledgeGraph &graph, const std::string &text, int &code,
                          Json &diagnostic) {
  code = kExitOk;
  if (text.find('|') != std::string::npos) {
    if (graph.contains(text)) return text;
    code = kExitUnknownEvent;
    diagnostic = {{"error", "unknown eventuality"}, {"event", text}};
    return {};
  }
  const auto matches = graph.match_by_words(text::split_words(text));
  if (matches.size() == 1) return matches.front()->key;
  if (matches.empty()) {
    code = kExitUnknownEvent;
    diagnostic = {{"error", "unknown eventuality"}, {"event", text}};
    return {};
  }
  code = kExitAmbiguousEvent;
  Json keys = Json::array();
  for (const Eventuality *e : matches) keys.push_back(e->key);
  diagnostic = {{"error", "ambiguous eventuality; pass one of the keys"},
                {"event", text},
                {"candidates", std::move(keys)}};
  return {};
}

Json result_json(const KnowledgeGraph &graph, const ScoredResult &r, bool is_path) {
  Json j;
  if (is_path) {
    j["path"] = r.target;
  } else {
    j["key"] = r.target;
    j["phrase"] = graph.eventuality(r.target).phrase();
  }
  j["probability"] = r.probability;
  j["support"] = r.support;
  return j;
}

}  // namespace

std::vector<RelationType> parse_relation_path(const std::string &text) {
  std::vector<RelationType> out;
  for (std::string_view part : text::split(text, ','))
    out.push_back(relation_from_name(text::trim(part)));
  if (out.empty() || out.size() > 2)
    throw InvalidArgument("relation path must name one or two relations");
  return out;
}

ExtractSummary cmd_extract(const ExtractOptions &options, std::ostream &log) {
  if (options.workers < 1) throw InvalidArgument("--workers must be >= 1");
  const ClauseFilter filter =
      options.clausal_labels ? ClauseFilter::from_list(*options.clausal_labels) : ClauseFilter();
  ExtractSummary summary;
  std::map<std::string, Eventuality> merged;
  std::ofstream instances_out = open_out(options.out_instances);

  auto flush = [&](std::vector<DependencyGraph> &batch) {
    for (SentenceOutput &s : process_batch(batch, filter, options.workers)) {
      if (s.clausal) ++summary.clausal;
      for (Eventuality &e : s.eventualities) {
        ++summary.eventualities;
        ++summary.per_pattern[e.pattern];
        auto [it, inserted] = merged.try_emplace(e.key, e);
        if (inserted) {
          it->second.positions.clear();
        } else {
          it->second.frequency += e.frequency;
        }
      }
      for (const TrainingInstance &x : s.instances) {
        instances_out << to_jsonl_line(instance_to_json(x));
        ++summary.instances;
      }
    }
    batch.clear();
  };

  for (const Path &input : options.inputs) {
    std::ifstream in = open_in(input);
    ConllReader reader(in, ReaderOptions{options.ud2, input.string()});
    std::vector<DependencyGraph> batch;
    while (auto result = reader.next()) {
      if (!result->ok()) {
        ++summary.errors;
        log << "warning: " << result->error->to_string() << '\n';
        continue;
      }
      ++summary.sentences;
      batch.push_back(std::move(*result->graph));
      if (batch.size() >= kBatchSentences) flush(batch);
    }
    flush(batch);
  }

  std::ofstream events_out = open_out(options.out_events);
  for (const auto &[key, e] : merged) events_out << to_jsonl_line(eventuality_to_json(e));
  summary.unique = merged.size();

  log << "sentences " << summary.sentences << ", clausal " << summary.clausal << ", errors "
      << summary.errors << '\n';
  for (const Pattern &p : builtin_patterns()) {
    auto it = summary.per_pattern.find(p.code);
    log << "  " << p.code << '\t' << (it == summary.per_pattern.end() ? 0 : it->second) << '\n';
  }
  log << "eventualities " << summary.eventualities << " (" << summary.unique << " unique), instances "
      << summary.instances << '\n';
  return summary;
}

SeedSummary cmd_seed(const Path &instances, const Path &out, std::ostream &log) {
  SeedSummary summary;
  std::ifstream in = open_in(instances);
  std::ofstream writer = open_out(out);
  read_jsonl(in, instances.string(), [&](const Json &j, int) {
    TrainingInstance x = instance_from_json(j);
    ++summary.instances;
    x.labels = match_seed(x);
    if (x.labels.empty()) return;
    ++summary.seeded;
    for (RelationType t : x.labels) ++summary.per_type[t];
    writer << to_jsonl_line(instance_to_json(x));
  });
  log << "instances " << summary.instances << ", seeded " << summary.seeded << '\n';
  for (const auto &[t, n] : summary.per_type) log << "  " << relation_name(t) << '\t' << n << '\n';
  return summary;
}

std::vector<IterationTelemetry> cmd_bootstrap(const BootstrapOptions &options, std::ostream &log) {
  options.config.validate();
  const auto all = read_instances(options.instances);
  const auto seeds = read_instances(options.seeds);
  if (seeds.empty()) throw InvalidArgument("bootstrap needs at least one seed instance");
  const BootstrapResult result = bootstrap(all, seeds, options.config);

  std::ofstream out = open_out(options.out);
  for (const TrainingInstance &x : result.labeled()) out << to_jsonl_line(instance_to_json(x));

  const Path telemetry =
      options.telemetry.empty() ? Path(options.out.string() + ".telemetry.jsonl") : options.telemetry;
  std::ofstream tel = open_out(telemetry);
  for (const IterationTelemetry &t : result.telemetry) {
    tel << to_jsonl_line(t.to_json());
    log << "iter " << t.iter << " tau " << t.tau << " labeled " << t.labeled << '\n';
  }
  if (!options.model_dir.empty()) {
    std::filesystem::create_directories(options.model_dir);
    for (const auto &[c, model] : result.models)
      model.save(options.model_dir / (std::string(category_name(c)) + ".json"));
  }
  return result.telemetry;
}

KnowledgeGraph cmd_build(const BuildOptions &options, std::ostream &log) {
  if (options.min_freq < 1) throw InvalidArgument("--min-freq must be >= 1");
  KnowledgeGraph graph;
  {
    std::ifstream in = open_in(options.events);
    read_jsonl(in, options.events.string(), [&](const Json &j, int) {
      Eventuality e = eventuality_from_json(j);
      graph.upsert_eventuality(e, std::max<std::int64_t>(1, e.frequency));
    });
  }
  std::size_t typed = 0, cooccurrence = 0;
  {
    std::ifstream in = open_in(options.relations);
    read_jsonl(in, options.relations.string(), [&](const Json &j, int) {
      const TrainingInstance x = instance_from_json(j);
      for (RelationType t : x.labels) {
        graph.upsert_relation(x.e1_key, x.e2_key, t, 1.0);
        ++typed;
      }
    });
  }
  if (options.instances) {
    std::ifstream in = open_in(*options.instances);
    read_jsonl(in, options.instances->string(), [&](const Json &j, int) {
      const TrainingInstance x = instance_from_json(j);
      graph.upsert_relation(x.e1_key, x.e2_key, RelationType::kCoOccurrence, 1.0);
      ++cooccurrence;
    });
  }
  if (options.core) graph = graph.filter_core(options.min_freq);
  graph.check_integrity();
  save(graph, options.out);
  log << "eventualities " << graph.eventualities().size() << ", edges " << graph.edges().size()
      << " (typed " << typed << ", co-occurrence " << cooccurrence << ")\n";
  return graph;
}

int run_query(const KnowledgeGraph &graph, const QueryOptions &options, std::ostream &out,
              std::ostream &log) {
  if (options.topk < 1) throw InvalidArgument("--topk must be >= 1");
  int code = kExitOk;
  Json diagnostic;
  const std::string key = resolve_event(graph, options.event, code, diagnostic);
  if (code != kExitOk) {
    out << diagnostic.dump(2) << '\n';
    log << "error: " << diagnostic["error"].get<std::string>() << ": " << options.event << '\n';
    return code;
  }

  InferenceEngine engine(graph, InferenceOptions{!options.exclude_cooccurrence});
  Json doc;
  doc["mode"] = options.mode;
  doc["event"] = key;
  Json results = Json::array();
  if (options.mode == "rels") {
    const std::string key2 = resolve_event(graph, options.event2, code, diagnostic);
    if (code != kExitOk) {
      out << diagnostic.dump(2) << '\n';
      log << "error: " << diagnostic["error"].get<std::string>() << ": " << options.event2 << '\n';
      return code;
    }
    doc["event2"] = key2;
    for (const ScoredResult &r : engine.relation_paths(key, key2, options.topk))
      results.push_back(result_json(graph, r, true));
  } else if (options.mode == "tails" || options.mode == "heads") {
    if (options.relations.empty()) throw InvalidArgument("--relations is required for " + options.mode);
    doc["relations"] = path_name(options.relations);
    const Direction dir = options.mode == "tails" ? Direction::kForward : Direction::kBackward;
    for (const ScoredResult &r : engine.retrieve(key, options.relations, options.topk, dir))
      results.push_back(result_json(graph, r, false));
  } else {
    throw InvalidArgument("unknown query mode " + options.mode);
  }
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_query(const QueryOptions &options, std::ostream &out, std::ostream &log) {
  return run_query(load(options.kg), options, out, log);
}

WscSummary cmd_wsc(const Path &kg, const Path &questions, const Path &report, std::ostream &log) {
  const KnowledgeGraph graph = load(kg);
  std::ifstream in = open_in(questions);
  const auto qs = read_questions(in, questions.string());
  std::vector<WscPrediction> predictions;
  for (const WscQuestion &q : qs) predictions.push_back(resolve(graph, q));
  std::ofstream out = open_out(report);
  out << wsc_report(qs, predictions).dump(2) << '\n';
  const WscSummary s = summarize(qs, predictions);
  log << "correct " << s.correct << ", wrong " << s.wrong << ", abstain " << s.abstain << '\n';
  return s;
}

}  // namespace evkg
