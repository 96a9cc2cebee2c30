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

// Command line front end: one subcommand per pipeline stage.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evkg/error.hpp"
#include "evkg/pipeline.hpp"

namespace {

std::string version_text() {
  return std::string("evkg ") + evkg::kVersion + "\npattern set " + evkg::kPatternSetVersion +
         "\nschema " + evkg::kSchemaVersion;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Build and query an eventuality knowledge graph from parsed text."};
  app.set_version_flag("--version", version_text());
  app.set_config("--config", "", "key=value file; flags given on the command line win");
  app.require_subcommand(1);

  evkg::ExtractOptions extract;
  std::vector<std::string> inputs;
  std::string clausal;
  auto *ex = app.add_subcommand("extract", "CoNLL-U -> eventualities and instances");
  ex->add_option("--input", inputs, "CoNLL-U files")->required()->check(CLI::ExistingFile);
  ex->add_option("--out-events", extract.out_events, "eventualities JSONL")->required();
  ex->add_option("--out-instances", extract.out_instances, "instances JSONL")->required();
  ex->add_flag("--ud2", extract.ud2, "input uses UD v2 labels");
  ex->add_option("--clausal-labels", clausal, "comma separated labels that drop a sentence");
  ex->add_option("--workers", extract.workers, "parallel extraction threads")
      ->check(CLI::PositiveNumber);

  std::string seed_in, seed_out;
  auto *sd = app.add_subcommand("seed", "label instances with seed connectives");
  sd->add_option("--instances", seed_in)->required()->check(CLI::ExistingFile);
  sd->add_option("--out", seed_out)->required();

  evkg::BootstrapOptions boot;
  auto *bs = app.add_subcommand("bootstrap", "self-train relation classifiers");
  bs->add_option("--instances", boot.instances)->required()->check(CLI::ExistingFile);
  bs->add_option("--seeds", boot.seeds)->required()->check(CLI::ExistingFile);
  bs->add_option("--out", boot.out)->required();
  bs->add_option("--telemetry", boot.telemetry, "defaults to <out>.telemetry.jsonl");
  bs->add_option("--model-dir", boot.model_dir, "write one checkpoint per category");
  bs->add_option("--iterations", boot.config.iterations)->capture_default_str();
  bs->add_option("--tau0", boot.config.tau0)->capture_default_str();
  bs->add_option("--learning-rate", boot.config.learning_rate)->capture_default_str();
  bs->add_option("--batch-size", boot.config.batch_size)->capture_default_str();
  bs->add_option("--dropout", boot.config.dropout)->capture_default_str();
  bs->add_option("--embedding-dim", boot.config.dims.embedding)->capture_default_str();
  bs->add_option("--hidden-dim", boot.config.dims.hidden)->capture_default_str();
  bs->add_option("--ffn-hidden", boot.config.dims.ffn_hidden)->capture_default_str();
  bs->add_option("--negative-ratio", boot.config.negative_ratio)->capture_default_str();
  bs->add_option("--epochs", boot.config.epochs)->capture_default_str();
  bs->add_option("--seed", boot.config.seed)->capture_default_str();
  bs->add_option("--pretrained", boot.config.pretrained, "word vectors, one per line");

  evkg::BuildOptions build;
  std::string build_instances;
  auto *bd = app.add_subcommand("build", "assemble and persist the graph");
  bd->add_option("--events", build.events)->required()->check(CLI::ExistingFile);
  bd->add_option("--relations", build.relations, "labeled instances")
      ->required()
      ->check(CLI::ExistingFile);
  bd->add_option("--instances", build_instances, "all instances, adds Co_Occurrence edges")
      ->check(CLI::ExistingFile);
  bd->add_option("--out", build.out)->required();
  bd->add_flag("--core", build.core, "drop rare eventualities and pairs");
  bd->add_option("--min-freq", build.min_freq)->capture_default_str();

  evkg::QueryOptions query;
  std::string relations;
  auto *qy = app.add_subcommand("query", "retrieve eventualities or relations");
  qy->add_option("mode", query.mode, "tails, heads or rels")
      ->required()
      ->check(CLI::IsMember({"tails", "heads", "rels"}));
  qy->add_option("--kg", query.kg)->required()->check(CLI::ExistingDirectory);
  qy->add_option("--event", query.event, "words or key")->required();
  qy->add_option("--event2", query.event2, "second event for rels");
  qy->add_option("--relations", relations, "R1[,R2]");
  qy->add_option("--topk", query.topk)->capture_default_str();
  qy->add_flag("--exclude-cooccurrence", query.exclude_cooccurrence);

  std::string wsc_kg, wsc_questions, wsc_report;
  auto *ws = app.add_subcommand("wsc", "resolve pronoun questions against the graph");
  ws->add_option("--kg", wsc_kg)->required()->check(CLI::ExistingDirectory);
  ws->add_option("--questions", wsc_questions)->required()->check(CLI::ExistingFile);
  ws->add_option("--report", wsc_report)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? evkg::kExitOk : evkg::kExitUsage;
  }

  try {
    if (*ex) {
      for (const auto &p : inputs) extract.inputs.emplace_back(p);
      if (!clausal.empty()) extract.clausal_labels = clausal;
      evkg::cmd_extract(extract, std::cerr);
    } else if (*sd) {
      evkg::cmd_seed(seed_in, seed_out, std::cerr);
    } else if (*bs) {
      evkg::cmd_bootstrap(boot, std::cerr);
    } else if (*bd) {
      if (!build_instances.empty()) build.instances = build_instances;
      evkg::cmd_build(build, std::cerr);
    } else if (*qy) {
      if (!relations.empty()) query.relations = evkg::parse_relation_path(relations);
      if (query.mode == "rels" && query.event2.empty())
        throw evkg::InvalidArgument("rels needs --event2");
      return evkg::cmd_query(query, std::cout, std::cerr);
    } else if (*ws) {
      evkg::cmd_wsc(wsc_kg, wsc_questions, wsc_report, std::cerr);
    }
  } catch (const evkg::InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return evkg::kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return evkg::kExitFailure;
  }
  return evkg::kExitOk;
}
