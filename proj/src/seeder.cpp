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

#include "evkg/seeder.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace evkg {
namespace {

bool is_punct(const std::string &form, const std::string &upos) {
  if (upos == "PUNCT") return true;
  return !form.empty() && std::all_of(form.begin(), form.end(), [](char c) {
    return std::string_view(",.;:!?-\"'()").find(c) != std::string_view::npos;
  });
}

int first_position(const Eventuality &e) {
  return *std::min_element(e.positions.begin(), e.positions.end());
}

std::vector<std::string> words_at(const InstanceContext &ctx, const std::vector<int> &pos) {
  std::vector<std::string> out;
  for (int p : pos) out.push_back(ctx.tokens.at(p - 1));
  return out;
}

// Finds `rule` as a contiguous run inside `region` (punctuation already
// removed) and checks that some connective word hangs off E1 or E2.
bool fires(const SeedRule &rule, const InstanceContext &ctx, const std::vector<int> &region) {
  const auto &words = rule.connective;
  if (words.empty() || region.size() < words.size()) return false;
  for (size_t start = 0; start + words.size() <= region.size(); ++start) {
    bool match = true;
    for (size_t k = 0; k < words.size() && match; ++k)
      match = text::lowercase(ctx.tokens[region[start + k] - 1]) == words[k];
    if (!match) continue;
    for (size_t k = 0; k < words.size(); ++k) {
      int head = ctx.heads[region[start + k] - 1];
      if (std::count(ctx.e1_positions.begin(), ctx.e1_positions.end(), head) ||
          std::count(ctx.e2_positions.begin(), ctx.e2_positions.end(), head))
        return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> InstanceContext::e1_words() const { return words_at(*this, e1_positions); }
std::vector<std::string> InstanceContext::e2_words() const { return words_at(*this, e2_positions); }

InstanceContext make_context(const DependencyGraph &graph, const Eventuality &e1,
                             const Eventuality &e2) {
  InstanceContext ctx;
  for (const Token &t : graph.tokens) {
    ctx.tokens.push_back(t.form);
    ctx.upos.push_back(t.upos);
    ctx.heads.push_back(t.head);
  }
  ctx.e1_positions = e1.positions;
  ctx.e2_positions = e2.positions;
  return ctx;
}

std::vector<TrainingInstance> build_instances(const DependencyGraph &graph,
                                              const std::vector<Eventuality> &eventualities) {
  std::vector<const Eventuality *> ordered;
  for (const Eventuality &e : eventualities) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Eventuality *a, const Eventuality *b) {
    return first_position(*a) < first_position(*b);
  });

  std::vector<TrainingInstance> out;
  for (size_t i = 0; i < ordered.size(); ++i) {
    for (size_t j = i + 1; j < ordered.size(); ++j) {
      const Eventuality &e1 = *ordered[i];
      const Eventuality &e2 = *ordered[j];
      TrainingInstance x;
      x.e1_key = e1.key;
      x.e2_key = e2.key;
      x.sentence_id = graph.sentence_id;
      x.span_gap = {*std::max_element(e1.positions.begin(), e1.positions.end()) + 1,
                    first_position(e2) - 1};
      x.context = make_context(graph, e1, e2);
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::set<RelationType> match_seed(const TrainingInstance &instance,
                                  const std::vector<SeedRule> &rules) {
  const InstanceContext &ctx = instance.context;
  std::set<RelationType> out;
  if (ctx.empty() || ctx.e1_positions.empty() || ctx.e2_positions.empty()) return out;
  const int n = static_cast<int>(ctx.tokens.size());

  auto in_eventuality = [&](int p) {
    return std::count(ctx.e1_positions.begin(), ctx.e1_positions.end(), p) ||
           std::count(ctx.e2_positions.begin(), ctx.e2_positions.end(), p);
  };
  auto region = [&](int lo, int hi) {
    std::vector<int> r;
    for (int p = std::max(lo, 1); p <= std::min(hi, n); ++p)
      if (!is_punct(ctx.tokens[p - 1], ctx.upos.empty() ? "" : ctx.upos[p - 1]) &&
          !in_eventuality(p))
        r.push_back(p);
    return r;
  };

  const std::vector<int> gap = region(instance.span_gap.first, instance.span_gap.second);
  const int e2_start = *std::min_element(ctx.e2_positions.begin(), ctx.e2_positions.end());
  const std::vector<int> tail = region(e2_start + 1, n);

  for (const SeedRule &rule : rules) {
    const auto &where = rule.side == TemplateSide::kTrailing ? tail : gap;
    if (fires(rule, ctx, where)) out.insert(rule.relation);
  }
  return out;
}

std::set<RelationType> match_seed(const TrainingInstance &instance, const DependencyGraph &graph,
                                  const std::vector<SeedRule> &rules) {
  TrainingInstance copy = instance;
  std::vector<int> e1 = instance.context.e1_positions, e2 = instance.context.e2_positions;
  copy.context = InstanceContext{};
  for (const Token &t : graph.tokens) {
    copy.context.tokens.push_back(t.form);
    copy.context.upos.push_back(t.upos);
    copy.context.heads.push_back(t.head);
  }
  copy.context.e1_positions = std::move(e1);
  copy.context.e2_positions = std::move(e2);
  return match_seed(copy, rules);
}

std::vector<std::pair<std::string, std::string>> co_occurrence_pairs(
    const std::vector<Eventuality> &eventualities) {
  std::vector<const Eventuality *> ordered;
  for (const Eventuality &e : eventualities) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Eventuality *a, const Eventuality *b) {
    return first_position(*a) < first_position(*b);
  });
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < ordered.size(); ++i)
    for (size_t j = i + 1; j < ordered.size(); ++j)
      out.emplace_back(ordered[i]->key, ordered[j]->key);
  return out;
}

}  // namespace evkg
