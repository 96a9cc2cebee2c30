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

#include "evkg/conllu.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "text_util.hpp"

namespace evkg {

int DependencyGraph::root() const {
  for (const Token &t : tokens)
    if (t.head == 0) return t.index;
  return 0;
}

std::vector<int> DependencyGraph::dependents(int index) const {
  std::vector<int> out;
  for (const Token &t : tokens)
    if (t.head == index) out.push_back(t.index);
  return out;
}

std::string validate_tree(const DependencyGraph &graph) {
  const int n = graph.size();
  if (n == 0) return "sentence has no tokens";
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token &t = graph.tokens[i];
    if (t.index != i + 1)
      return "token " + std::to_string(i + 1) + " has index " + std::to_string(t.index);
    if (t.form.empty()) return "token " + std::to_string(t.index) + " has an empty form";
    if (t.head < 0 || t.head > n)
      return "token " + std::to_string(t.index) + " has head " + std::to_string(t.head) +
             " outside the sentence";
    if (t.head == t.index) return "token " + std::to_string(t.index) + " heads itself";
    if (t.head == 0) ++roots;
  }
  if (roots == 0) return "sentence has no root";
  if (roots > 1) return "sentence has " + std::to_string(roots) + " roots";

  // Every token must reach the root in at most n steps.
  for (const Token &t : graph.tokens) {
    int cur = t.index;
    int steps = 0;
    while (cur != 0) {
      cur = graph.tokens[cur - 1].head;
      if (++steps > n) return "cycle through token " + std::to_string(t.index);
    }
  }
  return {};
}

std::string SentenceError::to_string() const {
  return source + ":" + std::to_string(line) + ": " + message;
}

ConllReader::ConllReader(std::istream &in, ReaderOptions options)
    : in_(in), options_(std::move(options)) {}

std::optional<SentenceResult> ConllReader::next() {
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) {
      if (lines.empty()) continue;
      return finish_block(lines);
    }
    lines.emplace_back(line_no_, line);
  }
  if (lines.empty()) return std::nullopt;
  return finish_block(lines);
}

SentenceResult ConllReader::finish_block(std::vector<std::pair<int, std::string>> &lines) {
  ++block_count_;
  SentenceResult result;
  auto fail = [&](int line, std::string message) {
    result.error = SentenceError{options_.source_name, line, std::move(message)};
    return result;
  };

  DependencyGraph graph;
  graph.sentence_id = options_.source_name + "#" + std::to_string(block_count_);
  bool have_text = false;
  int first_token_line = lines.front().first;

  for (const auto &[line_no, line] : lines) {
    if (line[0] == '#') {
      std::string_view body = text::trim(std::string_view(line).substr(1));
      if (body.starts_with("sent_id")) {
        auto eq = body.find('=');
        if (eq != std::string_view::npos)
          graph.sentence_id = std::string(text::trim(body.substr(eq + 1)));
      } else if (body.starts_with("text")) {
        auto eq = body.find('=');
        if (eq != std::string_view::npos) {
          graph.text = std::string(text::trim(body.substr(eq + 1)));
          have_text = true;
        }
      }
      continue;
    }
    std::vector<std::string_view> cols = text::split(line, '\t');
    if (cols.size() != 10)
      return fail(line_no, "expected 10 tab-separated columns, found " +
                               std::to_string(cols.size()));
    std::string_view id = cols[0];
    // Multiword token ranges and empty nodes are not part of the basic tree.
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos)
      continue;
    auto index = text::parse_int(id);
    if (!index) return fail(line_no, "non-integer ID '" + std::string(id) + "'");
    auto head = text::parse_int(cols[6]);
    if (!head) return fail(line_no, "non-integer HEAD '" + std::string(cols[6]) + "'");
    if (*index != graph.size() + 1)
      return fail(line_no, "token ID " + std::to_string(*index) + " out of sequence");
    if (graph.tokens.empty()) first_token_line = line_no;

    Token token;
    token.index = *index;
    token.form = text::lowercase(cols[1]);
    token.upos = std::string(cols[3]);
    token.head = *head;
    token.deprel = std::string(cols[7]);
    if (options_.ud2) token.deprel = normalize_ud2_label(token.deprel);
    graph.tokens.push_back(std::move(token));
  }

  if (graph.tokens.empty()) return fail(lines.front().first, "sentence block has no tokens");
  if (std::string problem = validate_tree(graph); !problem.empty())
    return fail(first_token_line, "rejected sentence " + graph.sentence_id + ": " + problem);

  if (!have_text) {
    std::string joined;
    for (const Token &t : graph.tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t.form;
    }
    graph.text = std::move(joined);
  }
  result.graph = std::move(graph);
  return result;
}

std::vector<SentenceResult> parse_conllu(std::istream &in, const ReaderOptions &options) {
  ConllReader reader(in, options);
  std::vector<SentenceResult> out;
  while (auto r = reader.next()) out.push_back(std::move(*r));
  return out;
}

std::vector<SentenceResult> parse_conllu_string(std::string_view text,
                                                const ReaderOptions &options) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, options);
}

std::string serialize_conllu(const DependencyGraph &graph) {
  std::ostringstream out;
  out << "# sent_id = " << graph.sentence_id << '\n';
  if (!graph.text.empty()) out << "# text = " << graph.text << '\n';
  for (const Token &t : graph.tokens) {
    out << t.index << '\t' << t.form << "\t_\t" << t.upos << "\t_\t_\t" << t.head << '\t'
        << t.deprel << "\t_\t_\n";
  }
  out << '\n';
  return out.str();
}

std::string normalize_ud2_label(const std::string &label) {
  static const std::map<std::string, std::string> kMap = {
      {"obj", "dobj"},
      {"obl", "nmod"},
      {"nsubj:pass", "nsubjpass"},
      {"aux:pass", "auxpass"},
      {"csubj:pass", "csubjpass"},
  };
  auto it = kMap.find(label);
  return it == kMap.end() ? label : it->second;
}

const std::set<std::string> &default_clausal_labels() {
  static const std::set<std::string> kLabels = {"ccomp", "csubj",   "csubjpass",
                                                "acl",   "acl:relcl", "parataxis"};
  return kLabels;
}

ClauseFilter ClauseFilter::from_list(std::string_view comma_list) {
  std::set<std::string> labels;
  for (std::string_view part : text::split(comma_list, ',')) {
    part = text::trim(part);
    if (!part.empty()) labels.emplace(part);
  }
  return ClauseFilter(std::move(labels));
}

bool ClauseFilter::is_clausal(const DependencyGraph &graph) const {
  return std::any_of(graph.tokens.begin(), graph.tokens.end(),
                     [&](const Token &t) { return labels_.count(t.deprel) > 0; });
}

}  // namespace evkg
