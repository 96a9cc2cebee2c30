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

#ifndef EVKG_CONLLU_HPP_
#define EVKG_CONLLU_HPP_

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace evkg {

struct Token {
  int index = 0;       // 1-based position in the sentence
  std::string form;    // lowercased surface form
  std::string upos;
  int head = 0;        // 0 = root
  std::string deprel;

  bool operator==(const Token &) const = default;
};

// One parsed sentence. Tokens are stored in order, so tokens[i].index == i+1.
struct DependencyGraph {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::string text;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token &token(int index) const { return tokens.at(index - 1); }
  int root() const;
  // Indexes of the direct dependents of `index`, in sentence order.
  std::vector<int> dependents(int index) const;

  bool operator==(const DependencyGraph &) const = default;
};

// Returns an empty string if the graph is a well-formed tree, otherwise a
// description of the first violation found.
std::string validate_tree(const DependencyGraph &graph);

struct ReaderOptions {
  // Rewrite UD v2 labels into the UD v1 / Stanford dialect used by the
  // built-in patterns.
  bool ud2 = false;
  std::string source_name = "<input>";
};

// A sentence block that could not be turned into a graph.
struct SentenceError {
  std::string source;
  int line = 0;  // first offending line (1-based)
  std::string message;

  std::string to_string() const;
};

struct SentenceResult {
  std::optional<DependencyGraph> graph;
  std::optional<SentenceError> error;

  bool ok() const { return graph.has_value(); }
};

// Streaming CoNLL-U reader. A malformed block yields a SentenceResult
// carrying the error and reading resumes at the next block.
class ConllReader {
 public:
  explicit ConllReader(std::istream &in, ReaderOptions options = {});

  std::optional<SentenceResult> next();

 private:
  SentenceResult finish_block(std::vector<std::pair<int, std::string>> &lines);

  std::istream &in_;
  ReaderOptions options_;
  int line_no_ = 0;
  int block_count_ = 0;
};

std::vector<SentenceResult> parse_conllu(std::istream &in,
                                         const ReaderOptions &options = {});
std::vector<SentenceResult> parse_conllu_string(std::string_view text,
                                                const ReaderOptions &options = {});

// Writes the consumed columns back out; everything else becomes "_".
std::string serialize_conllu(const DependencyGraph &graph);

// UD v2 -> UD v1 label rewrite (obj -> dobj, obl -> nmod, ...). Unknown
// labels are returned unchanged.
std::string normalize_ud2_label(const std::string &label);

const std::set<std::string> &default_clausal_labels();

// Sentences carrying any of these labels are dropped before extraction.
class ClauseFilter {
 public:
  ClauseFilter() : labels_(default_clausal_labels()) {}
  explicit ClauseFilter(std::set<std::string> labels) : labels_(std::move(labels)) {}

  // Parses a comma separated label list, e.g. "ccomp,csubj".
  static ClauseFilter from_list(std::string_view comma_list);

  bool is_clausal(const DependencyGraph &graph) const;
  const std::set<std::string> &labels() const { return labels_; }

 private:
  std::set<std::string> labels_;
};

inline bool is_clausal(const DependencyGraph &graph) {
  return ClauseFilter().is_clausal(graph);
}

}  // namespace evkg

#endif  // EVKG_CONLLU_HPP_
