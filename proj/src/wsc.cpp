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

#include "evkg/wsc.hpp"

#include <algorithm>

#include "evkg/error.hpp"
#include "evkg/extractor.hpp"
#include "evkg/seeder.hpp"

namespace evkg {
namespace {

const char *marker_text(Placeholder m) {
  switch (m) {
    case Placeholder::kX: return "X";
    case Placeholder::kY: return "Y";
    case Placeholder::kP: return "P";
  }
  return "?";
}

const Eventuality *containing(const std::vector<Eventuality> &events, int position) {
  for (const Eventuality &e : events)
    if (e.contains_position(position)) return &e;
  return nullptr;
}

PseudoEventuality make_pseudo(const Eventuality &e, int position, Placeholder marker) {
  PseudoEventuality out;
  out.base = e;
  out.slot = e.local_index(position);
  out.marker = marker;
  out.first_position = *std::min_element(e.positions.begin(), e.positions.end());
  return out;
}

CandidateSide prepare_side(const DependencyGraph &graph, const std::vector<Eventuality> &events,
                           int candidate, Placeholder marker, int pronoun) {
  CandidateSide side;
  const Eventuality *en = containing(events, candidate);
  const Eventuality *ep = containing(events, pronoun);
  // Both words inside one eventuality leave nothing to link.
  if (!en || !ep || en == ep) return side;
  side.candidate = make_pseudo(*en, candidate, marker);
  side.pronoun = make_pseudo(*ep, pronoun, Placeholder::kP);
  side.candidate_first = side.candidate->first_position < side.pronoun->first_position;

  const auto instances = build_instances(graph, {*en, *ep});
  if (!instances.empty()) {
    const auto types = match_seed(instances.front(), graph);
    if (!types.empty()) side.relation = *types.begin();
  }
  return side;
}

int position_field(const Json &j, const char *name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw InvalidArgument(std::string("question needs integer '") + name + "'");
  return j[name].get<int>();
}

}  // namespace

void WscQuestion::validate() const {
  const int n = sentence.size();
  for (int p : {candidates[0], candidates[1], pronoun})
    if (p < 1 || p > n) throw InvalidArgument("question " + id + ": token position out of range");
  if (candidates[0] == candidates[1]) throw InvalidArgument("question " + id + ": candidates must differ");
  if (pronoun == candidates[0] || pronoun == candidates[1])
    throw InvalidArgument("question " + id + ": pronoun must not be a candidate");
  if (answer && *answer != 0 && *answer != 1)
    throw InvalidArgument("question " + id + ": answer must be 0 or 1");
}

std::string WscQuestion::candidate_word(int which) const {
  return sentence.token(candidates[which]).form;
}

std::string PseudoEventuality::display() const {
  std::string out;
  for (int k = 0; k < base.size(); ++k) {
    if (k) out += ' ';
    out += k == slot ? marker_text(marker) : base.words[k];
  }
  return out;
}

bool PseudoEventuality::matches(const Eventuality &e) const {
  if (e.size() != base.size() || e.edges != base.edges) return false;
  for (int k = 0; k < base.size(); ++k)
    if (k != slot && e.words[k] != base.words[k]) return false;
  return true;
}

PreparedQuestion prepare(const WscQuestion &q) {
  q.validate();
  const auto events = extract_eventualities(q.sentence);
  PreparedQuestion out;
  out.sides[0] = prepare_side(q.sentence, events, q.candidates[0], Placeholder::kX, q.pronoun);
  out.sides[1] = prepare_side(q.sentence, events, q.candidates[1], Placeholder::kY, q.pronoun);
  return out;
}

std::size_t support_count(const KnowledgeGraph &graph, const CandidateSide &side) {
  if (!side.usable()) return 0;
  const PseudoEventuality &head = side.candidate_first ? *side.candidate : *side.pronoun;
  const PseudoEventuality &tail = side.candidate_first ? *side.pronoun : *side.candidate;

  // Any fixed word narrows the head search through the word index.
  const int anchor = head.slot == 0 ? 1 : 0;
  if (anchor >= head.base.size()) return 0;
  std::size_t count = 0;
  for (const std::string &hk : graph.keys_with_word(head.base.words[anchor])) {
    const Eventuality &h = graph.eventuality(hk);
    if (!head.matches(h)) continue;
    for (const std::string &tk : graph.successors(hk)) {
      if (graph.weight(hk, side.relation, tk) <= 0.0) continue;
      const Eventuality &t = graph.eventuality(tk);
      if (tail.matches(t) && h.words[head.slot] == t.words[tail.slot]) ++count;
    }
  }
  return count;
}

WscPrediction resolve(const KnowledgeGraph &graph, const WscQuestion &q) {
  const PreparedQuestion prepared = prepare(q);
  WscPrediction out;
  for (int k = 0; k < 2; ++k) {
    out.extractable[k] = prepared.sides[k].usable();
    out.relations[k] = prepared.sides[k].relation;
    out.scores[k] = support_count(graph, prepared.sides[k]);
  }
  if (out.scores[0] > out.scores[1]) out.choice = 0;
  if (out.scores[1] > out.scores[0]) out.choice = 1;
  return out;
}

WscQuestion question_from_json(const Json &j) {
  if (!j.is_object()) throw InvalidArgument("question must be a JSON object");
  WscQuestion q;
  q.id = j.value("id", std::string());
  if (!j.contains("tokens") || !j["tokens"].is_array() || j["tokens"].empty())
    throw InvalidArgument("question needs a non-empty 'tokens' array");
  int index = 0;
  for (const Json &t : j["tokens"]) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_number_integer() || !t[3].is_string())
      throw InvalidArgument("token must be [form, upos, head, deprel]");
    Token tok;
    tok.index = ++index;
    tok.form = t[0].get<std::string>();
    std::transform(tok.form.begin(), tok.form.end(), tok.form.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    tok.upos = t[1].get<std::string>();
    tok.head = t[2].get<int>();
    tok.deprel = t[3].get<std::string>();
    q.sentence.tokens.push_back(std::move(tok));
  }
  q.sentence.sentence_id = q.id;
  q.sentence.text = j.value("text", std::string());
  if (const std::string bad = validate_tree(q.sentence); !bad.empty())
    throw InvalidArgument("question " + q.id + ": " + bad);
  if (!j.contains("candidates") || !j["candidates"].is_array() || j["candidates"].size() != 2)
    throw InvalidArgument("question needs two 'candidates'");
  for (int k = 0; k < 2; ++k) {
    if (!j["candidates"][k].is_number_integer())
      throw InvalidArgument("candidate positions must be integers");
    q.candidates[k] = j["candidates"][k].get<int>();
  }
  q.pronoun = position_field(j, "pronoun");
  if (j.contains("answer") && !j["answer"].is_null()) q.answer = position_field(j, "answer");
  q.validate();
  return q;
}

std::vector<WscQuestion> read_questions(std::istream &in, const std::string &source) {
  std::vector<WscQuestion> out;
  read_jsonl(in, source, [&](const Json &j, int) { out.push_back(question_from_json(j)); });
  return out;
}

WscSummary summarize(const std::vector<WscQuestion> &questions,
                     const std::vector<WscPrediction> &predictions) {
  if (questions.size() != predictions.size())
    throw InvalidArgument("summarize: one prediction per question required");
  WscSummary s;
  for (std::size_t k = 0; k < questions.size(); ++k) {
    if (!questions[k].answer) {
      ++s.ungraded;
    } else if (!predictions[k].choice) {
      ++s.abstain;
    } else if (*predictions[k].choice == *questions[k].answer) {
      ++s.correct;
    } else {
      ++s.wrong;
    }
  }
  const std::size_t answered = s.correct + s.wrong;
  const std::size_t graded = answered + s.abstain;
  if (answered) s.precision = static_cast<double>(s.correct) / answered;
  if (graded) s.overall = (s.correct + 0.5 * s.abstain) / graded;
  return s;
}

Json wsc_report(const std::vector<WscQuestion> &questions,
                const std::vector<WscPrediction> &predictions) {
  const WscSummary s = summarize(questions, predictions);
  Json report;
  report["convention"] =
      "A_p = correct / (correct + wrong); A_o counts each abstention as half correct";
  Json items = Json::array();
  for (std::size_t k = 0; k < questions.size(); ++k) {
    const WscQuestion &q = questions[k];
    const WscPrediction &p = predictions[k];
    Json item;
    item["id"] = q.id;
    item["candidates"] = {q.candidate_word(0), q.candidate_word(1)};
    item["scores"] = {p.scores[0], p.scores[1]};
    item["relations"] = {std::string(relation_name(p.relations[0])),
                         std::string(relation_name(p.relations[1]))};
    item["extractable"] = {p.extractable[0], p.extractable[1]};
    item["prediction"] = p.choice ? Json(q.candidate_word(*p.choice)) : Json(nullptr);
    if (q.answer) {
      item["gold"] = q.candidate_word(*q.answer);
      item["outcome"] = !p.choice ? "abstain" : (*p.choice == *q.answer ? "correct" : "wrong");
    }
    items.push_back(std::move(item));
  }
  report["questions"] = std::move(items);
  Json summary;
  summary["correct"] = s.correct;
  summary["wrong"] = s.wrong;
  summary["abstain"] = s.abstain;
  summary["ungraded"] = s.ungraded;
  summary["A_p"] = s.precision ? Json(*s.precision) : Json(nullptr);
  summary["A_o"] = s.overall ? Json(*s.overall) : Json(nullptr);
  report["summary"] = std::move(summary);
  return report;
}

}  // namespace evkg
