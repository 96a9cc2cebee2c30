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

// Python bindings over the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "evkg/bootstrap.hpp"
#include "evkg/conllu.hpp"
#include "evkg/error.hpp"
#include "evkg/extractor.hpp"
#include "evkg/inference.hpp"
#include "evkg/kg_store.hpp"
#include "evkg/pipeline.hpp"
#include "evkg/seeder.hpp"
#include "evkg/serialization.hpp"

namespace py = pybind11;
using namespace evkg;

namespace {

py::dict eventuality_dict(const Eventuality &e) {
  py::dict d;
  d["key"] = e.key;
  d["pattern"] = e.pattern;
  d["words"] = e.words;
  d["positions"] = e.positions;
  d["frequency"] = e.frequency;
  return d;
}

std::vector<RelationType> relation_list(const std::vector<std::string> &names) {
  std::vector<RelationType> out;
  for (const auto &n : names) out.push_back(relation_from_name(n));
  return out;
}

// One entry per well-formed sentence; malformed blocks raise ValueError.
std::vector<DependencyGraph> parse_all(const std::string &text, bool ud2) {
  std::vector<DependencyGraph> out;
  for (auto &r : parse_conllu_string(text, ReaderOptions{ud2, "<string>"})) {
    if (!r.ok()) throw InvalidArgument(r.error->to_string());
    out.push_back(std::move(*r.graph));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eventuality knowledge graph construction and inference";
  m.attr("__version__") = kVersion;
  m.attr("PATTERN_SET_VERSION") = kPatternSetVersion;
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<UnknownEventuality>(m, "UnknownEventuality", PyExc_KeyError);

  m.def(
      "extract",
      [](const std::string &conllu, bool ud2) {
        std::vector<std::vector<py::dict>> out;
        for (const DependencyGraph &g : parse_all(conllu, ud2)) {
          std::vector<py::dict> events;
          for (const Eventuality &e : extract_eventualities(g)) events.push_back(eventuality_dict(e));
          out.push_back(std::move(events));
        }
        return out;
      },
      py::arg("conllu"), py::arg("ud2") = false,
      "Eventualities of each sentence in a CoNLL-U string.");

  m.def(
      "seed",
      [](const std::string &conllu, bool ud2) {
        std::vector<py::dict> out;
        for (const DependencyGraph &g : parse_all(conllu, ud2)) {
          for (const TrainingInstance &x : build_instances(g, extract_eventualities(g))) {
            py::dict d;
            d["sentence_id"] = x.sentence_id;
            d["e1"] = x.e1_key;
            d["e2"] = x.e2_key;
            std::vector<std::string> labels;
            for (RelationType t : match_seed(x, g)) labels.emplace_back(relation_name(t));
            d["labels"] = labels;
            out.push_back(std::move(d));
          }
        }
        return out;
      },
      py::arg("conllu"), py::arg("ud2") = false,
      "Eventuality pairs of each sentence with their seed-connective labels.");

  m.def("anneal_threshold", &anneal_threshold, py::arg("tau0"), py::arg("k"), py::arg("K"));

  py::class_<KnowledgeGraph>(m, "KnowledgeGraph")
      .def(py::init<>())
      .def_static("load", [](const std::filesystem::path &dir) { return load(dir); }, py::arg("path"))
      .def("save", [](const KnowledgeGraph &g, const std::filesystem::path &dir) { save(g, dir); },
           py::arg("path"))
      .def_property_readonly("num_eventualities", &KnowledgeGraph::num_eventualities)
      .def_property_readonly("num_edges", &KnowledgeGraph::num_edges)
      .def("__contains__", &KnowledgeGraph::contains)
      .def("eventuality",
           [](const KnowledgeGraph &g, const std::string &key) { return eventuality_dict(g.eventuality(key)); })
      .def("weight",
           [](const KnowledgeGraph &g, const std::string &h, const std::string &type, const std::string &t) {
             return g.weight(h, relation_from_name(type), t);
           })
      .def("match_by_words", [](const KnowledgeGraph &g, const std::vector<std::string> &words) {
        std::vector<std::string> keys;
        for (const Eventuality *e : g.match_by_words(words)) keys.push_back(e->key);
        return keys;
      });

  m.def(
      "retrieve",
      [](const KnowledgeGraph &g, const std::string &key, const std::vector<std::string> &relations,
         std::size_t topk, bool backward, bool include_cooccurrence) {
        const InferenceEngine engine(g, InferenceOptions{include_cooccurrence});
        std::vector<py::tuple> out;
        for (const ScoredResult &r :
             engine.retrieve(key, relation_list(relations), topk,
                             backward ? Direction::kBackward : Direction::kForward))
          out.push_back(py::make_tuple(r.target, r.probability));
        return out;
      },
      py::arg("graph"), py::arg("key"), py::arg("relations"), py::arg("topk") = 10,
      py::arg("backward") = false, py::arg("include_cooccurrence") = true,
      "Ranked (key, probability) pairs along a one- or two-relation path.");

  m.def(
      "relation_distribution",
      [](const KnowledgeGraph &g, const std::string &head, const std::string &tail,
         bool include_cooccurrence) {
        std::map<std::string, double> out;
        const InferenceEngine engine(g, InferenceOptions{include_cooccurrence});
        for (const auto &[t, p] : engine.relation_distribution(head, tail))
          out[std::string(relation_name(t))] = p;
        return out;
      },
      py::arg("graph"), py::arg("head"), py::arg("tail"), py::arg("include_cooccurrence") = true);

  m.def(
      "query",
      [](const KnowledgeGraph &g, const std::string &mode, const std::string &event,
         const std::vector<std::string> &relations, std::size_t topk, const std::string &event2) {
        QueryOptions o;
        o.mode = mode;
        o.event = event;
        o.event2 = event2;
        o.relations = relation_list(relations);
        o.topk = topk;
        std::ostringstream out, log;
        const int code = run_query(g, o, out, log);
        return py::make_tuple(code, out.str());
      },
      py::arg("graph"), py::arg("mode"), py::arg("event"), py::arg("relations") = std::vector<std::string>{},
      py::arg("topk") = 10, py::arg("event2") = "",
      "Same as the CLI query: returns (exit code, JSON text).");
}
