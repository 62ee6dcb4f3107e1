// Copyright 2026 The amr2sparql Authors.
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

#ifndef AMR2SPARQL_TESTS_SUPPORT_FIXTURES_HPP_
#define AMR2SPARQL_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "amr2sparql/amr.hpp"
#include "amr2sparql/dataset.hpp"
#include "amr2sparql/roles.hpp"
#include "amr2sparql/store.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return AMR2SPARQL_DATA_DIR; }
inline std::filesystem::path corpus_path() { return data_dir() / "corpus.jsonl"; }
inline std::filesystem::path kg_path() { return data_dir() / "kg.nt"; }
inline std::filesystem::path two_triple_kg_path() { return data_dir() / "two_triple_kg.nt"; }

inline const std::string kDbo = "http://dbpedia.org/ontology/";
inline const std::string kDbp = "http://dbpedia.org/property/";
inline const std::string kDbr = "http://dbpedia.org/resource/";

// "Name some sports played in institutions of Maharashtra?"
inline amr2sparql::Question sports_question() {
  return {"sports-maharashtra",
          "Name some sports played in institutions of Maharashtra?",
          {"Name", "some", "sports", "played", "in", "institutions", "of", "Maharashtra", "?"},
          {"VERB", "DET", "NOUN", "VERB", "ADP", "NOUN", "ADP", "PROPN", "PUNCT"}};
}

inline const char* kSportsPenman =
    "(n / name-01\n"
    "   :ARG0 (y / you)\n"
    "   :ARG1 (s / sport\n"
    "      :mod (s2 / some)\n"
    "      :ARG1-of (p / play-01\n"
    "         :location (i / institution\n"
    "            :poss (s1 / state\n"
    "               :wiki \"http://dbpedia.org/resource/Maharashtra\"\n"
    "               :name (n2 / name :op1 \"Maharashtra\")))))\n"
    "   :mode imperative)";

inline amr2sparql::AlignmentRecord sports_alignment() {
  amr2sparql::AlignmentRecord a;
  a.alignments = {{"n", {0}}, {"s2", {1}}, {"s", {2}}, {"p", {3}}, {"i", {5}}, {"n2.op1", {7}}};
  a.token_count = 9;
  return a;
}

inline const char* kSportsGold =
    "PREFIX dbo: <http://dbpedia.org/ontology/>\n"
    "PREFIX dbp: <http://dbpedia.org/property/>\n"
    "PREFIX dbr: <http://dbpedia.org/resource/>\n"
    "SELECT DISTINCT ?uri WHERE { ?x dbp:state dbr:Maharashtra . ?x dbo:sport ?uri }";

inline amr2sparql::AmrGraph sports_graph() {
  return amr2sparql::parse_penman(kSportsPenman, sports_alignment());
}

inline std::vector<amr2sparql::Record> corpus() {
  return amr2sparql::read_dataset_file(corpus_path());
}

inline amr2sparql::TripleStore kg() { return amr2sparql::load_ntriples_file(kg_path()); }

}  // namespace fixtures

#endif  // AMR2SPARQL_TESTS_SUPPORT_FIXTURES_HPP_
