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

#ifndef AMR2SPARQL_EVAL_HPP_
#define AMR2SPARQL_EVAL_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "amr2sparql/dataset.hpp"
#include "amr2sparql/sparql.hpp"
#include "amr2sparql/store.hpp"

namespace amr2sparql {

// Bindings: set F1 with both-empty = 1 and one-empty = 0. Boolean and count
// answers score 1 on equality. Answers of different kinds score 0.
double answer_f1(const AnswerSet& predicted, const AnswerSet& gold);

struct QuestionScore {
  std::string id;
  double f1 = 0.0;
  std::optional<AnswerSet> predicted;
  std::optional<AnswerSet> gold;
  std::optional<std::string> failure;
};

struct EvalReport {
  std::vector<QuestionScore> per_question;
  double macro_f1 = 0.0;
};

// Produces the predicted query for a record; may throw.
using Pipeline = std::function<SparqlQuery(const Record&)>;

// Gold answers come from executing gold_sparql on `store`. Any failure scores
// 0 with its message kept. Records are processed by up to `workers` threads;
// the report keeps input order.
EvalReport run_eval(const std::vector<Record>& records, const TripleStore& store,
                    const Pipeline& pipeline, std::size_t workers = 1);

double macro_average(const std::vector<QuestionScore>& scores);

nlohmann::json to_json(const EvalReport& report);

// Fixed-width table: one row per question plus the macro average.
std::string summary_table(const EvalReport& report);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_EVAL_HPP_
