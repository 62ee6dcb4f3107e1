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

#include <algorithm>
#include <iterator>
#include <random>

#include <gtest/gtest.h>

#include "amr2sparql/commands.hpp"
#include "amr2sparql/eval.hpp"
#include "amr2sparql/sparql_parser.hpp"
#include "support/fixtures.hpp"

namespace amr2sparql {
namespace {

Term e(const std::string& name) { return Term::iri("http://e.org/" + name); }

AnswerSet bind(std::initializer_list<const char*> names) {
  std::set<Term> out;
  for (const char* n : names) out.insert(e(n));
  return AnswerSet::of_bindings(out);
}

TEST(AnswerF1, HandCases) {
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A", "B", "C"}), bind({"A"})), 0.5);
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A", "B"}), bind({"A", "C"})), 0.5);
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A"}), bind({"A", "B"})), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A"}), bind({"A"})), 1.0);
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A"}), bind({"B"})), 0.0);
  EXPECT_DOUBLE_EQ(answer_f1(bind({}), bind({})), 1.0);
  EXPECT_DOUBLE_EQ(answer_f1(bind({}), bind({"A"})), 0.0);
  EXPECT_DOUBLE_EQ(answer_f1(bind({"A"}), bind({})), 0.0);
}

TEST(AnswerF1, BooleanCountAndKindMismatch) {
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_boolean(true), AnswerSet::of_boolean(true)), 1.0);
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_boolean(false), AnswerSet::of_boolean(true)), 0.0);
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_count(3), AnswerSet::of_count(3)), 1.0);
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_count(2), AnswerSet::of_count(3)), 0.0);
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_count(1), bind({"A"})), 0.0);
  EXPECT_DOUBLE_EQ(answer_f1(AnswerSet::of_boolean(true), bind({"A"})), 0.0);
}

// Set F1 written directly from precision and recall.
double reference_f1(const std::set<Term>& p, const std::set<Term>& g) {
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  std::vector<Term> both;
  std::set_intersection(p.begin(), p.end(), g.begin(), g.end(), std::back_inserter(both));
  if (both.empty()) return 0.0;
  double precision = static_cast<double>(both.size()) / p.size();
  double recall = static_cast<double>(both.size()) / g.size();
  return 2 * precision * recall / (precision + recall);
}

TEST(AnswerF1, AgreesWithReferenceAndIsSymmetricAndBounded) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 3000; ++trial) {
    std::set<Term> p, g;
    for (int k = 0; k < 6; ++k) {
      if (rng() % 2) p.insert(e(std::to_string(rng() % 8)));
      if (rng() % 2) g.insert(e(std::to_string(rng() % 8)));
    }
    double f = answer_f1(AnswerSet::of_bindings(p), AnswerSet::of_bindings(g));
    ASSERT_NEAR(f, reference_f1(p, g), 1e-12);
    ASSERT_DOUBLE_EQ(f, answer_f1(AnswerSet::of_bindings(g), AnswerSet::of_bindings(p)));
    ASSERT_GE(f, 0.0);
    ASSERT_LE(f, 1.0);
  }
}

TEST(Eval, OraclePipelineScoresOne) {
  TripleStore kg = fixtures::kg();
  auto records = fixtures::corpus();
  EvalReport report = run_eval(records, kg, make_pipeline(PolicyKind::kOracle, 0.34, kg,
                                                         default_prefixes()));
  ASSERT_EQ(report.per_question.size(), records.size());
  for (const auto& s : report.per_question) {
    EXPECT_DOUBLE_EQ(s.f1, 1.0) << s.id << " " << s.failure.value_or("");
  }
  EXPECT_DOUBLE_EQ(report.macro_f1, 1.0);
}

TEST(Eval, HalfCreditAcrossTwoRecords) {
  TripleStore kg = fixtures::kg();
  auto records = fixtures::corpus();
  records.resize(2);
  Pipeline pipeline = [](const Record& r) -> SparqlQuery {
    if (r.id() == "capital-france") throw std::runtime_error("no parse");
    return parse_sparql(*r.gold_sparql);
  };
  ASSERT_EQ(records[1].id(), "capital-france");
  EvalReport report = run_eval(records, kg, pipeline);
  EXPECT_DOUBLE_EQ(report.per_question[0].f1, 1.0);
  EXPECT_DOUBLE_EQ(report.per_question[1].f1, 0.0);
  EXPECT_EQ(report.per_question[1].failure, "no parse");
  EXPECT_DOUBLE_EQ(report.macro_f1, 0.5);
}

TEST(Eval, GoldFailureIsReported) {
  TripleStore kg = fixtures::kg();
  auto records = fixtures::corpus();
  records.resize(1);
  records[0].gold_sparql = "SELECT ?x WHERE {";
  EvalReport report = run_eval(records, kg, [](const Record&) { return SparqlQuery{}; });
  EXPECT_DOUBLE_EQ(report.macro_f1, 0.0);
  ASSERT_TRUE(report.per_question[0].failure);
  EXPECT_EQ(report.per_question[0].failure->rfind("gold: ", 0), 0u);
}

// Lexical baseline on the bundled corpus.
TEST(Eval, LexicalBaselineIsPinned) {
  TripleStore kg = fixtures::kg();
  EvalReport report = run_eval(fixtures::corpus(), kg,
                               make_pipeline(PolicyKind::kLexical, 0.34, kg, default_prefixes()));
  EXPECT_NEAR(report.macro_f1, 0.30, 1e-9);
}

TEST(Eval, WorkersDoNotChangeTheReport) {
  TripleStore kg = fixtures::kg();
  auto records = fixtures::corpus();
  Pipeline p = make_pipeline(PolicyKind::kLexical, 0.34, kg, default_prefixes());
  EXPECT_EQ(to_json(run_eval(records, kg, p, 1)).dump(), to_json(run_eval(records, kg, p, 4)).dump());
}

TEST(Eval, SummaryTable) {
  EvalReport report;
  report.per_question = {{"a", 1.0, std::nullopt, std::nullopt, std::nullopt},
                         {"b", 0.5, std::nullopt, std::nullopt, std::nullopt}};
  report.macro_f1 = macro_average(report.per_question);
  EXPECT_DOUBLE_EQ(report.macro_f1, 0.75);
  std::string table = summary_table(report);
  EXPECT_NE(table.find("macro"), std::string::npos);
  EXPECT_NE(table.find("0.7500"), std::string::npos);
  EXPECT_DOUBLE_EQ(macro_average({}), 0.0);
}

}  // namespace
}  // namespace amr2sparql
