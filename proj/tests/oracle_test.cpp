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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "amr2sparql/machine.hpp"
#include "amr2sparql/oracle.hpp"
#include "amr2sparql/sparql_parser.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace amr2sparql {
namespace {

std::vector<std::string> names(const std::vector<Action>& actions) {
  std::vector<std::string> out;
  for (const auto& a : actions) out.push_back(to_string(a));
  return out;
}

TEST(Oracle, SportsExample) {
  AmrGraph g = fixtures::sports_graph();
  RoleAnnotation ann = annotate(g, fixtures::sports_question());
  OracleResult r = oracle_actions(std::string_view(fixtures::kSportsGold), g, ann);
  EXPECT_TRUE(r.covered);
  EXPECT_EQ(r.cause, CoverageCause::kNone);
  EXPECT_EQ(names(r.actions),
            (std::vector<std::string>{"SELECT", "REDUCE",
                                      "state(backward,http://dbpedia.org/property/)",
                                      "sport(forward,http://dbpedia.org/ontology/)", "CLOSE"}));
  EXPECT_EQ(r.var_map.at("uri"), "s");
  EXPECT_EQ(r.var_map.at("x"), "i");
}

TEST(Oracle, SportsSupportingText) {
  AmrGraph g = fixtures::sports_graph();
  Question q = fixtures::sports_question();
  RoleAnnotation ann = annotate(g, q);
  OracleResult r = oracle_actions(std::string_view(fixtures::kSportsGold), g, ann);
  auto support = supporting_text(r.actions, g, ann, q);
  ASSERT_EQ(support.size(), 5u);
  EXPECT_TRUE(support[0].empty());
  EXPECT_EQ(support[1], (TokenSet{2, 3, 5, 7}));
  EXPECT_EQ(support[2], (TokenSet{5, 7}));
  EXPECT_EQ(support[3], (TokenSet{2, 3, 5}));
  EXPECT_TRUE(support[4].empty());
}

TEST(Oracle, EmptyAskReducesEverything) {
  AmrGraph g = parse_penman("(c / city :wiki \"http://x/Paris\")");
  Question q{"q", "Paris?", {"Paris", "?"}, {"PROPN", "PUNCT"}};
  RoleAnnotation ann = annotate(g, q);
  OracleResult r = oracle_actions(std::string_view("ASK { }"), g, ann);
  EXPECT_TRUE(r.covered);
  EXPECT_EQ(names(r.actions), (std::vector<std::string>{"ASK", "CLOSE"}));
}

TEST(Oracle, SecondEntityMissingFromAnnotation) {
  AmrGraph g = fixtures::sports_graph();
  RoleAnnotation ann = annotate(g, fixtures::sports_question());
  std::string gold = std::string(fixtures::kSportsGold);
  gold.insert(gold.rfind('}'), " . ?x dbo:country dbr:India");
  OracleResult r = oracle_actions(std::string_view(gold), g, ann);
  EXPECT_FALSE(r.covered);
  EXPECT_EQ(r.cause, CoverageCause::kUncoveredTriple);
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0].object, Term::iri(fixtures::kDbr + "India"));
  // Actions remain a complete, runnable sequence.
  EXPECT_EQ(r.actions.size(), 5u);
}

TEST(Oracle, Causes) {
  AmrGraph g = parse_penman("(w / want-01 :ARG0 (b / boy))");
  Question q{"q", "boy wants", {"boy", "wants"}, {"NOUN", "VERB"}};
  RoleAnnotation ann = annotate(g, q);
  OracleResult no_entity = oracle_actions(
      std::string_view("SELECT ?x WHERE { ?x <http://e.org/p> <http://e.org/O> }"), g, ann);
  EXPECT_EQ(no_entity.cause, CoverageCause::kMissingEntity);

  AmrGraph g2 = parse_penman(
      "(f / flow-01 :ARG1 (r / river :wiki \"http://e.org/Danube\") :polarity (a / amr-unknown))");
  RoleAnnotation ann2 = annotate(g2, q);
  OracleResult no_unknown = oracle_actions(
      std::string_view("SELECT ?x WHERE { <http://e.org/Danube> <http://e.org/p> ?x }"), g2,
      ann2);
  EXPECT_EQ(no_unknown.cause, CoverageCause::kMissingUnknown);

  OracleResult unsupported = oracle_actions(
      std::string_view("SELECT ?x WHERE { ?x <http://e.org/p> ?y FILTER(?y > 1) }"), g2, ann2);
  EXPECT_EQ(unsupported.cause, CoverageCause::kUnsupportedConstruct);
  EXPECT_TRUE(unsupported.actions.empty());

  OracleResult malformed = oracle_actions(std::string_view("SELECT ?x WHERE {"), g2, ann2);
  EXPECT_EQ(malformed.cause, CoverageCause::kMalformedInput);
  EXPECT_TRUE(malformed.actions.empty());
}

TEST(Oracle, CorpusRoundTrip) {
  for (const auto& rec : fixtures::corpus()) {
    PreparedRecord p = prepare(rec);
    OracleResult r = oracle_for_record(rec);
    ASSERT_TRUE(r.covered) << rec.id() << ": " << r.detail;
    SparqlQuery gold = parse_sparql(*rec.gold_sparql);
    EXPECT_EQ(canonicalize(run(r.actions, p.graph, p.roles)), canonicalize(gold)) << rec.id();
    EXPECT_EQ(r.actions.size(), init_stack(p.graph, p.roles).size() + 2) << rec.id();
  }
}

struct Synthetic {
  oracles::SyntheticInstance inst;
  RoleAnnotation ann;
  std::vector<StackedPath> stack;
  SparqlQuery gold;
};

Synthetic make_synthetic(std::mt19937& rng) {
  Synthetic s;
  s.inst = oracles::random_instance(rng);
  s.ann = annotate(s.inst.graph, s.inst.question);
  s.stack = init_stack(s.inst.graph, s.ann);
  s.gold = oracles::random_gold(rng, s.stack, s.ann.unknown.has_value());
  return s;
}

bool injective(const std::map<std::string, std::string>& m) {
  std::set<std::string> images;
  for (const auto& [k, v] : m) {
    if (!images.insert(v).second) return false;
  }
  return true;
}

TEST(Oracle, SyntheticRoundTripAndBounds) {
  std::mt19937 rng(41);
  int covered = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Synthetic s = make_synthetic(rng);
    OracleResult r = oracle_actions(s.gold, s.inst.graph, s.ann);
    ASSERT_EQ(r.actions.size(), s.stack.size() + 2);
    ASSERT_TRUE(injective(r.var_map));
    if (!r.covered) continue;
    ++covered;
    SparqlQuery back = run(r.actions, s.inst.graph, s.ann);
    ASSERT_TRUE(oracles::isomorphic(back, s.gold)) << serialize(s.gold) << "\n--\n"
                                                   << serialize(back);
  }
  EXPECT_GE(covered, 500);
}

TEST(Oracle, DroppingLastMatchedTripleFlipsOneRelation) {
  std::mt19937 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Synthetic s = make_synthetic(rng);
    OracleResult r = oracle_actions(s.gold, s.inst.graph, s.ann);
    if (!r.covered) continue;
    std::size_t last = r.actions.size();
    for (std::size_t k = 0; k < r.actions.size(); ++k) {
      if (std::holds_alternative<RelationAction>(r.actions[k])) last = k;
    }
    if (last == r.actions.size()) continue;
    // The triple emitted by that step, mapped back to gold variable names.
    MachineState st = initial_state(s.inst.graph, s.ann);
    for (std::size_t k = 0; k <= last; ++k) st = step(st, r.actions[k]);
    std::map<std::string, std::string> inverse;
    for (const auto& [gold_var, canon] : r.var_map) inverse[canon] = gold_var;
    auto back = [&](const Term& t) { return t.is_var() ? Term::var(inverse.at(t.value)) : t; };
    const TriplePattern& e = st.emitted.back();
    TriplePattern dropped{back(e.subject), e.predicate, back(e.object)};

    SparqlQuery reduced = s.gold;
    std::erase(reduced.triples, dropped);
    auto vars = oracles::variables_in(reduced.triples);
    if (reduced.header.kind != HeaderKind::kAsk &&
        std::find(vars.begin(), vars.end(), reduced.header.var) == vars.end()) {
      continue;
    }
    OracleResult r2 = oracle_actions(reduced, s.inst.graph, s.ann);
    ASSERT_EQ(r2.actions.size(), r.actions.size());
    std::size_t diffs = 0;
    for (std::size_t k = 0; k < r.actions.size(); ++k) {
      if (r.actions[k] != r2.actions[k]) {
        ++diffs;
        EXPECT_EQ(k, last);
        EXPECT_TRUE(std::holds_alternative<ReduceAction>(r2.actions[k]));
      }
    }
    EXPECT_EQ(diffs, 1u);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Coverage, CorpusFullyCovered) {
  CoverageReport report = coverage_report(fixtures::corpus());
  EXPECT_EQ(report.records.size(), 20u);
  EXPECT_EQ(report.covered, 20u);
  EXPECT_DOUBLE_EQ(report.covered_fraction, 1.0);
  EXPECT_TRUE(report.histogram.empty());
}

TEST(Coverage, InjectedFilterIsCounted) {
  auto records = fixtures::corpus();
  std::string& gold = *records[3].gold_sparql;
  gold.insert(gold.rfind('}'), " FILTER(?x != ?y) ");
  CoverageReport report = coverage_report(records);
  EXPECT_EQ(report.covered, 19u);
  EXPECT_DOUBLE_EQ(report.covered_fraction, 0.95);
  EXPECT_EQ(report.histogram, (std::map<std::string, std::size_t>{{"UnsupportedConstruct", 1}}));
  nlohmann::json j = to_json(report);
  EXPECT_EQ(j["covered"], 19);
  EXPECT_EQ(j["histogram"]["UnsupportedConstruct"], 1);
}

TEST(Coverage, LoadErrorsAreMalformedInput) {
  Record bad;
  bad.question.id = "broken";
  bad.load_error = "not json";
  CoverageReport report = coverage_report({bad});
  EXPECT_EQ(report.covered, 0u);
  EXPECT_EQ(report.histogram.at("MalformedInput"), 1u);
}

}  // namespace
}  // namespace amr2sparql
