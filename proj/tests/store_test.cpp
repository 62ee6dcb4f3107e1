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

#include <gtest/gtest.h>

#include "amr2sparql/error.hpp"
#include "amr2sparql/sparql_parser.hpp"
#include "amr2sparql/store.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace amr2sparql {
namespace {

const char* kSmall =
    "# five facts\n"
    "<http://e.org/Rhine> <http://e.org/country> <http://e.org/Germany> .\n"
    "<http://e.org/Elbe> <http://e.org/country> <http://e.org/Germany> .\n"
    "\n"
    "<http://e.org/Danube> <http://e.org/country> <http://e.org/Germany> .\n"
    "<http://e.org/Danube> <http://e.org/country> <http://e.org/Austria> .\n"
    "<http://e.org/Danube> <http://e.org/length> \"2850\"^^<http://www.w3.org/2001/XMLSchema#int> .\n";

TEST(NTriples, LoadsAndIndexes) {
  TripleStore s = load_ntriples(kSmall);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.predicates(), (std::set<std::string>{"http://e.org/country", "http://e.org/length"}));
  const auto* objs = s.objects(Term::iri("http://e.org/Danube"), "http://e.org/country");
  ASSERT_NE(objs, nullptr);
  EXPECT_EQ(objs->size(), 2u);
  const auto* subs = s.subjects("http://e.org/country", Term::iri("http://e.org/Germany"));
  ASSERT_NE(subs, nullptr);
  EXPECT_EQ(subs->size(), 3u);
  EXPECT_EQ(s.predicate_cardinality("http://e.org/length"), 1u);
  EXPECT_EQ(s.objects(Term::iri("http://e.org/Danube"), "http://e.org/length")->count(
                Term::literal("2850")),
            1u);
  EXPECT_EQ(s.subjects("http://e.org/none", Term::iri("http://e.org/Germany")), nullptr);
}

TEST(NTriples, DuplicatesAreIgnored) {
  TripleStore s;
  EXPECT_TRUE(s.add("http://e.org/a", "http://e.org/p", Term::iri("http://e.org/b")));
  EXPECT_FALSE(s.add("http://e.org/a", "http://e.org/p", Term::iri("http://e.org/b")));
  EXPECT_EQ(s.size(), 1u);
}

TEST(NTriples, MalformedLineNumbers) {
  std::string text = std::string(kSmall) + "<http://e.org/a> <http://e.org/p> .\n";
  try {
    load_ntriples(text);
    FAIL() << "expected MalformedLine";
  } catch (const MalformedLine& e) {
    EXPECT_EQ(e.line_no(), 8u);
  }
  EXPECT_THROW(load_ntriples("<http://e.org/a> <http://e.org/p> <http://e.org/b>\n"),
               MalformedLine);
  EXPECT_THROW(load_ntriples("<http://e.org/a> \"p\" <http://e.org/b> .\n"), MalformedLine);
}

TEST(NTriples, Relations) {
  TripleStore s = load_ntriples(kSmall);
  Relations danube = relations_of(s, "http://e.org/Danube");
  EXPECT_EQ(danube.outgoing, (std::set<std::string>{"http://e.org/country", "http://e.org/length"}));
  EXPECT_TRUE(danube.incoming.empty());
  Relations germany = relations_of(s, "http://e.org/Germany");
  EXPECT_TRUE(germany.outgoing.empty());
  EXPECT_EQ(germany.incoming, (std::set<std::string>{"http://e.org/country"}));
  EXPECT_EQ(relations_of(s, "http://e.org/Nowhere"), Relations{});
}

TEST(NTriples, RepositoryGraphsLoad) {
  EXPECT_GT(fixtures::kg().size(), 40u);
  EXPECT_EQ(load_ntriples_file(fixtures::two_triple_kg_path()).size(), 2u);
}

SparqlQuery q(const std::string& body) {
  return parse_sparql("PREFIX e: <http://e.org/> " + body);
}

TEST(Execute, HandCases) {
  TripleStore s = load_ntriples(kSmall);
  EXPECT_EQ(execute(s, q("SELECT (COUNT(?r) AS ?c) WHERE { ?r e:country e:Germany }")),
            AnswerSet::of_count(3));
  EXPECT_EQ(execute(s, q("SELECT ?c WHERE { e:Danube e:country ?c }")),
            AnswerSet::of_bindings({Term::iri("http://e.org/Germany"),
                                    Term::iri("http://e.org/Austria")}));
  EXPECT_EQ(execute(s, q("SELECT ?r WHERE { ?r e:country e:Germany . ?r e:country e:Austria }")),
            AnswerSet::of_bindings({Term::iri("http://e.org/Danube")}));
  EXPECT_EQ(execute(s, q("ASK WHERE { e:Rhine e:country e:Germany }")), AnswerSet::of_boolean(true));
  EXPECT_EQ(execute(s, q("ASK WHERE { e:Rhine e:country e:Austria }")),
            AnswerSet::of_boolean(false));
  EXPECT_EQ(execute(s, q("SELECT ?r WHERE { ?r e:country e:Narnia }")), AnswerSet::of_bindings({}));
}

TEST(Execute, UnboundProjection) {
  TripleStore s = load_ntriples(kSmall);
  SparqlQuery query = q("SELECT ?r WHERE { ?r e:country e:Germany }");
  query.header = QueryHeader::select("zzz");
  EXPECT_THROW(execute(s, query), UnboundProjection);
}

TEST(Execute, TooManyVariables) {
  TripleStore s = load_ntriples(kSmall);
  SparqlQuery query;
  query.header = QueryHeader::ask();
  for (int i = 0; i < 9; ++i) {
    query.triples.push_back(
        {Term::var("v" + std::to_string(i)), "http://e.org/p", Term::var("v" + std::to_string(i + 1))});
  }
  EXPECT_THROW(execute(s, query), TooManyVariables);
}

TEST(Execute, AgreesWithBruteForce) {
  std::mt19937 rng(31);
  const std::vector<std::string> preds = {"http://e.org/p", "http://e.org/q", "http://e.org/r"};
  std::vector<Term> consts;
  for (int i = 0; i < 5; ++i) consts.push_back(Term::iri("http://e.org/n" + std::to_string(i)));
  int nonempty = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    TripleStore store;
    std::vector<TriplePattern> facts;
    std::size_t n = 3 + rng() % 10;
    for (std::size_t k = 0; k < n; ++k) {
      TriplePattern t{consts[rng() % consts.size()], preds[rng() % preds.size()],
                      consts[rng() % consts.size()]};
      if (store.add(t.subject.value, t.predicate, t.object)) facts.push_back(t);
    }
    auto term = [&] {
      if (rng() % 3 == 0) return consts[rng() % consts.size()];
      return Term::var("v" + std::to_string(rng() % 3));
    };
    SparqlQuery query;
    std::size_t m = 1 + rng() % 3;
    for (std::size_t k = 0; k < m; ++k) {
      query.triples.push_back({term(), preds[rng() % preds.size()], term()});
    }
    auto vars = oracles::variables_in(query.triples);
    int h = vars.empty() ? 1 : static_cast<int>(rng() % 3);
    if (h == 0) query.header = QueryHeader::select(vars[rng() % vars.size()]);
    if (h == 1) query.header = QueryHeader::ask();
    if (h == 2) query.header = QueryHeader::count(vars[rng() % vars.size()]);

    AnswerSet got = execute(store, query);
    ASSERT_EQ(got, oracles::brute_force_execute(facts, query)) << "trial " << trial;
    nonempty += (got.kind == AnswerSet::Kind::kBindings && !got.bindings.empty()) ||
                (got.kind == AnswerSet::Kind::kBoolean && got.boolean) ||
                (got.kind == AnswerSet::Kind::kCount && got.count > 0);
  }
  EXPECT_GT(nonempty, 200);
}

TEST(Solve, DistinctSolutions) {
  TripleStore s = load_ntriples(kSmall);
  auto sols = solve(s, {{Term::var("r"), "http://e.org/country", Term::var("c")}});
  EXPECT_EQ(sols.size(), 4u);
  for (const auto& sol : sols) EXPECT_EQ(sol.size(), 2u);
}

}  // namespace
}  // namespace amr2sparql
