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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "amr2sparql/commands.hpp"
#include "amr2sparql/decode.hpp"
#include "amr2sparql/eval.hpp"
#include "amr2sparql/machine.hpp"
#include "amr2sparql/oracle.hpp"
#include "amr2sparql/sparql_parser.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace amr2sparql;

namespace {

struct Check {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

Check ac1_worked_example() {
  Check c;
  AmrGraph g = fixtures::sports_graph();
  RoleAnnotation ann = annotate(g, fixtures::sports_question());
  OracleResult r = oracle_actions(std::string_view(fixtures::kSportsGold), g, ann);
  std::vector<Action> expected = {
      HeaderAction{HeaderKind::kSelect}, ReduceAction{},
      RelationAction{fixtures::kDbp, "state", Direction::kBackward},
      RelationAction{fixtures::kDbo, "sport", Direction::kForward}, CloseAction{}};
  c.expect(r.covered, "oracle did not cover the sports query");
  c.expect(r.actions == expected, "unexpected oracle actions");
  c.expect(canonicalize(run(r.actions, g, ann)) ==
               canonicalize(parse_sparql(fixtures::kSportsGold)),
           "run does not reconstruct the gold query");
  return c;
}

Check ac2_round_trip() {
  Check c;
  for (const auto& rec : fixtures::corpus()) {
    PreparedRecord p = prepare(rec);
    OracleResult r = oracle_for_record(rec);
    if (!r.covered) continue;
    c.expect(canonicalize(run(r.actions, p.graph, p.roles)) ==
                 canonicalize(parse_sparql(*rec.gold_sparql)),
             "corpus record " + rec.id());
  }
  std::mt19937 rng(2024);
  int covered = 0;
  for (int trial = 0; trial < 2000 && covered < 1000; ++trial) {
    auto inst = oracles::random_instance(rng);
    RoleAnnotation ann = annotate(inst.graph, inst.question);
    SparqlQuery gold =
        oracles::random_gold(rng, init_stack(inst.graph, ann), ann.unknown.has_value());
    OracleResult r = oracle_actions(gold, inst.graph, ann);
    if (!r.covered) continue;
    ++covered;
    c.expect(oracles::isomorphic(run(r.actions, inst.graph, ann), gold),
             "synthetic trial " + std::to_string(trial));
  }
  c.expect(covered >= 500, "only " + std::to_string(covered) + " covered synthetic instances");
  c.note = c.ok ? std::to_string(covered) + " synthetic instances" : c.note;
  return c;
}

Check ac3_mask_soundness() {
  Check c;
  TripleStore kg = fixtures::kg();
  for (const auto& rec : fixtures::corpus()) {
    PreparedRecord p = prepare(rec);
    OracleResult r = oracle_for_record(rec);
    if (!r.covered) continue;
    MachineState st = initial_state(p.graph, p.roles);
    for (const auto& a : r.actions) {
      c.expect(action_mask(st, kg).allows(a), rec.id() + ": " + to_string(a) + " masked out");
      st = step(st, a);
    }
  }
  return c;
}

Check ac4_executor() {
  Check c;
  std::mt19937 rng(77);
  const std::vector<std::string> preds = {"http://e.org/p", "http://e.org/q", "http://e.org/r",
                                          "http://e.org/s"};
  std::vector<Term> consts;
  for (int i = 0; i < 12; ++i) consts.push_back(Term::iri("http://e.org/n" + std::to_string(i)));
  for (int trial = 0; trial < 1000; ++trial) {
    TripleStore store;
    std::vector<TriplePattern> facts;
    std::size_t n = 1 + rng() % 50;
    for (std::size_t k = 0; k < n; ++k) {
      TriplePattern t{consts[rng() % consts.size()], preds[rng() % preds.size()],
                      rng() % 8 ? consts[rng() % consts.size()]
                                : Term::literal(std::to_string(rng() % 3))};
      if (store.add(t.subject.value, t.predicate, t.object)) facts.push_back(t);
    }
    auto term = [&] {
      if (rng() % 3 == 0) return consts[rng() % consts.size()];
      return Term::var("v" + std::to_string(rng() % 3));
    };
    SparqlQuery q;
    std::size_t m = 1 + rng() % 3;
    for (std::size_t k = 0; k < m; ++k) q.triples.push_back({term(), preds[rng() % preds.size()], term()});
    auto vars = oracles::variables_in(q.triples);
    int h = vars.empty() ? 1 : static_cast<int>(rng() % 3);
    if (h == 0) q.header = QueryHeader::select(vars[rng() % vars.size()]);
    if (h == 1) q.header = QueryHeader::ask();
    if (h == 2) q.header = QueryHeader::count(vars[rng() % vars.size()]);
    c.expect(execute(store, q) == oracles::brute_force_execute(facts, q),
             "trial " + std::to_string(trial));
  }
  return c;
}

Check ac5_eval() {
  Check c;
  auto set = [](std::initializer_list<const char*> names) {
    std::set<Term> out;
    for (const char* n : names) out.insert(Term::iri(std::string("http://e.org/") + n));
    return AnswerSet::of_bindings(out);
  };
  c.expect(answer_f1(set({"A", "B"}), set({"B", "C"})) == 0.5, "P={A,B}, G={B,C}");
  c.expect(answer_f1(set({"A", "B"}), set({"A", "B"})) == 1.0, "identical sets");
  c.expect(answer_f1(set({"A"}), set({"B"})) == 0.0, "disjoint sets");
  TripleStore kg = fixtures::kg();
  EvalReport report = run_eval(fixtures::corpus(), kg,
                               make_pipeline(PolicyKind::kOracle, LexicalPolicy::kDefaultTau, kg,
                                             default_prefixes()));
  c.expect(report.macro_f1 == 1.0, "oracle macro F1 " + std::to_string(report.macro_f1));
  return c;
}

Check ac6_coverage() {
  Check c;
  auto records = fixtures::corpus();
  std::string& gold = *records[5].gold_sparql;
  gold.insert(gold.rfind('}'), " FILTER(?s != ?s) ");
  CoverageReport report = coverage_report(records);
  c.expect(report.covered == 19 && report.records.size() == 20, "covered count");
  c.expect(report.covered_fraction == 19.0 / 20.0, "covered fraction");
  c.expect(report.histogram == std::map<std::string, std::size_t>{{"UnsupportedConstruct", 1}},
           "cause histogram");
  return c;
}

Check ac7_determinism() {
  Check c;
  TripleStore kg = fixtures::kg();
  for (const auto& rec : fixtures::corpus()) {
    PreparedRecord p = prepare(rec);
    TranspileResult r = transpile(rec.question, p.graph, p.roles, kg, LexicalPolicy());
    c.expect(r.actions.size() == r.initial_depth + 2, rec.id() + ": trace length");
  }
  RunConfig cfg;
  cfg.kg = fixtures::kg_path();
  cfg.dataset = fixtures::corpus_path();
  std::ostringstream a, b, err;
  c.expect(cmd_transpile(cfg, a, err) == 0, "first run failed");
  cfg.workers = 4;
  c.expect(cmd_transpile(cfg, b, err) == 0, "second run failed");
  c.expect(!a.str().empty() && a.str() == b.str(), "runs differ");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"AC1 worked example reproduction", ac1_worked_example},
      {"AC2 oracle round trip", ac2_round_trip},
      {"AC3 mask soundness", ac3_mask_soundness},
      {"AC4 executor matches brute force", ac4_executor},
      {"AC5 eval correctness", ac5_eval},
      {"AC6 coverage reporting", ac6_coverage},
      {"AC7 determinism and termination", ac7_determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name << " (" << static_cast<long>(ms) << " ms)";
    if (!c.note.empty()) std::cout << ": " << c.note;
    std::cout << '\n';
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
