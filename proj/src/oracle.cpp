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

#include "amr2sparql/oracle.hpp"

#include <optional>
#include <set>

#include "amr2sparql/error.hpp"
#include "amr2sparql/sparql_parser.hpp"

namespace amr2sparql {

const char* to_string(CoverageCause cause) {
  switch (cause) {
    case CoverageCause::kNone: return "none";
    case CoverageCause::kUnsupportedConstruct: return "UnsupportedConstruct";
    case CoverageCause::kMalformedInput: return "MalformedInput";
    case CoverageCause::kMissingEntity: return "MissingEntity";
    case CoverageCause::kMissingUnknown: return "MissingUnknown";
    case CoverageCause::kUncoveredTriple: return "UncoveredTriple";
  }
  return "?";
}

namespace {

struct Matcher {
  std::map<std::string, std::string> var_map;
  std::set<std::string> image;

  // Binds gold term `gold` to stack term `canon`, recording new bindings in
  // `added` so a failed triple match can be undone.
  bool bind(const Term& gold, const Term& canon, std::vector<std::string>& added) {
    if (!gold.is_var()) return gold == canon;
    if (!canon.is_var()) return false;
    auto it = var_map.find(gold.value);
    if (it != var_map.end()) return it->second == canon.value;
    if (image.count(canon.value)) return false;
    var_map.emplace(gold.value, canon.value);
    image.insert(canon.value);
    added.push_back(gold.value);
    return true;
  }

  void undo(const std::vector<std::string>& added) {
    for (const auto& v : added) {
      image.erase(var_map.at(v));
      var_map.erase(v);
    }
  }

  bool match(const TriplePattern& gold, const Term& subject, const Term& object) {
    std::vector<std::string> added;
    if (bind(gold.subject, subject, added) && bind(gold.object, object, added)) return true;
    undo(added);
    return false;
  }
};

}  // namespace

OracleResult oracle_actions(const SparqlQuery& gold, const AmrGraph& g,
                            const RoleAnnotation& ann) {
  OracleResult out;
  Matcher m;
  if (gold.header.kind != HeaderKind::kAsk) {
    m.var_map.emplace(gold.header.var, kUnknownVar);
    m.image.insert(kUnknownVar);
  }
  out.actions.push_back(HeaderAction{gold.header.kind});

  std::vector<bool> consumed(gold.triples.size(), false);
  for (const StackedPath& sp : init_stack(g, ann)) {
    std::optional<Action> chosen;
    for (std::size_t i = 0; i < gold.triples.size() && !chosen; ++i) {
      if (consumed[i]) continue;
      const TriplePattern& t = gold.triples[i];
      for (Direction dir : {Direction::kForward, Direction::kBackward}) {
        const Term& subject = dir == Direction::kForward ? sp.term_a : sp.term_b;
        const Term& object = dir == Direction::kForward ? sp.term_b : sp.term_a;
        if (!m.match(t, subject, object)) continue;
        auto [ns, local] = split_iri(t.predicate);
        chosen = RelationAction{ns, local, dir};
        consumed[i] = true;
        break;
      }
    }
    out.actions.push_back(chosen ? *chosen : Action{ReduceAction{}});
  }
  out.actions.push_back(CloseAction{});

  for (std::size_t i = 0; i < gold.triples.size(); ++i) {
    if (!consumed[i]) out.uncovered.push_back(gold.triples[i]);
  }
  out.var_map = std::move(m.var_map);
  out.covered = out.uncovered.empty();
  if (!out.covered) {
    if (ann.entities.empty()) {
      out.cause = CoverageCause::kMissingEntity;
    } else if (gold.header.kind != HeaderKind::kAsk && !ann.unknown) {
      out.cause = CoverageCause::kMissingUnknown;
    } else {
      out.cause = CoverageCause::kUncoveredTriple;
    }
    out.detail = std::to_string(out.uncovered.size()) + " gold triple(s) not reconstructed";
  }
  return out;
}

OracleResult oracle_actions(std::string_view gold_text, const AmrGraph& g,
                            const RoleAnnotation& ann) {
  SparqlQuery gold;
  try {
    gold = parse_sparql(gold_text);
  } catch (const UnsupportedConstruct& e) {
    OracleResult out;
    out.cause = CoverageCause::kUnsupportedConstruct;
    out.detail = e.what();
    return out;
  } catch (const Error& e) {
    OracleResult out;
    out.cause = CoverageCause::kMalformedInput;
    out.detail = e.what();
    return out;
  }
  return oracle_actions(gold, g, ann);
}

std::vector<TokenSet> supporting_text(const std::vector<Action>& actions, const AmrGraph& g,
                                      const RoleAnnotation& ann, const Question& q) {
  std::vector<TokenSet> out;
  MachineState state = initial_state(g, ann);
  for (const Action& a : actions) {
    if (state.phase == Phase::kTranspiling && !state.stack.empty()) {
      out.push_back(supporting_tokens(g, state.top().path, q));
    } else {
      out.emplace_back();
    }
    state = step(std::move(state), a);
  }
  return out;
}

OracleResult oracle_for_record(const Record& r) {
  OracleResult out;
  if (!r.gold_sparql) {
    out.cause = CoverageCause::kMalformedInput;
    out.detail = r.load_error.empty() ? "record has no gold_sparql" : r.load_error;
    return out;
  }
  try {
    PreparedRecord p = prepare(r);
    return oracle_actions(*r.gold_sparql, p.graph, p.roles);
  } catch (const std::exception& e) {
    out.cause = CoverageCause::kMalformedInput;
    out.detail = e.what();
    return out;
  }
}

CoverageReport aggregate_coverage(std::vector<RecordCoverage> records) {
  CoverageReport report;
  report.records = std::move(records);
  for (const auto& rc : report.records) {
    if (rc.covered) {
      ++report.covered;
    } else {
      ++report.histogram[to_string(rc.cause)];
    }
  }
  report.covered_fraction =
      report.records.empty()
          ? 0.0
          : static_cast<double>(report.covered) / static_cast<double>(report.records.size());
  return report;
}

CoverageReport coverage_report(const std::vector<Record>& records) {
  std::vector<RecordCoverage> rows;
  rows.reserve(records.size());
  for (const Record& r : records) {
    OracleResult res = oracle_for_record(r);
    rows.push_back({r.id(), res.covered, res.cause});
  }
  return aggregate_coverage(std::move(rows));
}

nlohmann::json to_json(const CoverageReport& report) {
  nlohmann::json j;
  j["total"] = report.records.size();
  j["covered"] = report.covered;
  j["covered_fraction"] = report.covered_fraction;
  j["histogram"] = report.histogram;
  return j;
}

}  // namespace amr2sparql
