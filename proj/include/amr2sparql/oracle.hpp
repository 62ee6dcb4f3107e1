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

#ifndef AMR2SPARQL_ORACLE_HPP_
#define AMR2SPARQL_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "amr2sparql/amr.hpp"
#include "amr2sparql/dataset.hpp"
#include "amr2sparql/machine.hpp"
#include "amr2sparql/roles.hpp"
#include "amr2sparql/sparql.hpp"

namespace amr2sparql {

// Reason a record is not covered; kNone for covered records.
enum class CoverageCause {
  kNone,
  kUnsupportedConstruct,
  kMalformedInput,
  kMissingEntity,
  kMissingUnknown,
  kUncoveredTriple,
};

const char* to_string(CoverageCause cause);

struct OracleResult {
  std::vector<Action> actions;
  std::map<std::string, std::string> var_map;  // gold variable -> canonical
  std::vector<TriplePattern> uncovered;
  bool covered = false;
  CoverageCause cause = CoverageCause::kNone;
  std::string detail;
};

// Greedy top-down matching of stacked paths against gold triples. The gold
// projection variable is pre-bound to ?s; the first matching gold triple in
// gold order wins and is consumed; unmatched paths become Reduce.
OracleResult oracle_actions(const SparqlQuery& gold, const AmrGraph& g,
                            const RoleAnnotation& ann);

// Parses `gold_text` first. Parse failures give covered=false with only the
// (empty) action list and the matching cause.
OracleResult oracle_actions(std::string_view gold_text, const AmrGraph& g,
                            const RoleAnnotation& ann);

// Supporting token indices of the top path before each action (empty for
// the header and Close steps), replayed from the initial stack.
std::vector<TokenSet> supporting_text(const std::vector<Action>& actions, const AmrGraph& g,
                                      const RoleAnnotation& ann, const Question& q);

struct RecordCoverage {
  std::string id;
  bool covered = false;
  CoverageCause cause = CoverageCause::kNone;
};

struct CoverageReport {
  std::vector<RecordCoverage> records;
  std::size_t covered = 0;
  double covered_fraction = 0.0;
  std::map<std::string, std::size_t> histogram;  // cause name -> count
};

// Oracle outcome for one dataset record, including load/annotation failures.
OracleResult oracle_for_record(const Record& r);

CoverageReport coverage_report(const std::vector<Record>& records);
CoverageReport aggregate_coverage(std::vector<RecordCoverage> records);

nlohmann::json to_json(const CoverageReport& report);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_ORACLE_HPP_
