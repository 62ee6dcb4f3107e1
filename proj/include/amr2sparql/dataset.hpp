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

#ifndef AMR2SPARQL_DATASET_HPP_
#define AMR2SPARQL_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "amr2sparql/amr.hpp"
#include "amr2sparql/machine.hpp"
#include "amr2sparql/roles.hpp"
#include "amr2sparql/sparql.hpp"
#include "amr2sparql/store.hpp"

namespace amr2sparql {

// One JSONL input line:
//   {"id", "question", "tokens", "pos", "amr", "alignments", "wiki",
//    "gold_sparql"?}
struct Record {
  Question question;
  std::string amr;
  AlignmentRecord align;
  std::optional<std::string> gold_sparql;

  // Set when the line could not be decoded; the record is then unusable but
  // still occupies its slot so outputs stay aligned with inputs.
  std::string load_error;

  const std::string& id() const { return question.id; }
};

Record record_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const Record& r);

// Reads every non-blank line; malformed lines become records with
// load_error set and id "line:<n>" when no id can be recovered.
std::vector<Record> read_dataset(std::istream& in);
std::vector<Record> read_dataset_file(const std::filesystem::path& path);

// Graph and roles for a record. Throws the library errors on bad input.
struct PreparedRecord {
  AmrGraph graph;
  RoleAnnotation roles;
};
PreparedRecord prepare(const Record& r);

// Action sequences as JSON arrays:
//   ["SELECT", "REDUCE", {"rel": "state", "ns": "...", "dir": "backward"}, "CLOSE"]
nlohmann::json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j);
nlohmann::json actions_to_json(const std::vector<Action>& actions);
std::vector<Action> actions_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const Term& t);
nlohmann::json answer_to_json(const AnswerSet& a);

PrefixTable read_prefix_table(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_DATASET_HPP_
