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

#ifndef AMR2SPARQL_COMMANDS_HPP_
#define AMR2SPARQL_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "amr2sparql/decode.hpp"
#include "amr2sparql/eval.hpp"
#include "amr2sparql/store.hpp"

namespace amr2sparql {

enum class PolicyKind { kOracle, kLexical };

struct RunConfig {
  std::filesystem::path kg;
  std::filesystem::path dataset;
  std::filesystem::path prefixes;  // optional; the dbo/dbp/dbr table otherwise
  PolicyKind policy = PolicyKind::kLexical;
  double tau = LexicalPolicy::kDefaultTau;
  std::filesystem::path out;  // stdout when empty
  std::size_t workers = 1;
  std::string record_id;       // masks
  std::filesystem::path query;  // exec
};

// Query producer for `policy`. The oracle pipeline replays the oracle's
// actions for the record's gold query through the masked decoder.
Pipeline make_pipeline(PolicyKind policy, double tau, const TripleStore& store,
                       const PrefixTable& table);

// Each command returns a process exit code: 0 unless a configuration or I/O
// error prevented the run. Per-record failures are written into the output.
int cmd_transpile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_masks(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_exec(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_COMMANDS_HPP_
