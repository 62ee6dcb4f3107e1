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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "amr2sparql/commands.hpp"

int main(int argc, char** argv) {
  using namespace amr2sparql;

  CLI::App app{"AMR to SPARQL transition-based transpiler"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kg;
  std::string dataset;
  std::string prefixes;
  std::string out;
  std::string query;

  const std::map<std::string, PolicyKind> kPolicies = {{"oracle", PolicyKind::kOracle},
                                                       {"lexical", PolicyKind::kLexical}};

  auto add_common = [&](CLI::App* sub, bool need_kg) {
    auto* kg_opt = sub->add_option("--kg", kg, "knowledge graph in N-Triples");
    if (need_kg) kg_opt->required();
    sub->add_option("--out", out, "output file (stdout when omitted)");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_dataset = [&](CLI::App* sub) {
    sub->add_option("--dataset", dataset, "JSONL question records")->required();
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--prefixes", prefixes, "JSON object of prefix label to namespace");
    sub->add_option("--policy", cfg.policy, "action policy")
        ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
    sub->add_option("--tau", cfg.tau, "lexical policy threshold");
  };

  auto* transpile = app.add_subcommand("transpile", "transpile every record");
  add_common(transpile, true);
  add_dataset(transpile);
  add_policy(transpile);

  auto* oracle = app.add_subcommand("oracle", "derive oracle action sequences");
  add_common(oracle, false);
  add_dataset(oracle);

  auto* eval = app.add_subcommand("eval", "transpile, execute and score");
  add_common(eval, true);
  add_dataset(eval);
  add_policy(eval);

  auto* masks = app.add_subcommand("masks", "per-step decoding masks for one record");
  add_common(masks, true);
  add_dataset(masks);
  add_policy(masks);
  masks->add_option("--id", cfg.record_id, "record id")->required();

  auto* exec = app.add_subcommand("exec", "run one SPARQL file against the store");
  add_common(exec, true);
  exec->add_option("--query", query, "SPARQL query file")->required();

  CLI11_PARSE(app, argc, argv);

  cfg.kg = kg;
  cfg.dataset = dataset;
  cfg.prefixes = prefixes;
  cfg.out = out;
  cfg.query = query;

  if (*transpile) return cmd_transpile(cfg, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(cfg, std::cout, std::cerr);
  if (*eval) return cmd_eval(cfg, std::cout, std::cerr);
  if (*masks) return cmd_masks(cfg, std::cout, std::cerr);
  return cmd_exec(cfg, std::cout, std::cerr);
}
