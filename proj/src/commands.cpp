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

#include "amr2sparql/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <vector>

#include "amr2sparql/dataset.hpp"
#include "amr2sparql/error.hpp"
#include "amr2sparql/oracle.hpp"
#include "amr2sparql/parallel.hpp"
#include "amr2sparql/sparql_parser.hpp"

namespace amr2sparql {

namespace {

using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_file(const std::filesystem::path& p, const char* flag) {
  if (p.empty()) throw ConfigError(std::string(flag) + " is required");
  if (!std::filesystem::is_regular_file(p)) {
    throw ConfigError(std::string(flag) + ": no such file " + p.string());
  }
}

void check_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("--tau must lie in (0, 1)");
}

PrefixTable load_prefixes(const RunConfig& cfg) {
  if (cfg.prefixes.empty()) return default_prefixes();
  require_file(cfg.prefixes, "--prefixes");
  return read_prefix_table(cfg.prefixes);
}

// Output sink: the --out file when given, `fallback` otherwise.
class Sink {
 public:
  Sink(const std::filesystem::path& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot write " + path.string());
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

void write_lines(std::ostream& out, const std::vector<json>& rows) {
  for (const auto& row : rows) out << row.dump() << '\n';
}

std::unique_ptr<Policy> policy_for(PolicyKind kind, double tau, const Record& r,
                                   const PreparedRecord& p) {
  if (kind == PolicyKind::kLexical) return std::make_unique<LexicalPolicy>(tau);
  if (!r.gold_sparql) throw std::runtime_error("oracle policy needs gold_sparql");
  OracleResult o = oracle_actions(*r.gold_sparql, p.graph, p.roles);
  if (o.actions.empty()) throw std::runtime_error(o.detail);
  return std::make_unique<ReplayPolicy>(std::move(o.actions));
}

}  // namespace

Pipeline make_pipeline(PolicyKind policy, double tau, const TripleStore& store,
                       const PrefixTable& table) {
  return [&store, table, policy, tau](const Record& r) {
    PreparedRecord p = prepare(r);
    auto chosen = policy_for(policy, tau, r, p);
    return transpile(r.question, p.graph, p.roles, store, *chosen, table).query;
  };
}

int cmd_transpile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_tau(cfg.tau);
    require_file(cfg.kg, "--kg");
    require_file(cfg.dataset, "--dataset");
    PrefixTable table = load_prefixes(cfg);
    TripleStore store = load_ntriples_file(cfg.kg);
    std::vector<Record> records = read_dataset_file(cfg.dataset);
    Sink sink(cfg.out, out);

    auto rows = parallel_map(records.size(), cfg.workers, [&](std::size_t i) {
      const Record& r = records[i];
      json row{{"id", r.id()}};
      try {
        PreparedRecord p = prepare(r);
        auto policy = policy_for(cfg.policy, cfg.tau, r, p);
        TranspileResult t = transpile(r.question, p.graph, p.roles, store, *policy, table);
        row["sparql"] = serialize(t.query);
        row["actions"] = actions_to_json(t.actions);
      } catch (const std::exception& e) {
        row["error"] = e.what();
      }
      return row;
    });
    write_lines(sink.get(), rows);
    return 0;
  });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_file(cfg.dataset, "--dataset");
    std::vector<Record> records = read_dataset_file(cfg.dataset);
    Sink sink(cfg.out, out);

    std::vector<RecordCoverage> coverage(records.size());
    auto rows = parallel_map(records.size(), cfg.workers, [&](std::size_t i) {
      const Record& r = records[i];
      OracleResult o = oracle_for_record(r);
      coverage[i] = {r.id(), o.covered, o.cause};
      json row{{"id", r.id()}, {"actions", actions_to_json(o.actions)}, {"covered", o.covered}};
      json support = json::array();
      if (!o.actions.empty()) {
        try {
          PreparedRecord p = prepare(r);
          for (const auto& s : supporting_text(o.actions, p.graph, p.roles, r.question)) {
            support.push_back(s);
          }
        } catch (const std::exception& e) {
          row["error"] = e.what();
        }
      }
      row["supporting_text"] = support;
      if (!o.covered) {
        row["cause"] = to_string(o.cause);
        row["detail"] = o.detail;
        json uncovered = json::array();
        for (const auto& t : o.uncovered) {
          uncovered.push_back(to_string(t.subject) + " <" + t.predicate + "> " +
                              to_string(t.object));
        }
        row["uncovered"] = uncovered;
      }
      return row;
    });
    write_lines(sink.get(), rows);
    err << to_json(aggregate_coverage(std::move(coverage))).dump() << '\n';
    return 0;
  });
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_tau(cfg.tau);
    require_file(cfg.kg, "--kg");
    require_file(cfg.dataset, "--dataset");
    PrefixTable table = load_prefixes(cfg);
    TripleStore store = load_ntriples_file(cfg.kg);
    std::vector<Record> records = read_dataset_file(cfg.dataset);
    Sink sink(cfg.out, out);

    EvalReport report =
        run_eval(records, store, make_pipeline(cfg.policy, cfg.tau, store, table), cfg.workers);
    sink.get() << to_json(report).dump(2) << '\n';
    (sink.to_file() ? out : err) << summary_table(report);
    return 0;
  });
}

int cmd_masks(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_tau(cfg.tau);
    require_file(cfg.kg, "--kg");
    require_file(cfg.dataset, "--dataset");
    if (cfg.record_id.empty()) throw ConfigError("--id is required");
    PrefixTable table = load_prefixes(cfg);
    TripleStore store = load_ntriples_file(cfg.kg);
    std::vector<Record> records = read_dataset_file(cfg.dataset);
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const Record& r) { return r.id() == cfg.record_id; });
    if (it == records.end()) throw ConfigError("no record with id " + cfg.record_id);
    Sink sink(cfg.out, out);

    PreparedRecord p = prepare(*it);
    auto policy = policy_for(cfg.policy, cfg.tau, *it, p);
    TranspileResult t = transpile(it->question, p.graph, p.roles, store, *policy, table);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const DecodeStep& s = t.steps[i];
      json allowed = json::array();
      for (const auto& a : s.mask.allowed()) allowed.push_back(action_to_json(a));
      json tokens = json::array();
      if (s.state_mask) {
        for (std::size_t k : s.state_mask->tokens) tokens.push_back(k);
      }
      json row{{"step", i + 1},
               {"allowed", allowed},
               {"supporting_tokens", tokens},
               {"action", action_to_json(s.action)}};
      sink.get() << row.dump() << '\n';
    }
    return 0;
  });
}

int cmd_exec(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_file(cfg.kg, "--kg");
    require_file(cfg.query, "--query");
    TripleStore store = load_ntriples_file(cfg.kg);
    SparqlQuery q = parse_sparql(read_file(cfg.query));
    Sink sink(cfg.out, out);
    sink.get() << answer_to_json(execute(store, q)).dump() << '\n';
    return 0;
  });
}

}  // namespace amr2sparql
