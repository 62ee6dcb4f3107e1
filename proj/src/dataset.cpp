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

#include "amr2sparql/dataset.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace amr2sparql {

using nlohmann::json;

Record record_from_json(const json& j) {
  Record r;
  r.question.id = j.at("id").get<std::string>();
  r.question.text = j.value("question", std::string());
  r.question.tokens = j.at("tokens").get<std::vector<std::string>>();
  r.question.pos = j.at("pos").get<std::vector<std::string>>();
  r.question.validate();
  r.amr = j.at("amr").get<std::string>();
  if (j.contains("alignments")) {
    for (const auto& [node, tokens] : j.at("alignments").items()) {
      r.align.alignments[node] = tokens.get<std::vector<std::size_t>>();
    }
  }
  if (j.contains("wiki")) {
    for (const auto& [node, iri] : j.at("wiki").items()) {
      r.align.wiki[node] = iri.get<std::string>();
    }
  }
  r.align.token_count = r.question.tokens.size();
  if (j.contains("gold_sparql") && !j.at("gold_sparql").is_null()) {
    r.gold_sparql = j.at("gold_sparql").get<std::string>();
  }
  return r;
}

json record_to_json(const Record& r) {
  json j;
  j["id"] = r.question.id;
  j["question"] = r.question.text;
  j["tokens"] = r.question.tokens;
  j["pos"] = r.question.pos;
  j["amr"] = r.amr;
  json align = json::object();
  for (const auto& [node, tokens] : r.align.alignments) align[node] = tokens;
  j["alignments"] = align;
  json wiki = json::object();
  for (const auto& [node, iri] : r.align.wiki) wiki[node] = iri;
  j["wiki"] = wiki;
  if (r.gold_sparql) j["gold_sparql"] = *r.gold_sparql;
  return j;
}

std::vector<Record> read_dataset(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      Record bad;
      bad.question.id = "line:" + std::to_string(line_no);
      try {
        auto j = json::parse(line);
        if (j.contains("id") && j.at("id").is_string()) bad.question.id = j.at("id");
      } catch (const std::exception&) {
      }
      bad.load_error = e.what();
      out.push_back(std::move(bad));
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Record> read_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_dataset(in);
}

PreparedRecord prepare(const Record& r) {
  if (!r.load_error.empty()) throw std::invalid_argument(r.load_error);
  PreparedRecord p{parse_penman(r.amr, r.align), {}};
  p.roles = annotate(p.graph, r.question);
  return p;
}

json action_to_json(const Action& a) {
  if (const auto* h = std::get_if<HeaderAction>(&a)) return to_string(h->kind);
  if (const auto* r = std::get_if<RelationAction>(&a)) {
    return json{{"rel", r->local}, {"ns", r->ns}, {"dir", to_string(r->dir)}};
  }
  if (std::holds_alternative<ReduceAction>(a)) return "REDUCE";
  return "CLOSE";
}

Action action_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "SELECT") return HeaderAction{HeaderKind::kSelect};
    if (s == "ASK") return HeaderAction{HeaderKind::kAsk};
    if (s == "COUNT") return HeaderAction{HeaderKind::kCount};
    if (s == "REDUCE") return ReduceAction{};
    if (s == "CLOSE") return CloseAction{};
    throw std::invalid_argument("unknown action '" + s + "'");
  }
  if (!j.is_object()) throw std::invalid_argument("action must be a string or object");
  std::string dir = j.at("dir").get<std::string>();
  if (dir != "forward" && dir != "backward") {
    throw std::invalid_argument("bad relation direction '" + dir + "'");
  }
  return RelationAction{j.at("ns").get<std::string>(), j.at("rel").get<std::string>(),
                        dir == "forward" ? Direction::kForward : Direction::kBackward};
}

json actions_to_json(const std::vector<Action>& actions) {
  json arr = json::array();
  for (const auto& a : actions) arr.push_back(action_to_json(a));
  return arr;
}

std::vector<Action> actions_from_json(const json& j) {
  std::vector<Action> out;
  for (const auto& a : j) out.push_back(action_from_json(a));
  return out;
}

json term_to_json(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kIri: return json{{"type", "uri"}, {"value", t.value}};
    case Term::Kind::kLiteral: return json{{"type", "literal"}, {"value", t.value}};
    case Term::Kind::kVar: return json{{"type", "var"}, {"value", t.value}};
  }
  return nullptr;
}

json answer_to_json(const AnswerSet& a) {
  switch (a.kind) {
    case AnswerSet::Kind::kBoolean: return json{{"boolean", a.boolean}};
    case AnswerSet::Kind::kCount: return json{{"count", a.count}};
    case AnswerSet::Kind::kBindings: {
      json values = json::array();
      for (const auto& t : a.bindings) values.push_back(term_to_json(t));
      return json{{"bindings", values}};
    }
  }
  return nullptr;
}

PrefixTable read_prefix_table(const std::filesystem::path& path) {
  json j = json::parse(read_file(path));
  PrefixTable table;
  for (const auto& [label, ns] : j.items()) table[label] = ns.get<std::string>();
  return table;
}

}  // namespace amr2sparql
