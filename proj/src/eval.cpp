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

#include "amr2sparql/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string_view>

#include "amr2sparql/parallel.hpp"
#include "amr2sparql/sparql_parser.hpp"

namespace amr2sparql {

double answer_f1(const AnswerSet& predicted, const AnswerSet& gold) {
  if (predicted.kind != gold.kind) return 0.0;
  switch (gold.kind) {
    case AnswerSet::Kind::kBoolean: return predicted.boolean == gold.boolean ? 1.0 : 0.0;
    case AnswerSet::Kind::kCount: return predicted.count == gold.count ? 1.0 : 0.0;
    case AnswerSet::Kind::kBindings: break;
  }
  const auto& p = predicted.bindings;
  const auto& g = gold.bindings;
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  std::size_t hit = 0;
  for (const auto& t : p) hit += g.count(t);
  if (hit == 0) return 0.0;
  double precision = static_cast<double>(hit) / static_cast<double>(p.size());
  double recall = static_cast<double>(hit) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

double macro_average(const std::vector<QuestionScore>& scores) {
  if (scores.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : scores) sum += s.f1;
  return sum / static_cast<double>(scores.size());
}

namespace {

QuestionScore score_record(const Record& r, const TripleStore& store, const Pipeline& pipeline) {
  QuestionScore qs;
  qs.id = r.id();
  try {
    if (!r.load_error.empty()) throw std::runtime_error(r.load_error);
    if (!r.gold_sparql) throw std::runtime_error("record has no gold_sparql");
    qs.gold = execute(store, parse_sparql(*r.gold_sparql));
  } catch (const std::exception& e) {
    qs.failure = std::string("gold: ") + e.what();
    return qs;
  }
  try {
    qs.predicted = execute(store, pipeline(r));
  } catch (const std::exception& e) {
    qs.failure = e.what();
    return qs;
  }
  qs.f1 = answer_f1(*qs.predicted, *qs.gold);
  return qs;
}

}  // namespace

EvalReport run_eval(const std::vector<Record>& records, const TripleStore& store,
                    const Pipeline& pipeline, std::size_t workers) {
  EvalReport report;
  report.per_question = parallel_map(records.size(), workers, [&](std::size_t i) {
    return score_record(records[i], store, pipeline);
  });
  report.macro_f1 = macro_average(report.per_question);
  return report;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& q : report.per_question) {
    nlohmann::json row{{"id", q.id}, {"f1", q.f1}};
    row["predicted"] = q.predicted ? answer_to_json(*q.predicted) : nlohmann::json(nullptr);
    row["gold"] = q.gold ? answer_to_json(*q.gold) : nlohmann::json(nullptr);
    if (q.failure) row["failure"] = *q.failure;
    rows.push_back(std::move(row));
  }
  return {{"macro_f1", report.macro_f1}, {"per_question", rows}};
}

std::string summary_table(const EvalReport& report) {
  std::size_t width = std::string_view("macro").size();
  for (const auto& q : report.per_question) width = std::max(width, q.id.size());
  std::ostringstream out;
  char buf[64];
  auto row = [&](const std::string& id, double f1, const std::string& note) {
    std::snprintf(buf, sizeof buf, "%.4f", f1);
    out << id << std::string(width - id.size() + 2, ' ') << buf;
    if (!note.empty()) out << "  " << note;
    out << '\n';
  };
  out << "id" << std::string(width, ' ') << "f1\n";
  for (const auto& q : report.per_question) row(q.id, q.f1, q.failure.value_or(""));
  row("macro", report.macro_f1, "");
  return out.str();
}

}  // namespace amr2sparql
