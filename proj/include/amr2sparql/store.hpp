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

#ifndef AMR2SPARQL_STORE_HPP_
#define AMR2SPARQL_STORE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amr2sparql/sparql.hpp"

namespace amr2sparql {

struct Relations {
  std::set<std::string> outgoing;  // p such that (e, p, o) exists
  std::set<std::string> incoming;  // p such that (s, p, e) exists

  bool operator==(const Relations&) const = default;
};

// In-memory triple set with SPO, OPS and per-predicate indexes plus the
// per-entity relation incidence used for decoding masks. Subjects are IRIs
// (or blank nodes); objects may be literals.
class TripleStore {
 public:
  // Returns false when the triple is already present.
  bool add(const std::string& subject, const std::string& predicate, const Term& object);

  std::size_t size() const { return triples_.size(); }
  const std::set<TriplePattern>& triples() const { return triples_; }
  std::set<std::string> predicates() const;

  // Index lookups; nullptr when nothing matches.
  const std::set<Term>* objects(const Term& subject, const std::string& predicate) const;
  const std::set<Term>* subjects(const std::string& predicate, const Term& object) const;
  const std::vector<std::pair<Term, Term>>* pairs(const std::string& predicate) const;
  std::size_t predicate_cardinality(const std::string& predicate) const;

  const Relations& relations(const std::string& entity) const;

 private:
  std::set<TriplePattern> triples_;
  std::map<Term, std::map<std::string, std::set<Term>>> spo_;
  std::map<Term, std::map<std::string, std::set<Term>>> ops_;
  std::map<std::string, std::vector<std::pair<Term, Term>>> by_predicate_;
  std::map<std::string, Relations> relation_index_;
};

// Lines are `<s> <p> <o> .` or `<s> <p> "literal" .`; blank lines and `#`
// comments are skipped. Language tags and datatypes are accepted and dropped.
// Throws MalformedLine with a 1-based line number.
TripleStore load_ntriples(std::string_view text);
TripleStore load_ntriples_file(const std::filesystem::path& path);

// Both sets empty for unknown entities.
Relations relations_of(const TripleStore& store, const std::string& entity);

struct AnswerSet {
  enum class Kind { kBindings, kBoolean, kCount };

  Kind kind = Kind::kBindings;
  std::set<Term> bindings;
  bool boolean = false;
  std::size_t count = 0;

  static AnswerSet of_bindings(std::set<Term> b) { return {Kind::kBindings, std::move(b), false, 0}; }
  static AnswerSet of_boolean(bool v) { return {Kind::kBoolean, {}, v, 0}; }
  static AnswerSet of_count(std::size_t n) { return {Kind::kCount, {}, false, n}; }

  bool operator==(const AnswerSet&) const = default;
};

// Distinct solutions of the basic graph pattern for every variable of `q`,
// one map per solution. Triples are joined most-selective-first.
std::vector<std::map<std::string, Term>> solve(const TripleStore& store,
                                               const std::vector<TriplePattern>& pattern);

// SELECT: distinct projected bindings; ASK: existence; COUNT: number of
// distinct projected bindings. Throws UnboundProjection when the projected
// variable is absent from the pattern, TooManyVariables beyond 8.
AnswerSet execute(const TripleStore& store, const SparqlQuery& q);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_STORE_HPP_
