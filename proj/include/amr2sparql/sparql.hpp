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

#ifndef AMR2SPARQL_SPARQL_HPP_
#define AMR2SPARQL_SPARQL_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amr2sparql {

struct Term {
  enum class Kind { kVar, kIri, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;  // variable name without '?', full IRI, or lexical form

  static Term var(std::string name) { return {Kind::kVar, std::move(name)}; }
  static Term iri(std::string iri) { return {Kind::kIri, std::move(iri)}; }
  static Term literal(std::string text) { return {Kind::kLiteral, std::move(text)}; }

  bool is_var() const { return kind == Kind::kVar; }
  bool is_iri() const { return kind == Kind::kIri; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  auto operator<=>(const Term&) const = default;
};

// Variable names must match [A-Za-z][A-Za-z0-9_]*.
bool is_valid_var_name(std::string_view name);

// N-Triples style rendering: ?v, <iri>, "lit".
std::string to_string(const Term& t);

struct TriplePattern {
  Term subject;
  std::string predicate;  // full IRI
  Term object;

  auto operator<=>(const TriplePattern&) const = default;
};

enum class HeaderKind { kSelect, kAsk, kCount };

const char* to_string(HeaderKind kind);

struct QueryHeader {
  HeaderKind kind = HeaderKind::kSelect;
  std::string var;  // projected variable; empty for ASK

  static QueryHeader select(std::string v) { return {HeaderKind::kSelect, std::move(v)}; }
  static QueryHeader ask() { return {HeaderKind::kAsk, {}}; }
  static QueryHeader count(std::string v) { return {HeaderKind::kCount, std::move(v)}; }

  bool operator==(const QueryHeader&) const = default;
};

// label -> namespace IRI
using PrefixTable = std::map<std::string, std::string>;

// dbo, dbp and dbr.
const PrefixTable& default_prefixes();

struct SparqlQuery {
  QueryHeader header;
  std::vector<TriplePattern> triples;
  PrefixTable prefixes;

  std::set<std::string> variables() const;
  bool operator==(const SparqlQuery&) const = default;
};

// Checks variable names, that no triple has two literal endpoints, literals
// never sit in subject position, and the projection is used when the
// pattern is non-empty. Throws std::invalid_argument.
void validate(const SparqlQuery& q);

// Splits at the last '/' or '#': {"http://dbpedia.org/property/", "state"}.
std::pair<std::string, std::string> split_iri(std::string_view iri);

// Labels from `table` whose namespace is used by some IRI in the triples.
PrefixTable used_prefixes(const std::vector<TriplePattern>& triples,
                          const PrefixTable& table);

// Deterministic text: sorted PREFIX lines, header, one triple per line.
std::string serialize(const SparqlQuery& q);

// Order-, duplicate- and variable-name-independent form of a query. Two
// queries have equal canonical forms iff one is a renaming of the other.
struct CanonicalQuery {
  std::string text;
  bool operator==(const CanonicalQuery&) const = default;
};

inline constexpr std::size_t kMaxCanonicalVariables = 8;

// Exhaustive over variable bijections; throws TooManyVariables above
// kMaxCanonicalVariables.
CanonicalQuery canonicalize(const SparqlQuery& q);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_SPARQL_HPP_
