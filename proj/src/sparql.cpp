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

#include "amr2sparql/sparql.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

namespace {

bool is_local_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// Conservative PN_LOCAL check so compacted names always re-parse.
bool is_valid_local(std::string_view local) {
  if (local.empty()) return false;
  if (local.front() == '-' || local.front() == '.' || local.back() == '.') return false;
  return std::all_of(local.begin(), local.end(), is_local_char);
}

// Longest namespace in `prefixes` that turns `iri` into a valid prefixed name.
const std::pair<const std::string, std::string>* find_prefix(
    std::string_view iri, const PrefixTable& prefixes) {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    const std::string& ns = entry.second;
    if (!iri.starts_with(ns) || !is_valid_local(iri.substr(ns.size()))) continue;
    if (!best || ns.size() > best->second.size()) best = &entry;
  }
  return best;
}

std::string escape_literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + '"';
}

std::string render_iri(std::string_view iri, const PrefixTable& prefixes) {
  if (const auto* p = find_prefix(iri, prefixes)) {
    return p->first + ":" + std::string(iri.substr(p->second.size()));
  }
  return "<" + std::string(iri) + ">";
}

std::string render(const Term& t, const PrefixTable& prefixes) {
  switch (t.kind) {
    case Term::Kind::kVar: return "?" + t.value;
    case Term::Kind::kIri: return render_iri(t.value, prefixes);
    case Term::Kind::kLiteral: return escape_literal(t.value);
  }
  return {};
}

std::string count_alias(const SparqlQuery& q) {
  auto vars = q.variables();
  if (!vars.count("c")) return "c";
  for (int i = 2;; ++i) {
    std::string alias = "c" + std::to_string(i);
    if (!vars.count(alias)) return alias;
  }
}

}  // namespace

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string to_string(const Term& t) { return render(t, {}); }

const char* to_string(HeaderKind kind) {
  switch (kind) {
    case HeaderKind::kSelect: return "SELECT";
    case HeaderKind::kAsk: return "ASK";
    case HeaderKind::kCount: return "COUNT";
  }
  return "?";
}

const PrefixTable& default_prefixes() {
  static const PrefixTable kTable = {
      {"dbo", "http://dbpedia.org/ontology/"},
      {"dbp", "http://dbpedia.org/property/"},
      {"dbr", "http://dbpedia.org/resource/"},
  };
  return kTable;
}

std::set<std::string> SparqlQuery::variables() const {
  std::set<std::string> vars;
  for (const auto& t : triples) {
    if (t.subject.is_var()) vars.insert(t.subject.value);
    if (t.object.is_var()) vars.insert(t.object.value);
  }
  return vars;
}

void validate(const SparqlQuery& q) {
  for (const auto& t : q.triples) {
    for (const Term* term : {&t.subject, &t.object}) {
      if (term->is_var() && !is_valid_var_name(term->value)) {
        throw std::invalid_argument("bad variable name '" + term->value + "'");
      }
    }
    if (t.subject.is_literal()) throw std::invalid_argument("literal in subject position");
    if (t.predicate.empty()) throw std::invalid_argument("empty predicate");
  }
  if (q.header.kind != HeaderKind::kAsk) {
    if (!is_valid_var_name(q.header.var)) {
      throw std::invalid_argument("bad projection '" + q.header.var + "'");
    }
    if (!q.triples.empty() && !q.variables().count(q.header.var)) {
      throw std::invalid_argument("projection ?" + q.header.var + " not in pattern");
    }
  }
}

std::pair<std::string, std::string> split_iri(std::string_view iri) {
  auto cut = iri.find_last_of("/#");
  if (cut == std::string_view::npos || cut + 1 == iri.size()) {
    return {std::string(), std::string(iri)};
  }
  return {std::string(iri.substr(0, cut + 1)), std::string(iri.substr(cut + 1))};
}

PrefixTable used_prefixes(const std::vector<TriplePattern>& triples,
                          const PrefixTable& table) {
  PrefixTable used;
  auto note = [&](std::string_view iri) {
    if (const auto* p = find_prefix(iri, table)) used.insert(*p);
  };
  for (const auto& t : triples) {
    if (t.subject.is_iri()) note(t.subject.value);
    note(t.predicate);
    if (t.object.is_iri()) note(t.object.value);
  }
  return used;
}

std::string serialize(const SparqlQuery& q) {
  std::ostringstream out;
  for (const auto& [label, ns] : q.prefixes) {
    out << "PREFIX " << label << ": <" << ns << ">\n";
  }
  switch (q.header.kind) {
    case HeaderKind::kSelect:
      out << "SELECT DISTINCT ?" << q.header.var << " WHERE {";
      break;
    case HeaderKind::kAsk:
      out << "ASK WHERE {";
      break;
    case HeaderKind::kCount:
      out << "SELECT (COUNT(DISTINCT ?" << q.header.var << ") AS ?" << count_alias(q)
          << ") WHERE {";
      break;
  }
  if (q.triples.empty()) {
    out << " }";
    return out.str();
  }
  out << '\n';
  for (const auto& t : q.triples) {
    out << "  " << render(t.subject, q.prefixes) << ' '
        << render_iri(t.predicate, q.prefixes) << ' ' << render(t.object, q.prefixes)
        << " .\n";
  }
  out << '}';
  return out.str();
}

CanonicalQuery canonicalize(const SparqlQuery& q) {
  std::set<std::string> var_set = q.variables();
  if (q.header.kind != HeaderKind::kAsk) var_set.insert(q.header.var);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  if (vars.size() > kMaxCanonicalVariables) {
    throw TooManyVariables(std::to_string(vars.size()) + " variables, limit is " +
                           std::to_string(kMaxCanonicalVariables));
  }
  std::set<TriplePattern> unique(q.triples.begin(), q.triples.end());

  std::vector<std::size_t> perm(vars.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto index_of = [&](const std::string& v) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  auto term_text = [&](const Term& t) {
    if (t.is_var()) return "?v" + std::to_string(perm[index_of(t.value)]);
    return to_string(t);
  };

  std::string best;
  bool first = true;
  do {
    std::vector<std::string> lines;
    lines.reserve(unique.size());
    for (const auto& t : unique) {
      lines.push_back(term_text(t.subject) + '\t' + t.predicate + '\t' + term_text(t.object));
    }
    std::sort(lines.begin(), lines.end());
    std::string text = to_string(q.header.kind);
    if (q.header.kind != HeaderKind::kAsk) {
      text += " ?v" + std::to_string(perm[index_of(q.header.var)]);
    }
    for (const auto& l : lines) text += '\n' + l;
    if (first || text < best) best = std::move(text);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalQuery{std::move(best)};
}

}  // namespace amr2sparql
