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

#include "amr2sparql/sparql_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class TokKind { kWord, kVar, kIri, kString, kPunct, kEnd };

struct Tok {
  TokKind kind;
  std::string text;
};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' ||
         c == '.' || c == '/' || c == '%';
}

std::vector<Tok> tokenize(std::string_view text) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '<') {
      auto close = text.find('>', i);
      if (close == std::string_view::npos) throw MalformedSparql("unterminated IRI");
      toks.push_back({TokKind::kIri, std::string(text.substr(i + 1, close - i - 1))});
      i = close + 1;
    } else if (c == '?' || c == '$') {
      std::size_t start = ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      if (i == start) throw MalformedSparql("empty variable name");
      toks.push_back({TokKind::kVar, std::string(text.substr(start, i - start))});
    } else if (c == '"' || c == '\'') {
      char quote = c;
      std::string value;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i++];
        if (d == '\\' && i < text.size()) {
          char e = text[i++];
          value += e == 'n' ? '\n' : e == 't' ? '\t' : e == 'r' ? '\r' : e;
        } else if (d == quote) {
          closed = true;
          break;
        } else {
          value += d;
        }
      }
      if (!closed) throw MalformedSparql("unterminated string");
      if (i < text.size() && text[i] == '@') throw UnsupportedConstruct("language tag");
      if (text.substr(i).starts_with("^^")) throw UnsupportedConstruct("datatype");
      toks.push_back({TokKind::kString, std::move(value)});
    } else if (std::string_view("{}().;,*=!><|&").find(c) != std::string_view::npos) {
      toks.push_back({TokKind::kPunct, std::string(1, c)});
      ++i;
    } else if (is_word_char(c)) {
      std::size_t start = i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      // A trailing '.' terminates the triple rather than belonging to the name.
      std::size_t end = i;
      while (end > start + 1 && text[end - 1] == '.') --end;
      toks.push_back({TokKind::kWord, std::string(text.substr(start, end - start))});
      i = end;
    } else if (c == '[') {
      throw UnsupportedConstruct("blank node");
    } else if (c == '^') {
      throw UnsupportedConstruct("property path");
    } else {
      throw MalformedSparql(std::string("unexpected character '") + c + "'");
    }
  }
  toks.push_back({TokKind::kEnd, ""});
  return toks;
}

const std::set<std::string>& unsupported_keywords() {
  static const std::set<std::string> kWords = {
      "FILTER", "OPTIONAL", "UNION", "MINUS", "BIND", "VALUES", "SERVICE", "GRAPH",
      "ORDER", "LIMIT", "OFFSET", "GROUP", "HAVING", "BASE", "CONSTRUCT", "DESCRIBE",
      "FROM", "REDUCED", "SUM", "AVG", "MIN", "MAX", "SAMPLE", "GROUP_CONCAT"};
  return kWords;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  SparqlQuery parse() {
    while (is_keyword("PREFIX")) parse_prefix();
    check_unsupported();
    if (is_keyword("SELECT")) {
      ++pos_;
      parse_select_clause();
    } else if (is_keyword("ASK")) {
      ++pos_;
      q_.header = QueryHeader::ask();
    } else {
      fail("expected SELECT or ASK");
    }
    check_unsupported();
    if (is_keyword("WHERE")) ++pos_;
    expect_punct("{");
    parse_pattern();
    expect_punct("}");
    check_unsupported();
    if (peek().kind != TokKind::kEnd) fail("trailing input");
    if (q_.header.kind != HeaderKind::kAsk && !q_.triples.empty() &&
        !q_.variables().count(q_.header.var)) {
      throw MalformedSparql("projected ?" + q_.header.var + " not in pattern");
    }
    return std::move(q_);
  }

 private:
  const Tok& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Tok& next() {
    const Tok& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedSparql(what + " near '" + peek().text + "'");
  }
  bool is_keyword(const char* kw, std::size_t ahead = 0) const {
    const Tok& t = peek(ahead);
    return t.kind == TokKind::kWord && upper(t.text) == kw;
  }
  bool is_punct(const char* p) const {
    return peek().kind == TokKind::kPunct && peek().text == p;
  }
  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }
  std::string expect_var() {
    if (peek().kind != TokKind::kVar) fail("expected variable");
    return next().text;
  }
  void check_unsupported() const {
    const Tok& t = peek();
    if (t.kind == TokKind::kWord && unsupported_keywords().count(upper(t.text))) {
      throw UnsupportedConstruct(upper(t.text));
    }
    if (t.kind == TokKind::kPunct && t.text == "{") {
      // Only the WHERE block itself may open a group.
      if (in_pattern_) throw UnsupportedConstruct("nested group");
    }
  }

  void parse_prefix() {
    ++pos_;
    if (peek().kind != TokKind::kWord) fail("expected prefix label");
    std::string word = next().text;
    auto colon = word.find(':');
    if (colon == std::string::npos) fail("prefix label without ':'");
    std::string label = word.substr(0, colon);
    std::string ns = word.substr(colon + 1);
    if (ns.empty()) {
      if (peek().kind != TokKind::kIri) fail("expected namespace IRI");
      ns = next().text;
    }
    q_.prefixes[label] = ns;
  }

  void parse_select_clause() {
    if (is_keyword("DISTINCT")) ++pos_;
    check_unsupported();
    if (is_punct("*")) throw UnsupportedConstruct("SELECT *");
    if (is_punct("(")) {
      ++pos_;
      parse_count();
      if (!is_keyword("AS")) fail("expected AS");
      ++pos_;
      expect_var();
      expect_punct(")");
    } else if (is_keyword("COUNT")) {
      parse_count();
      if (is_keyword("AS")) {
        ++pos_;
        expect_var();
      }
    } else {
      q_.header = QueryHeader::select(expect_var());
    }
    if (peek().kind == TokKind::kVar || is_punct("(")) {
      throw UnsupportedConstruct("multiple projection");
    }
  }

  void parse_count() {
    check_unsupported();
    if (!is_keyword("COUNT")) fail("expected COUNT");
    ++pos_;
    expect_punct("(");
    if (is_keyword("DISTINCT")) ++pos_;
    if (is_punct("*")) throw UnsupportedConstruct("COUNT(*)");
    q_.header = QueryHeader::count(expect_var());
    expect_punct(")");
  }

  std::string expand(const std::string& word) {
    auto colon = word.find(':');
    if (colon == std::string::npos) fail("expected a prefixed name");
    auto it = q_.prefixes.find(word.substr(0, colon));
    if (it == q_.prefixes.end()) fail("undeclared prefix in '" + word + "'");
    if (word.find('/', colon) != std::string::npos) throw UnsupportedConstruct("property path");
    return it->second + word.substr(colon + 1);
  }

  // `<dbp:state>` style references are expanded when the scheme is a label.
  std::string iri_ref(const std::string& text) {
    auto colon = text.find(':');
    if (colon != std::string::npos && text.compare(colon, 3, "://") != 0) {
      auto it = q_.prefixes.find(text.substr(0, colon));
      if (it != q_.prefixes.end()) return it->second + text.substr(colon + 1);
    }
    return text;
  }

  Term parse_term(bool object_position) {
    check_unsupported();
    const Tok& t = next();
    switch (t.kind) {
      case TokKind::kVar:
        if (!is_valid_var_name(t.text)) fail("bad variable name");
        return Term::var(t.text);
      case TokKind::kIri:
        return Term::iri(iri_ref(t.text));
      case TokKind::kString:
        if (!object_position) throw MalformedSparql("literal in subject position");
        return Term::literal(t.text);
      case TokKind::kWord:
        if (object_position &&
            std::all_of(t.text.begin(), t.text.end(), [](unsigned char c) {
              return std::isdigit(c) || c == '.' || c == '-';
            })) {
          return Term::literal(t.text);
        }
        if (upper(t.text) == "TRUE" || upper(t.text) == "FALSE") {
          throw UnsupportedConstruct("boolean literal");
        }
        return Term::iri(expand(t.text));
      default:
        fail("expected a term");
    }
  }

  std::string parse_predicate() {
    check_unsupported();
    const Tok& t = peek();
    if (t.kind == TokKind::kVar) throw UnsupportedConstruct("variable predicate");
    if (t.kind == TokKind::kWord && t.text == "a") {
      ++pos_;
      return kRdfType;
    }
    if (t.kind == TokKind::kPunct && (t.text == "|" || t.text == "*" || t.text == "/")) {
      throw UnsupportedConstruct("property path");
    }
    Term p = parse_term(false);
    if (!p.is_iri()) fail("predicate must be an IRI");
    return p.value;
  }

  void parse_pattern() {
    in_pattern_ = true;
    while (!is_punct("}")) {
      check_unsupported();
      if (peek().kind == TokKind::kEnd) fail("unterminated pattern");
      Term subject = parse_term(false);
      while (true) {
        std::string predicate = parse_predicate();
        while (true) {
          Term object = parse_term(true);
          if (is_punct("|") || is_punct("*") || is_punct("/")) {
            throw UnsupportedConstruct("property path");
          }
          q_.triples.push_back({subject, predicate, object});
          if (!is_punct(",")) break;
          ++pos_;
        }
        if (!is_punct(";")) break;
        ++pos_;
        if (is_punct(".") || is_punct("}")) break;
      }
      if (is_punct(".")) {
        ++pos_;
      } else if (!is_punct("}")) {
        check_unsupported();
        fail("expected '.' or '}'");
      }
    }
    in_pattern_ = false;
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  bool in_pattern_ = false;
  SparqlQuery q_;
};

}  // namespace

SparqlQuery parse_sparql(std::string_view text) { return Parser(text).parse(); }

}  // namespace amr2sparql
