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

#include "amr2sparql/store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

// ---------------------------------------------------------------------------
// TripleStore

bool TripleStore::add(const std::string& subject, const std::string& predicate,
                      const Term& object) {
  Term s = Term::iri(subject);
  if (!triples_.insert({s, predicate, object}).second) return false;
  spo_[s][predicate].insert(object);
  ops_[object][predicate].insert(s);
  by_predicate_[predicate].emplace_back(s, object);
  relation_index_[subject].outgoing.insert(predicate);
  if (object.is_iri()) relation_index_[object.value].incoming.insert(predicate);
  return true;
}

std::set<std::string> TripleStore::predicates() const {
  std::set<std::string> out;
  for (const auto& [p, _] : by_predicate_) out.insert(p);
  return out;
}

const std::set<Term>* TripleStore::objects(const Term& subject,
                                           const std::string& predicate) const {
  auto s = spo_.find(subject);
  if (s == spo_.end()) return nullptr;
  auto p = s->second.find(predicate);
  return p == s->second.end() ? nullptr : &p->second;
}

const std::set<Term>* TripleStore::subjects(const std::string& predicate,
                                            const Term& object) const {
  auto o = ops_.find(object);
  if (o == ops_.end()) return nullptr;
  auto p = o->second.find(predicate);
  return p == o->second.end() ? nullptr : &p->second;
}

const std::vector<std::pair<Term, Term>>* TripleStore::pairs(
    const std::string& predicate) const {
  auto it = by_predicate_.find(predicate);
  return it == by_predicate_.end() ? nullptr : &it->second;
}

std::size_t TripleStore::predicate_cardinality(const std::string& predicate) const {
  const auto* p = pairs(predicate);
  return p ? p->size() : 0;
}

const Relations& TripleStore::relations(const std::string& entity) const {
  static const Relations kNone;
  auto it = relation_index_.find(entity);
  return it == relation_index_.end() ? kNone : it->second;
}

Relations relations_of(const TripleStore& store, const std::string& entity) {
  return store.relations(entity);
}

// ---------------------------------------------------------------------------
// N-Triples

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }
  char peek() {
    skip_ws();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const { throw MalformedLine(line_no_, what); }

  std::string iri() {
    if (peek() != '<') fail("expected '<'");
    auto close = line_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string out(line_.substr(pos_ + 1, close - pos_ - 1));
    if (out.empty()) fail("empty IRI");
    pos_ = close + 1;
    return out;
  }

  std::string blank() {
    std::size_t start = pos_;
    pos_ += 2;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           line_[pos_] != '.') {
      ++pos_;
    }
    if (pos_ == start + 2) fail("empty blank node label");
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string resource() {
    char c = peek();
    if (c == '<') return iri();
    if (c == '_' && pos_ + 1 < line_.size() && line_[pos_ + 1] == ':') return blank();
    fail("expected IRI or blank node");
  }

  std::string literal() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < line_.size()) {
      char c = line_[pos_++];
      if (c == '"') {
        if (pos_ < line_.size() && line_[pos_] == '@') {
          ++pos_;
          while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                         line_[pos_] == '-')) {
            ++pos_;
          }
        } else if (line_.substr(pos_).starts_with("^^")) {
          pos_ += 2;
          iri();
        }
        return out;
      }
      if (c == '\\') {
        if (pos_ >= line_.size()) break;
        char e = line_[pos_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    fail("unterminated literal");
  }

  void expect_dot() {
    if (peek() != '.') fail("missing terminal '.'");
    ++pos_;
    if (!at_end()) fail("trailing content after '.'");
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

TripleStore load_ntriples(std::string_view text) {
  TripleStore store;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    LineReader r(line, line_no);
    if (r.at_end()) continue;
    std::string s = r.resource();
    std::string p = r.iri();
    Term o = r.peek() == '"' ? Term::literal(r.literal()) : Term::iri(r.resource());
    r.expect_dot();
    store.add(s, p, o);
  }
  return store;
}

TripleStore load_ntriples_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_ntriples(buf.str());
}

// ---------------------------------------------------------------------------
// Execution

namespace {

struct Slot {
  std::optional<Term> constant;
  std::size_t var = 0;  // index into the binding vector when !constant
};

struct CompiledTriple {
  Slot subject;
  std::string predicate;
  Slot object;
};

struct Plan {
  std::vector<std::string> vars;
  std::vector<CompiledTriple> order;
};

Plan compile(const TripleStore& store, const std::vector<TriplePattern>& pattern) {
  Plan plan;
  auto slot = [&](const Term& t) {
    Slot s;
    if (!t.is_var()) {
      s.constant = t;
      return s;
    }
    auto it = std::find(plan.vars.begin(), plan.vars.end(), t.value);
    s.var = static_cast<std::size_t>(it - plan.vars.begin());
    if (it == plan.vars.end()) plan.vars.push_back(t.value);
    return s;
  };
  std::vector<CompiledTriple> todo;
  for (const auto& t : pattern) todo.push_back({slot(t.subject), t.predicate, slot(t.object)});
  if (plan.vars.size() > kMaxCanonicalVariables) {
    throw TooManyVariables(std::to_string(plan.vars.size()) + " variables in pattern");
  }

  // Greedy: most bound positions first, then the rarest predicate.
  std::vector<bool> bound(plan.vars.size(), false);
  auto is_bound = [&](const Slot& s) { return s.constant.has_value() || bound[s.var]; };
  while (!todo.empty()) {
    auto best = std::min_element(todo.begin(), todo.end(), [&](const auto& a, const auto& b) {
      int ba = is_bound(a.subject) + is_bound(a.object);
      int bb = is_bound(b.subject) + is_bound(b.object);
      if (ba != bb) return ba > bb;
      return store.predicate_cardinality(a.predicate) < store.predicate_cardinality(b.predicate);
    });
    for (const Slot* s : {&best->subject, &best->object}) {
      if (!s->constant) bound[s->var] = true;
    }
    plan.order.push_back(std::move(*best));
    todo.erase(best);
  }
  return plan;
}

using Binding = std::vector<std::optional<Term>>;

// Calls `emit` for every solution; stops early when it returns false.
bool search(const TripleStore& store, const Plan& plan, std::size_t depth, Binding& b,
            const std::function<bool(const Binding&)>& emit) {
  if (depth == plan.order.size()) return emit(b);
  const CompiledTriple& t = plan.order[depth];
  auto value = [&](const Slot& s) -> const std::optional<Term>& {
    return s.constant ? s.constant : b[s.var];
  };
  const std::optional<Term>& sv = value(t.subject);
  const std::optional<Term>& ov = value(t.object);

  auto try_pair = [&](const Term& s, const Term& o) {
    std::vector<std::size_t> assigned;
    auto assign = [&](const Slot& slot, const Term& v) {
      if (slot.constant) return *slot.constant == v;
      if (b[slot.var]) return *b[slot.var] == v;
      b[slot.var] = v;
      assigned.push_back(slot.var);
      return true;
    };
    bool ok = assign(t.subject, s) && assign(t.object, o);
    bool keep_going = ok ? search(store, plan, depth + 1, b, emit) : true;
    for (auto v : assigned) b[v].reset();
    return keep_going;
  };

  if (sv) {
    const auto* objs = store.objects(*sv, t.predicate);
    if (!objs) return true;
    if (ov) return objs->count(*ov) ? search(store, plan, depth + 1, b, emit) : true;
    for (const auto& o : *objs) {
      if (!try_pair(*sv, o)) return false;
    }
    return true;
  }
  if (ov) {
    const auto* subs = store.subjects(t.predicate, *ov);
    if (!subs) return true;
    for (const auto& s : *subs) {
      if (!try_pair(s, *ov)) return false;
    }
    return true;
  }
  const auto* all = store.pairs(t.predicate);
  if (!all) return true;
  for (const auto& [s, o] : *all) {
    if (!try_pair(s, o)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::map<std::string, Term>> solve(const TripleStore& store,
                                               const std::vector<TriplePattern>& pattern) {
  Plan plan = compile(store, pattern);
  std::set<std::map<std::string, Term>> seen;
  Binding b(plan.vars.size());
  search(store, plan, 0, b, [&](const Binding& sol) {
    std::map<std::string, Term> row;
    for (std::size_t i = 0; i < plan.vars.size(); ++i) row.emplace(plan.vars[i], *sol[i]);
    seen.insert(std::move(row));
    return true;
  });
  return {seen.begin(), seen.end()};
}

AnswerSet execute(const TripleStore& store, const SparqlQuery& q) {
  Plan plan = compile(store, q.triples);
  Binding b(plan.vars.size());

  if (q.header.kind == HeaderKind::kAsk) {
    bool found = false;
    search(store, plan, 0, b, [&](const Binding&) {
      found = true;
      return false;
    });
    return AnswerSet::of_boolean(found);
  }

  auto it = std::find(plan.vars.begin(), plan.vars.end(), q.header.var);
  if (it == plan.vars.end()) {
    throw UnboundProjection("?" + q.header.var + " does not occur in the pattern");
  }
  std::size_t proj = static_cast<std::size_t>(it - plan.vars.begin());
  std::set<Term> values;
  search(store, plan, 0, b, [&](const Binding& sol) {
    values.insert(*sol[proj]);
    return true;
  });
  if (q.header.kind == HeaderKind::kCount) return AnswerSet::of_count(values.size());
  return AnswerSet::of_bindings(std::move(values));
}

}  // namespace amr2sparql
