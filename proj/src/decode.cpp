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

#include "amr2sparql/decode.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

void add_incident(const TripleStore& store, const std::string& entity, bool entity_is_a,
                  std::set<RelationAction>& out) {
  const Relations& rel = store.relations(entity);
  // Entity as subject: forward when it sits at endpoint A.
  for (const auto& p : rel.outgoing) {
    auto [ns, local] = split_iri(p);
    out.insert({ns, local, entity_is_a ? Direction::kForward : Direction::kBackward});
  }
  for (const auto& p : rel.incoming) {
    auto [ns, local] = split_iri(p);
    out.insert({ns, local, entity_is_a ? Direction::kBackward : Direction::kForward});
  }
}

void add_all_predicates(const TripleStore& store, std::set<RelationAction>& out) {
  for (const auto& p : store.predicates()) {
    auto [ns, local] = split_iri(p);
    out.insert({ns, local, Direction::kForward});
    out.insert({ns, local, Direction::kBackward});
  }
}

// Relations for a path whose endpoints are both variables, using the values
// the emitted pattern allows for them.
std::set<RelationAction> variable_candidates(const MachineState& state,
                                             const TripleStore& store) {
  std::set<RelationAction> out;
  const StackedPath& top = state.top();
  if (!state.emitted.empty()) {
    std::vector<std::map<std::string, Term>> solutions;
    try {
      solutions = solve(store, state.emitted);
    } catch (const TooManyVariables&) {
      solutions.clear();
    }
    std::set<std::string> seen_a;
    std::set<std::string> seen_b;
    for (const auto& row : solutions) {
      for (bool is_a : {true, false}) {
        const Term& endpoint = is_a ? top.term_a : top.term_b;
        auto it = row.find(endpoint.value);
        if (it == row.end() || !it->second.is_iri()) continue;
        auto& seen = is_a ? seen_a : seen_b;
        if (seen.insert(it->second.value).second) {
          add_incident(store, it->second.value, is_a, out);
        }
      }
    }
  }
  if (out.empty()) add_all_predicates(store, out);
  return out;
}

}  // namespace

bool ActionMask::allows(const Action& a) const {
  if (const auto* h = std::get_if<HeaderAction>(&a)) return headers.count(h->kind) > 0;
  if (const auto* r = std::get_if<RelationAction>(&a)) return relations.count(*r) > 0;
  if (std::holds_alternative<ReduceAction>(a)) return reduce;
  return close;
}

std::vector<Action> ActionMask::allowed() const {
  std::vector<Action> out;
  for (HeaderKind h : headers) out.push_back(HeaderAction{h});
  for (const auto& r : relations) out.push_back(r);
  if (reduce) out.push_back(ReduceAction{});
  if (close) out.push_back(CloseAction{});
  return out;
}

ActionMask action_mask(const MachineState& state, const TripleStore& store) {
  ActionMask mask;
  switch (state.phase) {
    case Phase::kClosed:
      throw MachineClosed("no actions after CLOSE");
    case Phase::kAwaitHeader:
      mask.headers = {HeaderKind::kSelect, HeaderKind::kAsk, HeaderKind::kCount};
      return mask;
    case Phase::kTranspiling:
      break;
  }
  if (state.stack.empty()) {
    mask.close = true;
    return mask;
  }
  mask.reduce = true;
  const StackedPath& top = state.top();
  if (top.term_a.is_iri() || top.term_b.is_iri()) {
    if (top.term_a.is_iri()) add_incident(store, top.term_a.value, true, mask.relations);
    if (top.term_b.is_iri()) add_incident(store, top.term_b.value, false, mask.relations);
  } else {
    mask.relations = variable_candidates(state, store);
  }
  return mask;
}

StateMask state_mask(const MachineState& state, const AmrGraph& g, const Question& q) {
  if (state.stack.empty()) throw EmptyStack("no path on the stack");
  return {state.actions_taken + 1, supporting_tokens(g, state.top().path, q)};
}

// ---------------------------------------------------------------------------
// Lexical scoring

std::vector<std::string> split_camel_case(std::string_view name) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(lower(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    unsigned char c = name[i];
    if (c == '_' || c == '-' || c == ' ') {
      flush();
      continue;
    }
    if (!cur.empty()) {
      unsigned char prev = name[i - 1];
      bool next_lower = i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
      if ((std::isupper(c) && (std::islower(prev) || std::isdigit(prev))) ||
          (std::isupper(c) && std::isupper(prev) && next_lower) ||
          (std::isdigit(c) != std::isdigit(prev))) {
        flush();
      }
    }
    cur += static_cast<char>(c);
  }
  flush();
  return words;
}

namespace {

std::set<std::string> trigrams(const std::string& w) {
  std::set<std::string> out;
  if (w.size() < 3) {
    if (!w.empty()) out.insert(w);
    return out;
  }
  for (std::size_t i = 0; i + 3 <= w.size(); ++i) out.insert(w.substr(i, 3));
  return out;
}

}  // namespace

double trigram_dice(std::string_view a, std::string_view b) {
  auto ga = trigrams(lower(a));
  auto gb = trigrams(lower(b));
  if (ga.empty() || gb.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& g : ga) common += gb.count(g);
  return 2.0 * static_cast<double>(common) / static_cast<double>(ga.size() + gb.size());
}

double LexicalPolicy::score(std::string_view local_name, const std::vector<std::string>& tokens) {
  double best = 0.0;
  for (const auto& word : split_camel_case(local_name)) {
    for (const auto& tok : tokens) best = std::max(best, trigram_dice(word, tok));
  }
  return best;
}

HeaderKind LexicalPolicy::header_for(const Question& q) {
  if (q.tokens.empty()) return HeaderKind::kSelect;
  std::string first = lower(q.tokens[0]);
  if (first == "how" && q.tokens.size() > 1 && lower(q.tokens[1]) == "many") {
    return HeaderKind::kCount;
  }
  static const std::set<std::string> kAux = {"is", "are", "was", "were", "did", "does", "do"};
  return kAux.count(first) ? HeaderKind::kAsk : HeaderKind::kSelect;
}

namespace {

bool mentioned(const std::vector<TriplePattern>& emitted, const Term& t) {
  return std::any_of(emitted.begin(), emitted.end(), [&](const TriplePattern& tp) {
    return tp.subject == t || tp.object == t;
  });
}

// True when the top path is the last chance to connect one of its entities.
bool entity_needs_link(const MachineState& state) {
  const StackedPath& top = state.top();
  for (const Term* t : {&top.term_a, &top.term_b}) {
    if (!t->is_iri() || mentioned(state.emitted, *t)) continue;
    bool later = std::any_of(state.stack.begin() + 1, state.stack.end(),
                             [&](const StackedPath& sp) {
                               return sp.term_a == *t || sp.term_b == *t;
                             });
    if (!later) return true;
  }
  return false;
}

}  // namespace

Action LexicalPolicy::choose(const MachineState& state, const ActionMask& mask,
                             const std::optional<StateMask>& sm, const Question& q) const {
  if (state.phase == Phase::kAwaitHeader) {
    HeaderKind h = header_for(q);
    if (mask.headers.count(h) || mask.headers.empty()) return HeaderAction{h};
    return HeaderAction{*mask.headers.begin()};
  }
  if (state.stack.empty()) return CloseAction{};

  std::vector<std::string> tokens;
  if (sm) {
    for (std::size_t i : sm->tokens) {
      if (i < q.tokens.size()) tokens.push_back(lower(q.tokens[i]));
    }
  }

  const RelationAction* best = nullptr;
  double best_score = -1.0;
  auto key = [](const RelationAction& r) {
    return std::make_tuple(std::cref(r.local), std::string(to_string(r.dir)), std::cref(r.ns));
  };
  for (const auto& r : mask.relations) {
    double s = score(r.local, tokens);
    if (s > best_score || (s == best_score && key(r) < key(*best))) {
      best = &r;
      best_score = s;
    }
  }
  bool forced = (state.stack.size() == 1 && state.emitted.empty()) || entity_needs_link(state);
  if (best && (best_score >= tau_ || forced)) return *best;
  return ReduceAction{};
}

Action ReplayPolicy::choose(const MachineState& state, const ActionMask&,
                            const std::optional<StateMask>&, const Question&) const {
  if (state.actions_taken >= actions_.size()) {
    throw IllegalAction("replayed action sequence exhausted");
  }
  return actions_[state.actions_taken];
}

// ---------------------------------------------------------------------------
// Transpile

std::vector<StateMask> TranspileResult::state_masks() const {
  std::vector<StateMask> out;
  for (const auto& s : steps) {
    if (s.state_mask) out.push_back(*s.state_mask);
  }
  return out;
}

TranspileResult transpile(const Question& q, const AmrGraph& g, const RoleAnnotation& ann,
                          const TripleStore& store, const Policy& policy,
                          const PrefixTable& table) {
  TranspileResult out;
  MachineState state = initial_state(g, ann);
  out.initial_depth = state.stack.size();
  while (state.phase != Phase::kClosed) {
    ActionMask mask = action_mask(state, store);
    std::optional<StateMask> sm;
    if (state.phase == Phase::kTranspiling && !state.stack.empty()) {
      sm = state_mask(state, g, q);
    }
    Action a = policy.choose(state, mask, sm, q);
    if (!mask.allows(a)) {
      throw IllegalAction("policy chose " + to_string(a) + " outside the mask at step " +
                          std::to_string(state.actions_taken + 1));
    }
    state = step(std::move(state), a);
    out.actions.push_back(a);
    out.steps.push_back({std::move(a), std::move(mask), std::move(sm)});
  }
  out.query = to_query(state, table);
  return out;
}

TranspileResult transpile(const Question& q, const AmrGraph& g, const TripleStore& store,
                          const Policy& policy, const PrefixTable& table) {
  return transpile(q, g, annotate(g, q), store, policy, table);
}

}  // namespace amr2sparql
