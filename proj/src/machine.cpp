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

#include "amr2sparql/machine.hpp"

#include <algorithm>
#include <tuple>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* to_string(Phase p) {
  switch (p) {
    case Phase::kAwaitHeader: return "AwaitHeader";
    case Phase::kTranspiling: return "Transpiling";
    case Phase::kClosed: return "Closed";
  }
  return "?";
}

struct Candidate {
  PathCategory category;
  std::size_t rank;
  StackedPath entry;
};

}  // namespace

const char* to_string(Direction dir) {
  return dir == Direction::kForward ? "forward" : "backward";
}

std::string to_string(const Action& a) {
  return std::visit(
      overloaded{
          [](const HeaderAction& h) { return std::string(to_string(h.kind)); },
          [](const RelationAction& r) {
            return r.local + "(" + to_string(r.dir) + "," + r.ns + ")";
          },
          [](const ReduceAction&) { return std::string("REDUCE"); },
          [](const CloseAction&) { return std::string("CLOSE"); },
      },
      a);
}

const char* to_string(PathCategory c) {
  switch (c) {
    case PathCategory::kEntityUnknown: return "EntityUnknown";
    case PathCategory::kEntityIntermediate: return "EntityIntermediate";
    case PathCategory::kIntermediateUnknown: return "IntermediateUnknown";
    case PathCategory::kIntermediateIntermediate: return "IntermediateIntermediate";
    case PathCategory::kEntityEntity: return "EntityEntity";
  }
  return "?";
}

const StackedPath& MachineState::top() const {
  if (stack.empty()) throw EmptyStack("no path on the stack");
  return stack.front();
}

std::string intermediate_var(std::size_t rank) {
  return rank == 0 ? "i" : "i" + std::to_string(rank + 1);
}

std::vector<StackedPath> init_stack(const AmrGraph& g, const RoleAnnotation& ann) {
  std::vector<Candidate> found;
  auto push = [&](PathCategory cat, std::size_t rank, const NodeId& a, const NodeId& b,
                  Term ta, Term tb) {
    found.push_back({cat, rank,
                     StackedPath{undirected_shortest_path(g, a, b), std::move(ta),
                                 std::move(tb), cat}});
  };
  const auto& ents = ann.entities;
  const auto& mids = ann.intermediates;
  const Term unknown = Term::var(kUnknownVar);

  for (std::size_t e = 0; e < ents.size(); ++e) {
    Term et = Term::iri(ents[e].iri);
    if (ann.unknown) {
      push(PathCategory::kEntityUnknown, e, ents[e].node, *ann.unknown, et, unknown);
    }
    for (std::size_t i = 0; i < mids.size(); ++i) {
      push(PathCategory::kEntityIntermediate, e, ents[e].node, mids[i].node, et,
           Term::var(intermediate_var(i)));
    }
    if (!ann.unknown) {
      for (std::size_t f = e + 1; f < ents.size(); ++f) {
        if (ents[f].iri == ents[e].iri) continue;
        push(PathCategory::kEntityEntity, e, ents[e].node, ents[f].node, et,
             Term::iri(ents[f].iri));
      }
    }
  }
  for (std::size_t i = 0; i < mids.size(); ++i) {
    Term it = Term::var(intermediate_var(i));
    if (ann.unknown) {
      push(PathCategory::kIntermediateUnknown, i, mids[i].node, *ann.unknown, it, unknown);
    }
    for (std::size_t j = i + 1; j < mids.size(); ++j) {
      push(PathCategory::kIntermediateIntermediate, i, mids[i].node, mids[j].node, it,
           Term::var(intermediate_var(j)));
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
    return std::make_tuple(x.category, x.rank, x.entry.path.size(),
                           std::cref(x.entry.path.nodes())) <
           std::make_tuple(y.category, y.rank, y.entry.path.size(),
                           std::cref(y.entry.path.nodes()));
  });
  std::vector<StackedPath> stack;
  stack.reserve(found.size());
  for (auto& c : found) stack.push_back(std::move(c.entry));
  return stack;
}

MachineState initial_state(const AmrGraph& g, const RoleAnnotation& ann) {
  MachineState state;
  state.stack = init_stack(g, ann);
  return state;
}

MachineState step(MachineState state, const Action& action) {
  auto illegal = [&](const std::string& why) {
    return IllegalAction(to_string(action) + " in phase " + to_string(state.phase) +
                         ": " + why);
  };
  if (state.phase == Phase::kClosed) throw illegal("machine is closed");
  bool is_header = std::holds_alternative<HeaderAction>(action);
  if (state.phase == Phase::kAwaitHeader && !is_header) throw illegal("header expected");
  if (state.phase == Phase::kTranspiling && is_header) throw illegal("header already set");

  std::visit(
      overloaded{
          [&](const HeaderAction& h) {
            state.header = h.kind == HeaderKind::kAsk
                               ? QueryHeader::ask()
                               : QueryHeader{h.kind, std::string(kUnknownVar)};
            state.phase = Phase::kTranspiling;
          },
          [&](const RelationAction& r) {
            if (state.stack.empty()) throw illegal("stack is empty");
            if (r.local.empty()) throw illegal("relation without local name");
            const StackedPath& top = state.stack.front();
            if (r.dir == Direction::kForward) {
              state.emitted.push_back({top.term_a, r.iri(), top.term_b});
            } else {
              state.emitted.push_back({top.term_b, r.iri(), top.term_a});
            }
            state.stack.erase(state.stack.begin());
          },
          [&](const ReduceAction&) {
            if (state.stack.empty()) throw illegal("stack is empty");
            state.stack.erase(state.stack.begin());
          },
          [&](const CloseAction&) {
            if (!state.stack.empty()) throw NonEmptyStackAtClose(state.stack.size());
            state.phase = Phase::kClosed;
          },
      },
      action);
  ++state.actions_taken;
  return state;
}

SparqlQuery to_query(const MachineState& state, const PrefixTable& table) {
  SparqlQuery q;
  q.header = state.header.value_or(QueryHeader::ask());
  q.triples = state.emitted;
  q.prefixes = used_prefixes(q.triples, table);
  return q;
}

SparqlQuery run(std::span<const Action> actions, const AmrGraph& g,
                const RoleAnnotation& ann, const PrefixTable& table) {
  MachineState state = initial_state(g, ann);
  for (const auto& a : actions) state = step(std::move(state), a);
  if (state.phase != Phase::kClosed) {
    throw IllegalAction("action sequence ended before CLOSE");
  }
  return to_query(state, table);
}

}  // namespace amr2sparql
