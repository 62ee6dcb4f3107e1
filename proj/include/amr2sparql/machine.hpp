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

#ifndef AMR2SPARQL_MACHINE_HPP_
#define AMR2SPARQL_MACHINE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "amr2sparql/amr.hpp"
#include "amr2sparql/roles.hpp"
#include "amr2sparql/sparql.hpp"

namespace amr2sparql {

// Transpiler actions. Relation emits one triple for the path on top of the
// stack and pops it; Reduce pops without emitting.
enum class Direction { kForward, kBackward };

const char* to_string(Direction dir);

struct HeaderAction {
  HeaderKind kind;
  auto operator<=>(const HeaderAction&) const = default;
};

struct RelationAction {
  std::string ns;     // namespace IRI, e.g. http://dbpedia.org/property/
  std::string local;  // local name, e.g. state
  Direction dir = Direction::kForward;

  std::string iri() const { return ns + local; }
  auto operator<=>(const RelationAction&) const = default;
};

struct ReduceAction {
  auto operator<=>(const ReduceAction&) const = default;
};

struct CloseAction {
  auto operator<=>(const CloseAction&) const = default;
};

using Action = std::variant<HeaderAction, RelationAction, ReduceAction, CloseAction>;

// "SELECT", "REDUCE", "CLOSE", "state(backward,http://dbpedia.org/property/)"
std::string to_string(const Action& a);

enum class PathCategory {
  kEntityUnknown,
  kEntityIntermediate,
  kIntermediateUnknown,
  kIntermediateIntermediate,
  kEntityEntity,
};

const char* to_string(PathCategory c);

// A stack entry. term_a/term_b are the SPARQL terms of the path endpoints:
// entities become IRIs, the unknown ?s, intermediates ?i, ?i2, ...
struct StackedPath {
  AmrPath path;
  Term term_a;
  Term term_b;
  PathCategory category;
};

enum class Phase { kAwaitHeader, kTranspiling, kClosed };

struct MachineState {
  Phase phase = Phase::kAwaitHeader;
  std::vector<StackedPath> stack;  // top first
  std::vector<TriplePattern> emitted;
  std::optional<QueryHeader> header;
  std::size_t actions_taken = 0;

  const StackedPath& top() const;
};

inline constexpr const char* kUnknownVar = "s";

// "i", "i2", "i3", ... for intermediate rank 0, 1, 2, ...
std::string intermediate_var(std::size_t rank);

// All endpoint-pair paths for the annotation, top of stack first.
std::vector<StackedPath> init_stack(const AmrGraph& g, const RoleAnnotation& ann);

MachineState initial_state(const AmrGraph& g, const RoleAnnotation& ann);

// Applies one action; throws IllegalAction (NonEmptyStackAtClose for a
// premature Close) when the action is not legal in `state`.
MachineState step(MachineState state, const Action& action);

// Header plus emitted triples, with the `table` labels the triples use.
SparqlQuery to_query(const MachineState& state,
                     const PrefixTable& table = default_prefixes());

// Folds `step` over the initial stack. The sequence must end with Close.
SparqlQuery run(std::span<const Action> actions, const AmrGraph& g,
                const RoleAnnotation& ann,
                const PrefixTable& table = default_prefixes());

}  // namespace amr2sparql

#endif  // AMR2SPARQL_MACHINE_HPP_
