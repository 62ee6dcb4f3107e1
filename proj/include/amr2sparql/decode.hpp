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

#ifndef AMR2SPARQL_DECODE_HPP_
#define AMR2SPARQL_DECODE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "amr2sparql/amr.hpp"
#include "amr2sparql/machine.hpp"
#include "amr2sparql/roles.hpp"
#include "amr2sparql/sparql.hpp"
#include "amr2sparql/store.hpp"

namespace amr2sparql {

// Actions the machine may take next, restricted by the knowledge graph for
// relation choices.
struct ActionMask {
  std::set<HeaderKind> headers;
  bool reduce = false;
  bool close = false;
  std::set<RelationAction> relations;

  bool allows(const Action& a) const;
  // Headers, then relations in set order, then REDUCE, then CLOSE.
  std::vector<Action> allowed() const;
};

// Question tokens aligned to the path on top of the stack. `step` is the
// 1-based index of the action about to be taken.
struct StateMask {
  std::size_t step = 0;
  TokenSet tokens;
};

// Throws MachineClosed for a closed state.
ActionMask action_mask(const MachineState& state, const TripleStore& store);

// Throws EmptyStack when nothing is stacked.
StateMask state_mask(const MachineState& state, const AmrGraph& g, const Question& q);

class Policy {
 public:
  virtual ~Policy() = default;
  // `state_mask` is empty exactly when the stack is empty or the header is
  // still pending.
  virtual Action choose(const MachineState& state, const ActionMask& mask,
                        const std::optional<StateMask>& state_mask,
                        const Question& q) const = 0;
};

// Deterministic stand-in for a learned policy: keyword header choice and
// character-trigram overlap between relation names and supporting text.
class LexicalPolicy : public Policy {
 public:
  static constexpr double kDefaultTau = 0.34;

  explicit LexicalPolicy(double tau = kDefaultTau) : tau_(tau) {}

  Action choose(const MachineState& state, const ActionMask& mask,
                const std::optional<StateMask>& state_mask,
                const Question& q) const override;

  double tau() const { return tau_; }

  static HeaderKind header_for(const Question& q);
  // Best Dice over (relation word, supporting token) pairs.
  static double score(std::string_view local_name, const std::vector<std::string>& tokens);

 private:
  double tau_;
};

// Replays a fixed action sequence; throws IllegalAction when it runs out.
class ReplayPolicy : public Policy {
 public:
  explicit ReplayPolicy(std::vector<Action> actions) : actions_(std::move(actions)) {}

  Action choose(const MachineState& state, const ActionMask& mask,
                const std::optional<StateMask>& state_mask,
                const Question& q) const override;

 private:
  std::vector<Action> actions_;
};

// "playedIn" -> {"played", "in"}; digits and '_' / '-' also split.
std::vector<std::string> split_camel_case(std::string_view local_name);

// Dice coefficient of the character-trigram sets of two lowercased words.
// Words shorter than three characters contribute themselves as one gram.
double trigram_dice(std::string_view a, std::string_view b);

struct DecodeStep {
  Action action;
  ActionMask mask;
  std::optional<StateMask> state_mask;
};

struct TranspileResult {
  SparqlQuery query;
  std::vector<Action> actions;
  std::vector<DecodeStep> steps;
  std::size_t initial_depth = 0;

  // Steps that carried a state mask, in order.
  std::vector<StateMask> state_masks() const;
};

// mask -> policy -> step until Closed. Throws IllegalAction when the policy
// picks an action outside the mask.
TranspileResult transpile(const Question& q, const AmrGraph& g, const RoleAnnotation& ann,
                          const TripleStore& store, const Policy& policy,
                          const PrefixTable& table = default_prefixes());

TranspileResult transpile(const Question& q, const AmrGraph& g, const TripleStore& store,
                          const Policy& policy,
                          const PrefixTable& table = default_prefixes());

}  // namespace amr2sparql

#endif  // AMR2SPARQL_DECODE_HPP_
