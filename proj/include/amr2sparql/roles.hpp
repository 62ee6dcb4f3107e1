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

#ifndef AMR2SPARQL_ROLES_HPP_
#define AMR2SPARQL_ROLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "amr2sparql/amr.hpp"

namespace amr2sparql {

// Which pattern identified the unknown variable.
enum class UnknownRule {
  kAmrUnknown,  // amr-unknown, or the node it modifies
  kImperative,  // ARG1 of an imperative
  kDegree,      // ARG5 of have-degree-91 over amr-unknown
  kRoot,        // fallback
  kPolarity,    // amr-unknown under :polarity, i.e. a yes/no question
};

enum class IntermediateRule {
  kNounOnPath,  // noun-aligned interior node of an entity path
  kDegreeArg2,  // ARG2 of have-degree-91
  kQuantArg1,   // ARG1 of have-quant-91
  kTime,        // target of :time
};

const char* to_string(UnknownRule rule);
const char* to_string(IntermediateRule rule);

struct UnknownMatch {
  NodeId node;
  UnknownRule rule;
};

struct EntityRole {
  NodeId node;
  std::string iri;
  TokenSet name_tokens;
};

struct IntermediateRole {
  NodeId node;
  IntermediateRule rule;
};

struct RoleAnnotation {
  // Absent for yes/no questions, which only relate entities.
  std::optional<NodeId> unknown;
  std::vector<EntityRole> entities;
  std::vector<IntermediateRole> intermediates;

  bool is_entity(const NodeId& n) const;
  bool is_intermediate(const NodeId& n) const;
  // Throws std::logic_error if a node holds two roles.
  void validate() const;
};

// First match among the amr-unknown, imperative and degree rules, in that
// order; the graph root otherwise.
UnknownMatch classify_unknown(const AmrGraph& g);

// Every wiki-linked node, ordered by first name token (unaligned last, then
// by node id). Throws DuplicateWiki when a node carries two distinct IRIs.
std::vector<EntityRole> classify_entities(const AmrGraph& g);

// Candidate secondary variables, deduplicated (earliest rule kept) and ordered by first aligned token.
std::vector<IntermediateRole> classify_intermediates(
    const AmrGraph& g, const std::optional<NodeId>& unknown,
    const std::vector<EntityRole>& entities, const Question& q);

RoleAnnotation annotate(const AmrGraph& g, const Question& q);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_ROLES_HPP_
