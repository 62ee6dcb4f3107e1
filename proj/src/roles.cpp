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

#include "amr2sparql/roles.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

namespace {

constexpr std::size_t kUnaligned = std::numeric_limits<std::size_t>::max();

std::size_t first_token(const TokenSet& tokens) {
  return tokens.empty() ? kUnaligned : *tokens.begin();
}

bool is_degree_arg1(const AmrGraph& g, const NodeId& unknown) {
  for (const auto* e : g.in_edges(unknown)) {
    if (e->label == "ARG1" && g.concept_of(e->source) == "have-degree-91") {
      return true;
    }
  }
  return false;
}

}  // namespace

const char* to_string(UnknownRule rule) {
  switch (rule) {
    case UnknownRule::kAmrUnknown: return "amr-unknown";
    case UnknownRule::kImperative: return "imperative";
    case UnknownRule::kDegree: return "degree";
    case UnknownRule::kRoot: return "root";
    case UnknownRule::kPolarity: return "polarity";
  }
  return "?";
}

const char* to_string(IntermediateRule rule) {
  switch (rule) {
    case IntermediateRule::kNounOnPath: return "noun-on-path";
    case IntermediateRule::kDegreeArg2: return "degree-arg2";
    case IntermediateRule::kQuantArg1: return "quant-arg1";
    case IntermediateRule::kTime: return "time";
  }
  return "?";
}

bool RoleAnnotation::is_entity(const NodeId& n) const {
  return std::any_of(entities.begin(), entities.end(),
                     [&](const EntityRole& e) { return e.node == n; });
}

bool RoleAnnotation::is_intermediate(const NodeId& n) const {
  return std::any_of(intermediates.begin(), intermediates.end(),
                     [&](const IntermediateRole& i) { return i.node == n; });
}

void RoleAnnotation::validate() const {
  std::set<NodeId> seen;
  if (unknown) seen.insert(*unknown);
  for (const auto& e : entities) {
    if (!seen.insert(e.node).second) throw std::logic_error("node " + e.node + " has two roles");
  }
  for (const auto& i : intermediates) {
    if (!seen.insert(i.node).second) throw std::logic_error("node " + i.node + " has two roles");
  }
}

UnknownMatch classify_unknown(const AmrGraph& g) {
  // An amr-unknown node, or the node it modifies.
  for (const auto& [id, node] : g.nodes()) {
    if (node.is_constant || node.label != "amr-unknown") continue;
    bool polar = false;
    std::optional<NodeId> modified;
    for (const auto* e : g.in_edges(id)) {
      if (e->label == "polarity") polar = true;
      if (e->label == "mod" && !modified) modified = e->source;
    }
    if (polar) return {id, UnknownRule::kPolarity};
    if (is_degree_arg1(g, id)) continue;  // handled by the degree rule below
    return {modified.value_or(id), UnknownRule::kAmrUnknown};
  }
  // Imperatives ask for their ARG1.
  for (const auto& [id, node] : g.nodes()) {
    if (node.is_constant) continue;
    bool imperative = false;
    for (const auto* e : g.out_edges(id)) {
      if (e->label == "mode" && g.concept_of(e->target) == "imperative") imperative = true;
    }
    if (!imperative) continue;
    auto args = g.targets(id, "ARG1");
    if (!args.empty()) return {args.front(), UnknownRule::kImperative};
  }
  // Superlatives over an unknown ask for the compared entity.
  for (const auto& [id, node] : g.nodes()) {
    if (node.is_constant || node.label != "have-degree-91") continue;
    bool asks = false;
    for (const auto& t : g.targets(id, "ARG1")) {
      if (g.concept_of(t) == "amr-unknown") asks = true;
    }
    auto arg5 = g.targets(id, "ARG5");
    if (asks && !arg5.empty()) return {arg5.front(), UnknownRule::kDegree};
  }
  return {g.root(), UnknownRule::kRoot};
}

std::vector<EntityRole> classify_entities(const AmrGraph& g) {
  std::vector<EntityRole> out;
  for (const auto& [id, links] : g.wiki()) {
    if (links.empty()) continue;
    if (links.size() > 1) {
      throw DuplicateWiki("node '" + id + "' links to " + links[0] + " and " + links[1]);
    }
    EntityRole role{id, links.front(), g.aligned_tokens(id)};
    for (const auto& n : name_subgraph(g, id)) {
      const auto& t = g.aligned_tokens(n);
      role.name_tokens.insert(t.begin(), t.end());
    }
    out.push_back(std::move(role));
  }
  std::stable_sort(out.begin(), out.end(), [](const EntityRole& a, const EntityRole& b) {
    return std::make_tuple(first_token(a.name_tokens), a.node) <
           std::make_tuple(first_token(b.name_tokens), b.node);
  });
  return out;
}

std::vector<IntermediateRole> classify_intermediates(
    const AmrGraph& g, const std::optional<NodeId>& unknown,
    const std::vector<EntityRole>& entities, const Question& q) {
  std::set<NodeId> excluded;
  if (unknown) excluded.insert(*unknown);
  for (const auto& e : entities) {
    excluded.insert(e.node);
    for (const auto& n : name_subgraph(g, e.node)) excluded.insert(n);
  }

  std::vector<IntermediateRole> found;
  auto offer = [&](const NodeId& n, IntermediateRule rule) {
    if (excluded.count(n) || g.node(n).is_constant) return;
    for (const auto& f : found) {
      if (f.node == n) return;
    }
    found.push_back({n, rule});
  };

  // Interior nodes of entity-unknown paths (entity-entity when there is
  // no unknown) aligned to a noun.
  std::vector<std::pair<NodeId, NodeId>> anchors;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (unknown) {
      if (entities[i].node != *unknown) anchors.emplace_back(entities[i].node, *unknown);
    } else {
      for (std::size_t j = i + 1; j < entities.size(); ++j) {
        anchors.emplace_back(entities[i].node, entities[j].node);
      }
    }
  }
  for (const auto& [a, b] : anchors) {
    const AmrPath path = undirected_shortest_path(g, a, b);
    const auto& nodes = path.nodes();
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
      const auto& tokens = g.aligned_tokens(nodes[k]);
      if (std::any_of(tokens.begin(), tokens.end(),
                      [&](std::size_t t) { return q.is_noun(t); })) {
        offer(nodes[k], IntermediateRule::kNounOnPath);
      }
    }
  }
  for (const auto& [id, node] : g.nodes()) {
    if (node.label != "have-degree-91" || node.is_constant) continue;
    for (const auto& t : g.targets(id, "ARG2")) offer(t, IntermediateRule::kDegreeArg2);
  }
  for (const auto& [id, node] : g.nodes()) {
    if (node.label != "have-quant-91" || node.is_constant) continue;
    for (const auto& t : g.targets(id, "ARG1")) offer(t, IntermediateRule::kQuantArg1);
  }
  for (const auto& e : g.edges()) {
    if (e.label == "time") offer(e.target, IntermediateRule::kTime);
  }

  std::stable_sort(found.begin(), found.end(),
                   [&](const IntermediateRole& a, const IntermediateRole& b) {
                     return std::make_tuple(first_token(g.aligned_tokens(a.node)), a.node) <
                            std::make_tuple(first_token(g.aligned_tokens(b.node)), b.node);
                   });
  return found;
}

RoleAnnotation annotate(const AmrGraph& g, const Question& q) {
  RoleAnnotation ann;
  UnknownMatch match = classify_unknown(g);
  ann.entities = classify_entities(g);
  if (match.rule != UnknownRule::kPolarity && !g.has_wiki(match.node)) {
    ann.unknown = match.node;
  }
  ann.intermediates = classify_intermediates(g, ann.unknown, ann.entities, q);
  ann.validate();
  return ann;
}

}  // namespace amr2sparql
