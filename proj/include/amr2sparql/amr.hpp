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

#ifndef AMR2SPARQL_AMR_HPP_
#define AMR2SPARQL_AMR_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace amr2sparql {

using NodeId = std::string;
using TokenSet = std::set<std::size_t>;

// A natural-language question with its tokenization and coarse POS tags.
struct Question {
  std::string id;
  std::string text;
  std::vector<std::string> tokens;
  std::vector<std::string> pos;

  // Throws std::invalid_argument when tokens are empty or |tokens| != |pos|.
  void validate() const;
  bool is_noun(std::size_t token) const;
};

struct AmrNode {
  std::string label;
  // Attribute constants (`:op1 "Maharashtra"`, `:mode imperative`) are nodes
  // too; `quoted` remembers string-literal syntax for serialization.
  bool is_constant = false;
  bool quoted = false;
};

struct AmrEdge {
  NodeId source;
  std::string label;  // forward role without leading ':' or "-of" suffix
  NodeId target;
  bool inverted = false;  // written as `:label-of` in the source text

  bool operator==(const AmrEdge&) const = default;
};

// External alignment record: node -> token indices, node -> KG entity IRI.
struct AlignmentRecord {
  std::map<NodeId, std::vector<std::size_t>> alignments;
  std::map<NodeId, std::string> wiki;
  std::size_t token_count = 0;
};

class AmrGraph {
 public:
  const std::map<NodeId, AmrNode>& nodes() const { return nodes_; }
  const std::vector<AmrEdge>& edges() const { return edges_; }
  const NodeId& root() const { return root_; }

  bool contains(const NodeId& id) const { return nodes_.count(id) != 0; }
  const AmrNode& node(const NodeId& id) const;
  const std::string& concept_of(const NodeId& id) const {
    return node(id).label;
  }

  // Distinct KG IRIs linked to `id` via `:wiki` or the sidecar. More than one
  // entry is a data error surfaced by entity classification.
  const std::vector<std::string>& wiki_links(const NodeId& id) const;
  bool has_wiki(const NodeId& id) const { return !wiki_links(id).empty(); }
  const std::map<NodeId, std::vector<std::string>>& wiki() const {
    return wiki_;
  }

  const TokenSet& aligned_tokens(const NodeId& id) const;
  const std::map<NodeId, TokenSet>& alignments() const { return align_; }

  // Edge queries on the normalized (forward) direction.
  std::vector<const AmrEdge*> out_edges(const NodeId& id) const;
  std::vector<const AmrEdge*> in_edges(const NodeId& id) const;
  std::vector<NodeId> targets(const NodeId& id, std::string_view label) const;
  // Neighbours in the undirected view, sorted, deduplicated.
  const std::vector<NodeId>& neighbours(const NodeId& id) const;

  // Builder interface used by the parser and tests.
  void add_node(const NodeId& id, AmrNode node);
  void add_edge(AmrEdge edge);
  void set_root(const NodeId& id) { root_ = id; }
  void add_wiki(const NodeId& id, const std::string& iri);
  void align(const NodeId& id, std::size_t token) { align_[id].insert(token); }

  // Checks root/edge endpoints, undirected connectivity, and (when
  // token_count > 0) alignment bounds.
  void validate(std::size_t token_count = 0) const;

 private:
  std::map<NodeId, AmrNode> nodes_;
  std::vector<AmrEdge> edges_;
  NodeId root_;
  std::map<NodeId, std::vector<std::string>> wiki_;
  std::map<NodeId, TokenSet> align_;
  std::map<NodeId, std::vector<NodeId>> adjacency_;
};

// Path in the undirected view; nodes()[0] == endpoint_a(), back() == endpoint_b().
class AmrPath {
 public:
  AmrPath() = default;
  explicit AmrPath(std::vector<NodeId> nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const NodeId& endpoint_a() const { return nodes_.front(); }
  const NodeId& endpoint_b() const { return nodes_.back(); }
  std::size_t size() const { return nodes_.size(); }
  AmrPath reversed() const;
  std::string to_string() const;  // "s1 i p s"

  auto operator<=>(const AmrPath&) const = default;

 private:
  std::vector<NodeId> nodes_;
};

// Parses Penman notation. Bare symbols that are defined as variables anywhere
// in the text are references; any other bare symbol is a constant. Attribute
// constants get ids "<parent>.<role>" (".2", ".3" for repeats of that role).
AmrGraph parse_penman(std::string_view text, const AlignmentRecord& align = {});

// Inverse of parse_penman for graphs it produced (variables keep their ids).
std::string serialize_penman(const AmrGraph& g);

// Shortest path in the undirected view. Ties go to the lexicographically
// smallest node sequence taken from the smaller endpoint, so the result for
// (b, a) is the reverse of the result for (a, b).
AmrPath undirected_shortest_path(const AmrGraph& g, const NodeId& a,
                                 const NodeId& b);

// Nodes reachable from `entity` through `:name` and then `:opN` edges.
std::vector<NodeId> name_subgraph(const AmrGraph& g, const NodeId& entity);

// Tokens aligned to the path's nodes plus the name subgraphs of entity
// endpoints. Indices outside the question are dropped.
TokenSet supporting_tokens(const AmrGraph& g, const AmrPath& path,
                           const Question& q);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_AMR_HPP_
