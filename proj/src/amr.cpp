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

#include "amr2sparql/amr.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "amr2sparql/error.hpp"

namespace amr2sparql {

void Question::validate() const {
  if (tokens.empty()) throw std::invalid_argument("question has no tokens");
  if (tokens.size() != pos.size()) {
    throw std::invalid_argument("question " + id + ": " +
                                std::to_string(tokens.size()) + " tokens but " +
                                std::to_string(pos.size()) + " POS tags");
  }
}

bool Question::is_noun(std::size_t token) const {
  if (token >= pos.size()) return false;
  std::string tag = pos[token];
  std::transform(tag.begin(), tag.end(), tag.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return tag == "NOUN" || tag == "PROPN";
}

// ---------------------------------------------------------------------------
// AmrGraph

const AmrNode& AmrGraph::node(const NodeId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw std::out_of_range("unknown AMR node: " + id);
  return it->second;
}

const std::vector<std::string>& AmrGraph::wiki_links(const NodeId& id) const {
  static const std::vector<std::string> kNone;
  auto it = wiki_.find(id);
  return it == wiki_.end() ? kNone : it->second;
}

const TokenSet& AmrGraph::aligned_tokens(const NodeId& id) const {
  static const TokenSet kNone;
  auto it = align_.find(id);
  return it == align_.end() ? kNone : it->second;
}

std::vector<const AmrEdge*> AmrGraph::out_edges(const NodeId& id) const {
  std::vector<const AmrEdge*> out;
  for (const auto& e : edges_) {
    if (e.source == id) out.push_back(&e);
  }
  return out;
}

std::vector<const AmrEdge*> AmrGraph::in_edges(const NodeId& id) const {
  std::vector<const AmrEdge*> in;
  for (const auto& e : edges_) {
    if (e.target == id) in.push_back(&e);
  }
  return in;
}

std::vector<NodeId> AmrGraph::targets(const NodeId& id,
                                      std::string_view label) const {
  std::vector<NodeId> out;
  for (const auto& e : edges_) {
    if (e.source == id && e.label == label) out.push_back(e.target);
  }
  return out;
}

const std::vector<NodeId>& AmrGraph::neighbours(const NodeId& id) const {
  static const std::vector<NodeId> kNone;
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? kNone : it->second;
}

void AmrGraph::add_node(const NodeId& id, AmrNode node) {
  if (!nodes_.emplace(id, std::move(node)).second) {
    throw MalformedPenman("duplicate node id '" + id + "'");
  }
  adjacency_.try_emplace(id);
}

void AmrGraph::add_edge(AmrEdge edge) {
  auto link = [this](const NodeId& from, const NodeId& to) {
    auto& adj = adjacency_[from];
    auto it = std::lower_bound(adj.begin(), adj.end(), to);
    if (it == adj.end() || *it != to) adj.insert(it, to);
  };
  link(edge.source, edge.target);
  link(edge.target, edge.source);
  edges_.push_back(std::move(edge));
}

void AmrGraph::add_wiki(const NodeId& id, const std::string& iri) {
  auto& links = wiki_[id];
  if (std::find(links.begin(), links.end(), iri) == links.end()) {
    links.push_back(iri);
  }
}

void AmrGraph::validate(std::size_t token_count) const {
  if (nodes_.empty()) throw MalformedPenman("empty graph");
  if (!contains(root_)) throw MalformedPenman("root '" + root_ + "' is not a node");
  for (const auto& e : edges_) {
    if (!contains(e.source) || !contains(e.target)) {
      throw MalformedPenman("edge :" + e.label + " has a dangling endpoint");
    }
  }
  std::set<NodeId> seen{root_};
  std::deque<NodeId> queue{root_};
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (const auto& n : neighbours(cur)) {
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  if (seen.size() != nodes_.size()) throw MalformedPenman("graph is not connected");
  for (const auto& [id, tokens] : align_) {
    if (!contains(id)) throw DanglingAlignment("alignment for unknown node '" + id + "'");
    if (token_count > 0 && !tokens.empty() && *tokens.rbegin() >= token_count) {
      throw DanglingAlignment("node '" + id + "' aligned to token " +
                              std::to_string(*tokens.rbegin()) + " of " +
                              std::to_string(token_count));
    }
  }
  for (const auto& [id, links] : wiki_) {
    if (!contains(id)) throw DanglingAlignment("wiki link for unknown node '" + id + "'");
  }
}

// ---------------------------------------------------------------------------
// AmrPath

AmrPath::AmrPath(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw std::invalid_argument("path needs two nodes");
  std::set<NodeId> unique(nodes_.begin(), nodes_.end());
  if (unique.size() != nodes_.size()) {
    throw std::invalid_argument("path repeats a node");
  }
}

AmrPath AmrPath::reversed() const {
  return AmrPath(std::vector<NodeId>(nodes_.rbegin(), nodes_.rend()));
}

std::string AmrPath::to_string() const {
  std::string out;
  for (const auto& n : nodes_) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Penman

namespace {

enum class TokKind { kOpen, kClose, kSlash, kRole, kString, kSymbol };

struct Tok {
  TokKind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Tok> tokenize_penman(std::string_view text) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  auto is_delim = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == '"' || c == '/';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      // Metadata comment runs to end of line.
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '(') {
      toks.push_back({TokKind::kOpen, "(", i++});
    } else if (c == ')') {
      toks.push_back({TokKind::kClose, ")", i++});
    } else if (c == '/') {
      toks.push_back({TokKind::kSlash, "/", i++});
    } else if (c == '"') {
      std::size_t start = i++;
      std::string value;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i++];
        if (d == '\\' && i < text.size()) {
          value += text[i++];
        } else if (d == '"') {
          closed = true;
          break;
        } else {
          value += d;
        }
      }
      if (!closed) throw MalformedPenman("unterminated string at offset " + std::to_string(start));
      toks.push_back({TokKind::kString, std::move(value), start});
    } else {
      std::size_t start = i;
      while (i < text.size() && !is_delim(text[i])) ++i;
      std::string sym(text.substr(start, i - start));
      if (sym.front() == ':') {
        if (sym.size() == 1) throw MalformedPenman("empty role at offset " + std::to_string(start));
        toks.push_back({TokKind::kRole, sym.substr(1), start});
      } else {
        toks.push_back({TokKind::kSymbol, std::move(sym), start});
      }
    }
  }
  return toks;
}

bool is_inverse_role(const std::string& role) {
  static const std::set<std::string> kNotInverse = {
      "consist-of", "prep-out-of", "prep-on-behalf-of"};
  return role.size() > 3 && role.ends_with("-of") && !kNotInverse.count(role);
}

class PenmanParser {
 public:
  explicit PenmanParser(std::string_view text) : toks_(tokenize_penman(text)) {
    for (std::size_t i = 0; i + 2 < toks_.size(); ++i) {
      if (toks_[i].kind == TokKind::kOpen && toks_[i + 1].kind == TokKind::kSymbol &&
          toks_[i + 2].kind == TokKind::kSlash) {
        if (!variables_.insert(toks_[i + 1].text).second) {
          throw MalformedPenman("variable '" + toks_[i + 1].text + "' defined twice");
        }
      }
    }
  }

  AmrGraph parse() {
    if (toks_.empty()) throw MalformedPenman("empty input");
    NodeId root = parse_node();
    if (pos_ != toks_.size()) fail("trailing input");
    graph_.set_root(root);
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t offset = pos_ < toks_.size() ? toks_[pos_].offset : 0;
    throw MalformedPenman(what + " (token " + std::to_string(pos_) +
                          ", offset " + std::to_string(offset) + ")");
  }

  const Tok& expect(TokKind kind, const char* what) {
    if (pos_ >= toks_.size()) fail(std::string("unexpected end, expected ") + what);
    if (toks_[pos_].kind != kind) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  NodeId parse_node() {
    expect(TokKind::kOpen, "'('");
    NodeId var = expect(TokKind::kSymbol, "variable").text;
    expect(TokKind::kSlash, "'/'");
    const Tok& concept_tok = expect(TokKind::kSymbol, "concept");
    graph_.add_node(var, AmrNode{concept_tok.text, false, false});

    while (pos_ < toks_.size() && toks_[pos_].kind == TokKind::kRole) {
      std::string role = toks_[pos_++].text;
      if (pos_ >= toks_.size()) fail("role :" + role + " has no value");
      const Tok& value = toks_[pos_];
      if (value.kind == TokKind::kOpen) {
        // Reserve the edge slot first so edge order follows text order.
        std::size_t slot = reserve_edge();
        NodeId child = parse_node();
        link(slot, var, role, child);
      } else if (value.kind == TokKind::kSymbol && variables_.count(value.text)) {
        ++pos_;
        link(reserve_edge(), var, role, value.text);
      } else if (value.kind == TokKind::kSymbol || value.kind == TokKind::kString) {
        ++pos_;
        add_constant(var, role, value);
      } else {
        fail("bad value for role :" + role);
      }
    }
    expect(TokKind::kClose, "')'");
    return var;
  }

  std::size_t reserve_edge() {
    pending_.emplace_back();
    return pending_.size() - 1;
  }

  void link(std::size_t slot, const NodeId& parent, const std::string& role,
            const NodeId& child) {
    if (is_inverse_role(role)) {
      pending_[slot] = AmrEdge{child, role.substr(0, role.size() - 3), parent, true};
    } else {
      pending_[slot] = AmrEdge{parent, role, child, false};
    }
    // Flush every slot that is now filled, in order.
    while (flushed_ < pending_.size() && !pending_[flushed_].source.empty()) {
      graph_.add_edge(pending_[flushed_++]);
    }
  }

  void add_constant(const NodeId& parent, const std::string& role, const Tok& value) {
    int& seen = constant_counts_[parent + "." + role];
    NodeId id = parent + "." + role;
    if (++seen > 1) id += "." + std::to_string(seen);
    bool quoted = value.kind == TokKind::kString;
    graph_.add_node(id, AmrNode{value.text, true, quoted});
    link(reserve_edge(), parent, role, id);
    if (role == "wiki" && value.text != "-") graph_.add_wiki(parent, value.text);
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> variables_;
  std::map<std::string, int> constant_counts_;
  std::vector<AmrEdge> pending_;
  std::size_t flushed_ = 0;
  AmrGraph graph_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void write_node(const AmrGraph& g, const NodeId& id, std::set<NodeId>& defined,
                int depth, std::ostringstream& out) {
  defined.insert(id);
  out << '(' << id << " / " << g.concept_of(id);
  for (const auto& e : g.edges()) {
    bool forward = e.source == id && !e.inverted;
    bool inverse = e.target == id && e.inverted;
    if (!forward && !inverse) continue;
    const NodeId& child = forward ? e.target : e.source;
    out << '\n' << std::string(static_cast<std::size_t>(depth + 1) * 4, ' ') << ':'
        << e.label << (inverse ? "-of" : "") << ' ';
    const AmrNode& n = g.node(child);
    if (n.is_constant) {
      out << (n.quoted ? quote(n.label) : n.label);
    } else if (defined.count(child)) {
      out << child;
    } else {
      write_node(g, child, defined, depth + 1, out);
    }
  }
  out << ')';
}

}  // namespace

AmrGraph parse_penman(std::string_view text, const AlignmentRecord& align) {
  AmrGraph g = PenmanParser(text).parse();
  for (const auto& [id, tokens] : align.alignments) {
    if (!g.contains(id)) throw DanglingAlignment("alignment for unknown node '" + id + "'");
    for (std::size_t t : tokens) {
      if (align.token_count > 0 && t >= align.token_count) {
        throw DanglingAlignment("node '" + id + "' aligned to token " +
                                std::to_string(t) + " of " +
                                std::to_string(align.token_count));
      }
      g.align(id, t);
    }
  }
  for (const auto& [id, iri] : align.wiki) {
    if (!g.contains(id)) throw DanglingAlignment("wiki link for unknown node '" + id + "'");
    g.add_wiki(id, iri);
  }
  g.validate(align.token_count);
  return g;
}

std::string serialize_penman(const AmrGraph& g) {
  std::ostringstream out;
  std::set<NodeId> defined;
  write_node(g, g.root(), defined, 0, out);
  return out.str();
}

AmrPath undirected_shortest_path(const AmrGraph& g, const NodeId& a,
                                 const NodeId& b) {
  if (!g.contains(a) || !g.contains(b)) {
    throw std::invalid_argument("path endpoint is not a node: " + a + ", " + b);
  }
  if (a == b) throw std::invalid_argument("path endpoints must differ: " + a);
  const NodeId& from = std::min(a, b);
  const NodeId& to = std::max(a, b);

  std::map<NodeId, std::size_t> dist{{to, 0}};
  std::deque<NodeId> queue{to};
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (const auto& n : g.neighbours(cur)) {
      if (dist.emplace(n, dist[cur] + 1).second) queue.push_back(n);
    }
  }
  if (!dist.count(from)) throw NoPath(a + " and " + b + " are disconnected");

  std::vector<NodeId> nodes{from};
  while (nodes.back() != to) {
    std::size_t want = dist.at(nodes.back()) - 1;
    // neighbours() is sorted, so the first hit is the smallest id.
    for (const auto& n : g.neighbours(nodes.back())) {
      auto it = dist.find(n);
      if (it != dist.end() && it->second == want) {
        nodes.push_back(n);
        break;
      }
    }
  }
  AmrPath path(std::move(nodes));
  return from == a ? path : path.reversed();
}

std::vector<NodeId> name_subgraph(const AmrGraph& g, const NodeId& entity) {
  std::vector<NodeId> out;
  for (const auto& name : g.targets(entity, "name")) {
    out.push_back(name);
    for (const auto* e : g.out_edges(name)) {
      if (e->label.size() > 2 && e->label.starts_with("op") &&
          std::all_of(e->label.begin() + 2, e->label.end(),
                      [](unsigned char c) { return std::isdigit(c); })) {
        out.push_back(e->target);
      }
    }
  }
  return out;
}

TokenSet supporting_tokens(const AmrGraph& g, const AmrPath& path,
                           const Question& q) {
  TokenSet out;
  auto add = [&](const NodeId& n) {
    for (std::size_t t : g.aligned_tokens(n)) {
      if (t < q.tokens.size()) out.insert(t);
    }
  };
  for (const auto& n : path.nodes()) add(n);
  for (const NodeId* end : {&path.endpoint_a(), &path.endpoint_b()}) {
    if (!g.has_wiki(*end)) continue;
    for (const auto& n : name_subgraph(g, *end)) add(n);
  }
  return out;
}

}  // namespace amr2sparql
