// Copyright 2026 The quivalg Authors
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

#pragma once

// Finite directed multigraphs: the data model every other module builds on.
//
// Vertices and edges are addressed by dense indices in document order; the
// opaque string ids are kept for I/O. Parallel edges and loops are allowed.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivalg/error.hpp"

namespace quivalg {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string id;
  VertexIndex src;
  VertexIndex dst;
};

/// Immutable finite directed multigraph.
class DirectedGraph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  DirectedGraph() = default;

  /// Validates uniqueness of ids and that every endpoint is declared.
  /// Throws ParseError naming the offending entry.
  DirectedGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
      : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!vertex_lookup_.emplace(vertices_[i], i).second)
        throw ParseError("vertices[" + std::to_string(i) + "]",
                         "duplicate vertex id '" + vertices_[i] + "'");
    }
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& spec = edges[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (vertex_lookup_.contains(spec.id) || edge_lookup_.contains(spec.id))
        throw ParseError(where, "duplicate id '" + spec.id + "'");
      auto s = vertex_lookup_.find(spec.src);
      if (s == vertex_lookup_.end())
        throw ParseError(where, "dangling source '" + spec.src + "'");
      auto d = vertex_lookup_.find(spec.dst);
      if (d == vertex_lookup_.end())
        throw ParseError(where, "dangling range '" + spec.dst + "'");
      edge_lookup_.emplace(spec.id, i);
      edges_.push_back(Edge{spec.id, s->second, d->second});
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
      out_[edges_[e].src].push_back(e);
      in_[edges_[e].dst].push_back(e);
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Edges whose source is v, in declaration order.
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }
  /// Edges whose range is v, in declaration order.
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<EdgeIndex> find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw DomainError("unknown vertex '" + std::string(id) + "'");
  }
  EdgeIndex edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw DomainError("unknown edge '" + std::string(id) + "'");
  }

  void check_vertex(VertexIndex v) const {
    if (v >= vertices_.size())
      throw DomainError("unknown vertex index " + std::to_string(v));
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

/// Witness of an isomorphism: vertex and edge bijections keyed by id.
struct VertexMap {
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// ---------------------------------------------------------------------------
// Structural queries

/// Loops at v (src = dst = v), declaration order.
inline std::vector<EdgeIndex> loop_edges_at(const DirectedGraph& g, VertexIndex v) {
  g.check_vertex(v);
  std::vector<EdgeIndex> loops;
  for (EdgeIndex e : g.out_edges(v))
    if (g.edge(e).dst == v) loops.push_back(e);
  return loops;
}

/// Edges with source u and range v, declaration order.
inline std::vector<EdgeIndex> edges_between(const DirectedGraph& g, VertexIndex u,
                                            VertexIndex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<EdgeIndex> result;
  for (EdgeIndex e : g.out_edges(u))
    if (g.edge(e).dst == v) result.push_back(e);
  return result;
}

struct VertexClasses {
  std::vector<VertexIndex> sinks;    // emit no edges
  std::vector<VertexIndex> sources;  // receive no edges
};

inline VertexClasses classify_vertices(const DirectedGraph& g) {
  VertexClasses c;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty()) c.sinks.push_back(v);
    if (g.in_edges(v).empty()) c.sources.push_back(v);
  }
  return c;
}

// ---------------------------------------------------------------------------
// I/O

/// Reads {"vertices": [ids...], "edges": [[id, src, dst]...]}.
inline DirectedGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("", "graph document must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("vertices", "missing or non-array 'vertices'");
  std::vector<std::string> vertices;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string())
      throw ParseError("vertices[" + std::to_string(i) + "]", "vertex id must be a string");
    vertices.push_back(vs[i].get<std::string>());
  }
  std::vector<DirectedGraph::EdgeSpec> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw ParseError("edges", "'edges' must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& e = es[i];
      if (!e.is_array() || e.size() != 3)
        throw ParseError(where, "edge must be [id, src, dst]");
      for (const auto& part : e)
        if (!part.is_string()) throw ParseError(where, "edge fields must be strings");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                       e[2].get<std::string>()});
    }
  }
  for (const auto& [key, _] : doc.items())
    if (key != "vertices" && key != "edges")
      throw ParseError(key, "unknown key '" + key + "'");
  return DirectedGraph(std::move(vertices), edges);
}

/// Parses graph text. Syntax errors report line:column.
inline DirectedGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < ex.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ":" + std::to_string(col),
                     "malformed JSON");
  }
  return graph_from_json(doc);
}

inline nlohmann::json graph_to_json(const DirectedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.dst)});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// DOT digraph, nodes then edges in document order, edges labelled by id.
inline std::string emit_dot(const DirectedGraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : g.vertices()) os << "  " << detail::dot_quote(v) << ";\n";
  for (const auto& e : g.edges())
    os << "  " << detail::dot_quote(g.vertex_id(e.src)) << " -> "
       << detail::dot_quote(g.vertex_id(e.dst)) << " [label=" << detail::dot_quote(e.id)
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace quivalg
