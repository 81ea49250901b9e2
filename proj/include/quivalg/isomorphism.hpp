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

// Brute-force multigraph isomorphism oracle.
//
// Backtracks over vertex bijections in document order, pruning on
// (loop count, out-degree, in-degree) and on edge multiplicities against
// already-placed vertices. Exponential in the worst case; intended for the
// small graphs the reconstruction checks run on.

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "quivalg/graph.hpp"

namespace quivalg {

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const DirectedGraph& a, const DirectedGraph& b) : a_(a), b_(b) {
    mult_a_ = multiplicities(a);
    mult_b_ = multiplicities(b);
    sig_a_ = signatures(a, mult_a_);
    sig_b_ = signatures(b, mult_b_);
  }

  std::optional<std::vector<VertexIndex>> run() {
    const std::size_t n = a_.vertex_count();
    if (n != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return std::nullopt;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    assignment_.assign(n, kUnassigned);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return assignment_;
  }

 private:
  using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;
  static constexpr VertexIndex kUnassigned = static_cast<VertexIndex>(-1);

  static std::vector<std::vector<std::size_t>> multiplicities(const DirectedGraph& g) {
    std::vector<std::vector<std::size_t>> m(g.vertex_count(),
                                            std::vector<std::size_t>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) ++m[e.src][e.dst];
    return m;
  }

  static std::vector<Signature> signatures(const DirectedGraph& g,
                                           const std::vector<std::vector<std::size_t>>& m) {
    std::vector<Signature> sig;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      sig.emplace_back(m[v][v], g.out_edges(v).size(), g.in_edges(v).size());
    return sig;
  }

  bool consistent(VertexIndex u, VertexIndex image, VertexIndex placed_upto) const {
    if (sig_a_[u] != sig_b_[image]) return false;
    for (VertexIndex w = 0; w < placed_upto; ++w) {
      const VertexIndex wi = assignment_[w];
      if (mult_a_[u][w] != mult_b_[image][wi]) return false;
      if (mult_a_[w][u] != mult_b_[wi][image]) return false;
    }
    return true;
  }

  bool extend(VertexIndex u) {
    if (u == a_.vertex_count()) return true;
    for (VertexIndex cand = 0; cand < b_.vertex_count(); ++cand) {
      if (used_[cand] || !consistent(u, cand, u)) continue;
      assignment_[u] = cand;
      used_[cand] = true;
      if (extend(u + 1)) return true;
      used_[cand] = false;
      assignment_[u] = kUnassigned;
    }
    return false;
  }

  const DirectedGraph& a_;
  const DirectedGraph& b_;
  std::vector<std::vector<std::size_t>> mult_a_, mult_b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<VertexIndex> assignment_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Returns a witness iff g1 and g2 are isomorphic as multigraphs.
/// Parallel edges between a pair are matched in declaration order.
inline std::optional<VertexMap> are_isomorphic(const DirectedGraph& g1, const DirectedGraph& g2) {
  auto assignment = detail::IsoSearch(g1, g2).run();
  if (!assignment) return std::nullopt;

  VertexMap witness;
  for (VertexIndex v = 0; v < g1.vertex_count(); ++v)
    witness.vertices.emplace_back(g1.vertex_id(v), g2.vertex_id((*assignment)[v]));

  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> pool;
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e)
    pool[{g2.edge(e).src, g2.edge(e).dst}].push_back(e);
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> taken;
  for (const auto& e : g1.edges()) {
    const std::pair key{(*assignment)[e.src], (*assignment)[e.dst]};
    const EdgeIndex image = pool.at(key).at(taken[key]++);
    witness.edges.emplace_back(e.id, g2.edge(image).id);
  }
  return witness;
}

/// True iff `m` is a valid isomorphism g1 -> g2.
inline bool check_witness(const DirectedGraph& g1, const DirectedGraph& g2, const VertexMap& m) {
  if (m.vertices.size() != g1.vertex_count() || m.vertices.size() != g2.vertex_count())
    return false;
  if (m.edges.size() != g1.edge_count() || m.edges.size() != g2.edge_count()) return false;
  std::map<std::string, std::string> vmap;
  std::vector<bool> hit_v(g2.vertex_count(), false), hit_e(g2.edge_count(), false);
  for (const auto& [from, to] : m.vertices) {
    auto a = g1.find_vertex(from);
    auto b = g2.find_vertex(to);
    if (!a || !b || hit_v[*b] || vmap.contains(from)) return false;
    hit_v[*b] = true;
    vmap[from] = to;
  }
  for (const auto& [from, to] : m.edges) {
    auto a = g1.find_edge(from);
    auto b = g2.find_edge(to);
    if (!a || !b || hit_e[*b]) return false;
    hit_e[*b] = true;
    const Edge& ea = g1.edge(*a);
    const Edge& eb = g2.edge(*b);
    if (vmap[g1.vertex_id(ea.src)] != g2.vertex_id(eb.src)) return false;
    if (vmap[g1.vertex_id(ea.dst)] != g2.vertex_id(eb.dst)) return false;
  }
  return true;
}

/// Inverse witness g2 -> g1.
inline VertexMap invert(const VertexMap& m) {
  VertexMap inv;
  for (const auto& [a, b] : m.vertices) inv.vertices.emplace_back(b, a);
  for (const auto& [a, b] : m.edges) inv.edges.emplace_back(b, a);
  return inv;
}

inline nlohmann::json vertex_map_to_json(const VertexMap& m) {
  // Arrays of pairs keep document order; objects would sort keys.
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& [a, b] : m.vertices) vs.push_back({a, b});
  for (const auto& [a, b] : m.edges) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

}  // namespace quivalg
