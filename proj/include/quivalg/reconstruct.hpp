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

// Rebuilds a graph from the representation theory of its tensor algebra:
// vertices from the components of the character space, loop counts from the
// dimensions of the character balls, and edge counts from the number of
// generators of the radical of each two-vertex quotient.
//
// The pipeline only talks to an AlgebraProbe, which exposes projections,
// characters, nest representations and polynomial arithmetic. It has no
// accessor for the underlying edge list.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivalg/algebra.hpp"
#include "quivalg/characters.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/isomorphism.hpp"
#include "quivalg/nestrep.hpp"
#include "quivalg/random.hpp"

namespace quivalg {

/// Opaque handle for a connected component of the character space.
struct ComponentHandle {
  std::size_t id;
  friend bool operator==(ComponentHandle, ComponentHandle) = default;
};

class AlgebraProbe {
 public:
  AlgebraProbe(const DirectedGraph& g, std::uint64_t seed, std::size_t random_probes = 8)
      : graph_(&g), rng_(seed), random_probes_(random_probes) {}

  /// One component per vertex projection: the characters sending it to 1.
  std::vector<ComponentHandle> components() {
    log("characters.component_of");
    std::vector<ComponentHandle> out;
    for (VertexIndex v = 0; v < graph_->vertex_count(); ++v) {
      const Character rho = character(*graph_, v, std::vector<Complex>(quivalg::ball_dimension(*graph_, v)));
      out.push_back({component_of(rho)});
    }
    return out;
  }

  /// Name of the vertex projection a component is attached to (reporting only).
  std::string origin(ComponentHandle c) const { return graph_->vertex_id(c.id); }

  /// Dimension of the parameter ball of the component.
  std::size_t ball_dimension(ComponentHandle c) {
    log("characters.ball_dimension");
    return quivalg::ball_dimension(*graph_, c.id);
  }

  /// Number of nest representations whose diagonal characters lie in (a, b).
  std::size_t rep_family_size(ComponentHandle a, ComponentHandle b) {
    log("nestrep.rep_family");
    return rep_family(*graph_, a.id, b.id).size();
  }

  /// The generators L_e of the algebra, as elements.
  std::vector<AlgebraElement> generators() {
    log("algebra.generators");
    std::vector<AlgebraElement> out;
    for (EdgeIndex e = 0; e < graph_->edge_count(); ++e)
      out.push_back(AlgebraElement::creation(*graph_, e));
    return out;
  }

  /// Seeded random polynomials built from the generators.
  std::vector<AlgebraElement> random_probes(const std::vector<AlgebraElement>& generators) {
    log("algebra.random_polynomials");
    return random_radical_probes(*graph_, generators, rng_, random_probes_);
  }

  /// Minimal number of generators of the radical of the (a, b) quotient,
  /// measured as the degree-one span of radical corners of the probes.
  RadicalSpan radical_span(const std::vector<AlgebraElement>& probes, ComponentHandle a,
                           ComponentHandle b) {
    log("nestrep.radical_span");
    return quivalg::radical_span(probes, rep_family(*graph_, a.id, b.id), a.id, b.id);
  }

  const std::vector<std::string>& trace() const { return trace_; }

  /// Modules a probe call may come from.
  static bool allowed_call(const std::string& call) {
    return call.starts_with("characters.") || call.starts_with("nestrep.") ||
           call.starts_with("algebra.");
  }

 private:
  void log(std::string call) { trace_.push_back(std::move(call)); }

  const DirectedGraph* graph_;
  SplitMix64 rng_;
  std::size_t random_probes_;
  std::vector<std::string> trace_;
};

struct ReconstructedGraph {
  struct Component {
    std::string origin;  // vertex whose projection defines the component
    std::size_t ball_dimension = 0;
  };
  std::vector<Component> components;
  /// counts[i][j]: edges from component i to j (i != j); diagonal is zero.
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::string> provenance;
  std::vector<std::string> trace;

  std::size_t loop_count(std::size_t i) const { return components.at(i).ball_dimension; }
};

inline ReconstructedGraph reconstruct(AlgebraProbe& probe) {
  ReconstructedGraph out;
  const auto comps = probe.components();
  for (ComponentHandle c : comps) {
    const std::size_t dim = probe.ball_dimension(c);
    out.components.push_back({probe.origin(c), dim});
    out.provenance.push_back("loops(" + probe.origin(c) + ") = ball dimension " +
                             std::to_string(dim));
  }
  out.counts.assign(comps.size(), std::vector<std::size_t>(comps.size(), 0));
  const auto gens = probe.generators();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j) continue;
      if (probe.rep_family_size(comps[i], comps[j]) == 0) continue;
      std::vector<AlgebraElement> probes = gens;
      for (auto& p : probe.random_probes(gens)) probes.push_back(std::move(p));
      const RadicalSpan span = probe.radical_span(probes, comps[i], comps[j]);
      out.counts[i][j] = span.dimension();
      out.provenance.push_back("edges(" + probe.origin(comps[i]) + "->" + probe.origin(comps[j]) +
                               ") = radical span dimension " + std::to_string(span.dimension()) +
                               " from " + std::to_string(span.probes_radical) + "/" +
                               std::to_string(span.probes_offered) + " radical probes");
    }
  }
  out.trace = probe.trace();
  return out;
}

inline ReconstructedGraph reconstruct(const DirectedGraph& g, std::uint64_t seed = 0) {
  AlgebraProbe probe(g, seed);
  return reconstruct(probe);
}

/// Concrete graph with fresh labels c0, c1, ...; loops "c<i>_loop<k>",
/// parallel edges "c<i>_c<j>_<k>".
inline DirectedGraph realize(const ReconstructedGraph& r) {
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < r.components.size(); ++i) vertices.push_back("c" + std::to_string(i));
  std::vector<DirectedGraph::EdgeSpec> edges;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    for (std::size_t k = 0; k < r.loop_count(i); ++k)
      edges.push_back({vertices[i] + "_loop" + std::to_string(k), vertices[i], vertices[i]});
    for (std::size_t j = 0; j < r.components.size(); ++j)
      for (std::size_t k = 0; i != j && k < r.counts[i][j]; ++k)
        edges.push_back({vertices[i] + "_" + vertices[j] + "_" + std::to_string(k), vertices[i],
                         vertices[j]});
  }
  return DirectedGraph(std::move(vertices), edges);
}

/// Deterministic relabelling and re-listing of vertices and edges, with the
/// witness original -> scrambled.
inline std::pair<DirectedGraph, VertexMap> scramble(const DirectedGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::size_t> vperm(g.vertex_count()), eperm(g.edge_count());
  for (std::size_t i = 0; i < vperm.size(); ++i) vperm[i] = i;
  for (std::size_t i = 0; i < eperm.size(); ++i) eperm[i] = i;
  shuffle(vperm, rng);
  shuffle(eperm, rng);
  // vperm[p] is the original vertex listed at position p; its new name is "u<p>".
  std::vector<std::string> name(g.vertex_count());
  std::vector<std::string> vertices;
  VertexMap witness;
  for (std::size_t p = 0; p < vperm.size(); ++p) {
    name[vperm[p]] = "u" + std::to_string(p);
    vertices.push_back(name[vperm[p]]);
  }
  std::vector<DirectedGraph::EdgeSpec> edges;
  std::vector<std::string> edge_name(g.edge_count());
  for (std::size_t p = 0; p < eperm.size(); ++p) {
    const Edge& e = g.edge(eperm[p]);
    edge_name[eperm[p]] = "a" + std::to_string(p);
    edges.push_back({edge_name[eperm[p]], name[e.src], name[e.dst]});
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    witness.vertices.emplace_back(g.vertex_id(v), name[v]);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) witness.edges.emplace_back(g.edge(e).id, edge_name[e]);
  return {DirectedGraph(std::move(vertices), edges), std::move(witness)};
}

struct RoundtripReport {
  struct Stage {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<Stage> stages;
  std::optional<VertexMap> witness;  // realize(reconstruct(g)) -> g
  ReconstructedGraph reconstruction;
  bool passed() const {
    for (const auto& s : stages)
      if (!s.passed) return false;
    return !stages.empty();
  }
};

/// True when the two reconstructions are not isomorphic as graphs.
inline bool invariants_differ(const ReconstructedGraph& a, const ReconstructedGraph& b) {
  return !are_isomorphic(realize(a), realize(b)).has_value();
}

inline RoundtripReport verify_roundtrip(const DirectedGraph& g, std::uint64_t seed = 0,
                                        const std::vector<std::uint64_t>& scramble_seeds = {1, 2, 3,
                                                                                           4, 5}) {
  RoundtripReport report;
  report.reconstruction = reconstruct(g, seed);
  const DirectedGraph rebuilt = realize(report.reconstruction);
  report.witness = are_isomorphic(rebuilt, g);
  report.stages.push_back({"realize(reconstruct(g)) ~ g", report.witness.has_value(),
                           report.witness ? "witness found" : "no isomorphism"});

  bool clean = true;
  std::string bad;
  for (const auto& call : report.reconstruction.trace)
    if (!AlgebraProbe::allowed_call(call)) {
      clean = false;
      bad = call;
    }
  report.stages.push_back({"probe-only access", clean, clean ? "" : "disallowed call " + bad});

  for (std::uint64_t s : scramble_seeds) {
    auto [scrambled, sigma] = scramble(g, s);
    const bool sigma_ok = check_witness(g, scrambled, sigma);
    const DirectedGraph other = realize(reconstruct(scrambled, seed));
    const bool iso = are_isomorphic(other, rebuilt).has_value();
    report.stages.push_back({"scramble seed " + std::to_string(s), sigma_ok && iso,
                             !sigma_ok ? "scramble witness invalid"
                                       : (iso ? "" : "reconstructions differ")});
  }
  return report;
}

inline nlohmann::json reconstruction_to_json(const ReconstructedGraph& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components)
    comps.push_back({{"origin", c.origin}, {"ball_dim", c.ball_dimension}});
  return {{"components", comps}, {"counts", r.counts}, {"provenance", r.provenance}};
}

/// DOT of the realized reconstruction (fresh labels c0, c1, ...).
inline std::string emit_dot(const ReconstructedGraph& r) { return emit_dot(realize(r), "R"); }

}  // namespace quivalg
