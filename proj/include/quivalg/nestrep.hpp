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

// Two-dimensional nest representations and edge counting through the radical.
//
// For an edge e: x1 -> x2 (x1 != x2), pi_e compresses the algebra to
// span{xi_e, xi_x1}. In the basis (xi_e, xi_x1)
//
//     pi_e(A) = [[a_x2, a_e],
//                [0,    a_x1]],
//
// which is upper triangular; A is radical modulo the joint kernel of the
// family for (x, y) exactly when both diagonal entries vanish for every
// member.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/characters.hpp"
#include "quivalg/error.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/random.hpp"

namespace quivalg {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline bool is_zero(const Matrix2& m) {
  return m[0][0].is_zero() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_zero();
}

struct NestRep {
  const DirectedGraph* graph = nullptr;
  EdgeIndex edge = 0;
  VertexIndex from = 0;  // x1 = s(e)
  VertexIndex to = 0;    // x2 = r(e)
};

inline NestRep nest_rep(const DirectedGraph& g, EdgeIndex e) {
  const Edge& edge = g.edge(e);
  if (edge.src == edge.dst)
    throw DomainError("nest_rep: '" + edge.id + "' is a loop");
  return NestRep{&g, e, edge.src, edge.dst};
}

inline Matrix2 eval_nest(const NestRep& pi, const AlgebraElement& a) {
  if (&a.graph() != pi.graph) throw DomainError("nest rep and element over different graphs");
  const DirectedGraph& g = *pi.graph;
  Matrix2 m;
  m[0][0] = a.coeff(Path::vertex(g, pi.to));
  m[0][1] = a.coeff(Path::edge(g, pi.edge));
  m[1][1] = a.coeff(Path::vertex(g, pi.from));
  return m;
}

/// One nest representation per edge x -> y.
inline std::vector<NestRep> rep_family(const DirectedGraph& g, VertexIndex x, VertexIndex y) {
  if (x == y) throw DomainError("rep_family needs distinct vertices");
  std::vector<NestRep> family;
  for (EdgeIndex e : edges_between(g, x, y)) family.push_back(nest_rep(g, e));
  return family;
}

/// pi(A)^2 = 0 for every member of the (x, y) family and A is killed by the
/// lambda = 0 characters at x and y.
inline bool in_radical(const AlgebraElement& a, const std::vector<NestRep>& family,
                       VertexIndex x, VertexIndex y) {
  const DirectedGraph& g = a.graph();
  for (const NestRep& pi : family) {
    const Matrix2 m = eval_nest(pi, a);
    if (!is_zero(m * m)) return false;
  }
  const Character rx = character(g, x, std::vector<Complex>(ball_dimension(g, x)));
  const Character ry = character(g, y, std::vector<Complex>(ball_dimension(g, y)));
  return eval_character(rx, a).is_zero() && eval_character(ry, a).is_zero();
}

inline bool in_radical(const AlgebraElement& a, VertexIndex x, VertexIndex y) {
  return in_radical(a, rep_family(a.graph(), x, y), x, y);
}

// ---------------------------------------------------------------------------
// Span of the degree-one parts of radical corners

struct RadicalSpan {
  std::size_t probes_offered = 0;
  std::size_t probes_radical = 0;
  /// Reduced row-echelon basis of span{Phi_1(P_y A P_x)}.
  std::vector<AlgebraElement> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Exact rank of span{ Phi_1(corner(A, x, y)) : A in probes, corner radical }.
inline RadicalSpan radical_span(const std::vector<AlgebraElement>& probes,
                                const std::vector<NestRep>& family, VertexIndex x,
                                VertexIndex y) {
  RadicalSpan out;
  std::vector<std::map<Path, Complex>> rows;  // echelon rows keyed by path
  std::vector<Path> pivots;
  for (const AlgebraElement& probe : probes) {
    ++out.probes_offered;
    const AlgebraElement c = corner(probe, x, y);
    if (!in_radical(c, family, x, y)) continue;
    ++out.probes_radical;
    std::map<Path, Complex> row;
    const AlgebraElement linear = phi(c, 1);
    for (const auto& [w, a] : linear.terms()) row.emplace(w, a);
    // Reduce against existing rows.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = row.find(pivots[r]);
      if (it == row.end()) continue;
      const Complex f = it->second;
      for (const auto& [w, a] : rows[r]) {
        Complex& slot = row[w];
        slot -= f * a;
        if (slot.is_zero()) row.erase(w);
      }
    }
    if (row.empty()) continue;
    const Path pivot = row.begin()->first;
    const Complex scale = Complex(1) / row.begin()->second;
    for (auto& [w, a] : row) a *= scale;
    // Keep the basis fully reduced.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = rows[r].find(pivot);
      if (it == rows[r].end()) continue;
      const Complex f = it->second;
      for (const auto& [w, a] : row) {
        Complex& slot = rows[r][w];
        slot -= f * a;
        if (slot.is_zero()) rows[r].erase(w);
      }
    }
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
  }
  // Order rows by pivot for a canonical basis.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  for (std::size_t i : order) {
    AlgebraElement e(*pivots[i].graph());
    for (const auto& [w, a] : rows[i]) e.add_term(w, a);
    out.basis.push_back(std::move(e));
  }
  return out;
}

/// Radical probes for (x, y): P_y B G C P_x style products of random
/// polynomials with each generator, plus random polynomials themselves.
inline std::vector<AlgebraElement> random_radical_probes(const DirectedGraph& g,
                                                         const std::vector<AlgebraElement>& generators,
                                                         SplitMix64& rng, std::size_t count) {
  std::vector<AlgebraElement> probes;
  for (std::size_t i = 0; i < count; ++i) {
    AlgebraElement b = random_polynomial(g, rng, 4, 1);
    b += AlgebraElement::unit(g);
    AlgebraElement c = random_polynomial(g, rng, 4, 1);
    c += AlgebraElement::unit(g);
    if (generators.empty()) {
      probes.push_back(random_polynomial(g, rng, 8, 3));
      continue;
    }
    const AlgebraElement& gen = generators[rng.below(generators.size())];
    probes.push_back(b * gen * c + random_polynomial(g, rng, 3, 3));
  }
  return probes;
}

struct EdgeCount {
  VertexIndex from = 0;
  VertexIndex to = 0;
  std::size_t family_size = 0;
  std::size_t count = 0;   // span dimension from the probes
  std::size_t direct = 0;  // |edges_between(from, to)|
  std::uint64_t seed = 0;
  RadicalSpan span;
  bool matches() const { return count == direct; }
};

/// Number of edges x -> y recovered as the dimension of the degree-one span
/// of radical corners. Probes: L_e for e: x -> y and `random_probes` seeded
/// random radical polynomials of degree <= 3.
inline EdgeCount edge_count_via_radical(const DirectedGraph& g, VertexIndex x, VertexIndex y,
                                        std::uint64_t seed = 0, std::size_t random_probes = 8) {
  EdgeCount out;
  out.from = x;
  out.to = y;
  out.seed = seed;
  const auto family = rep_family(g, x, y);
  out.family_size = family.size();
  std::vector<AlgebraElement> probes;
  for (EdgeIndex e : edges_between(g, x, y)) probes.push_back(AlgebraElement::creation(g, e));
  std::vector<AlgebraElement> generators;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    generators.push_back(AlgebraElement::creation(g, e));
  SplitMix64 rng(seed);
  for (auto& p : random_radical_probes(g, generators, rng, random_probes))
    probes.push_back(std::move(p));
  out.span = radical_span(probes, family, x, y);
  out.count = out.span.dimension();
  out.direct = edges_between(g, x, y).size();
  return out;
}

}  // namespace quivalg
