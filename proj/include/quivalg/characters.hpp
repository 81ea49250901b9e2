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

// Characters of the tensor algebra. Each one is supported at a single vertex
// x and is determined by its values lambda_i on the loop edges at x; every
// other path contributes 0.

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/error.hpp"
#include "quivalg/graph.hpp"

namespace quivalg {

class Character {
 public:
  const DirectedGraph& graph() const { return *graph_; }
  VertexIndex base() const { return base_; }
  /// Indexed like loop_edges_at(graph(), base()).
  const std::vector<Complex>& lambda() const { return lambda_; }
  const std::vector<EdgeIndex>& loop_edges() const { return loops_; }
  /// ||lambda|| = 1: a point of the closed ball only.
  bool on_boundary() const { return boundary_; }
  /// ||lambda||^2, exact.
  const Rational& radius_squared() const { return radius2_; }

  std::vector<std::complex<double>> lambda_numeric() const {
    std::vector<std::complex<double>> out;
    for (const auto& z : lambda_) out.push_back(z.to_double());
    return out;
  }

  /// lambda value of a loop edge at the base, 0 for any other edge.
  Complex edge_value(EdgeIndex e) const {
    auto it = by_edge_.find(e);
    return it == by_edge_.end() ? Complex() : lambda_[it->second];
  }

 private:
  friend Character character(const DirectedGraph&, VertexIndex, std::vector<Complex>);
  Character() = default;

  const DirectedGraph* graph_ = nullptr;
  VertexIndex base_ = 0;
  std::vector<Complex> lambda_;
  std::vector<EdgeIndex> loops_;
  std::map<EdgeIndex, std::size_t> by_edge_;
  Rational radius2_;
  bool boundary_ = false;
};

/// rho_{lambda,x}; requires ||lambda|| <= 1 and one entry per loop edge at x.
inline Character character(const DirectedGraph& g, VertexIndex x, std::vector<Complex> lambda) {
  auto loops = loop_edges_at(g, x);
  if (lambda.size() != loops.size())
    throw DomainError("character at '" + g.vertex_id(x) + "' needs " +
                      std::to_string(loops.size()) + " parameters, got " +
                      std::to_string(lambda.size()));
  Rational r2 = 0;
  for (const auto& z : lambda) r2 += z.norm2();
  if (r2 > 1) throw DomainError("character parameter outside the closed unit ball");
  Character c;
  c.graph_ = &g;
  c.base_ = x;
  c.lambda_ = std::move(lambda);
  c.loops_ = std::move(loops);
  for (std::size_t i = 0; i < c.loops_.size(); ++i) c.by_edge_.emplace(c.loops_[i], i);
  c.radius2_ = r2;
  c.boundary_ = r2 == 1;
  return c;
}

/// rho(L_w): 1 at the base vertex, prod lambda along a word in the loop
/// edges at the base, 0 otherwise.
inline Complex eval_character(const Character& rho, const Path& w) {
  if (w.graph() != &rho.graph()) throw DomainError("character and path over different graphs");
  if (w.src() != rho.base() || w.dst() != rho.base()) return Complex();
  Complex value(1);
  for (EdgeIndex e : w.word()) {
    Complex z = rho.edge_value(e);
    if (z.is_zero()) return Complex();
    value *= z;
  }
  return value;
}

inline Complex eval_character(const Character& rho, const AlgebraElement& a) {
  if (&a.graph() != &rho.graph()) throw DomainError("character and element over different graphs");
  Complex sum;
  for (const auto& [w, c] : a.terms()) {
    Complex v = eval_character(rho, w);
    if (!v.is_zero()) sum += c * v;
  }
  return sum;
}

/// The vertex x with rho(P_x) = 1. Checks that exactly one projection is
/// sent to 1 and the rest to 0.
inline VertexIndex component_of(const Character& rho) {
  const DirectedGraph& g = rho.graph();
  std::size_t ones = 0;
  VertexIndex found = rho.base();
  for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
    const Complex v = eval_character(rho, Path::vertex(g, y));
    if (v == Complex(1)) {
      ++ones;
      found = y;
    } else if (!v.is_zero()) {
      throw Error("character sends P_" + g.vertex_id(y) + " to " + v.to_string());
    }
  }
  if (ones != 1 || found != rho.base()) throw Error("character is not supported at one vertex");
  return found;
}

/// Dimension of the parameter ball of characters supported at x.
inline std::size_t ball_dimension(const DirectedGraph& g, VertexIndex x) {
  return loop_edges_at(g, x).size();
}

}  // namespace quivalg
