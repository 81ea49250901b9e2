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

// Polynomials in the creation operators: finitely supported Fourier series
// A = sum_w a_w L_w with exact complex-rational coefficients. P_v is L_v for
// the vertex path v.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivalg/error.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/paths.hpp"
#include "quivalg/scalar.hpp"

namespace quivalg {

class AlgebraElement {
 public:
  using Terms = std::map<Path, Complex>;

  explicit AlgebraElement(const DirectedGraph& g) : graph_(&g) {}

  static AlgebraElement zero(const DirectedGraph& g) { return AlgebraElement(g); }
  static AlgebraElement monomial(const Path& w, Complex a = 1) {
    AlgebraElement r(*w.graph());
    r.add_term(w, std::move(a));
    return r;
  }
  /// P_v.
  static AlgebraElement projection(const DirectedGraph& g, VertexIndex v) {
    return monomial(Path::vertex(g, v));
  }
  /// L_e.
  static AlgebraElement creation(const DirectedGraph& g, EdgeIndex e) {
    return monomial(Path::edge(g, e));
  }
  /// sum_v P_v, the unit of the polynomial algebra of a finite graph.
  static AlgebraElement unit(const DirectedGraph& g) {
    AlgebraElement r(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) r.add_term(Path::vertex(g, v), 1);
    return r;
  }

  const DirectedGraph& graph() const { return *graph_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  /// Largest length in the support; 0 for the zero element.
  std::size_t degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
  }

  /// a_w, or 0 when w is not in the support.
  Complex coeff(const Path& w) const {
    check_graph(w.graph());
    auto it = terms_.find(w);
    return it == terms_.end() ? Complex() : it->second;
  }

  /// Adds a * L_w, dropping the entry if it cancels.
  void add_term(const Path& w, const Complex& a) {
    check_graph(w.graph());
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_graph(&o.graph());
    for (const auto& [w, a] : o.terms_) add_term(w, a);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_graph(&o.graph());
    for (const auto& [w, a] : o.terms_) add_term(w, -a);
    return *this;
  }
  AlgebraElement& operator*=(const Complex& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, a] : terms_) a *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Complex& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.graph_ == b.graph_ && a.terms_ == b.terms_;
  }

  /// "a1·w1 + a2·w2"; "0" for the zero element.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, a] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += a.is_real() || sgn(a.re()) == 0 ? a.to_string() : "(" + a.to_string() + ")";
      s += "·" + w.to_string();
    }
    return s;
  }

  void check_graph(const DirectedGraph* g) const {
    if (g != graph_) throw DomainError("algebra elements over different graphs");
  }

 private:
  const DirectedGraph* graph_;
  Terms terms_;
};

/// Product in the path algebra: L_u L_v = L_{uv} when composable, else 0.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_graph(&b.graph());
  AlgebraElement r(a.graph());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms())
      if (auto uv = compose(u, v)) r.add_term(*uv, x * y);
  return r;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

/// alpha*A + beta*B.
inline AlgebraElement add_scale(const AlgebraElement& a, const AlgebraElement& b,
                                const Complex& alpha, const Complex& beta) {
  a.check_graph(&b.graph());
  AlgebraElement r(a.graph());
  if (!alpha.is_zero())
    for (const auto& [w, c] : a.terms()) r.add_term(w, alpha * c);
  if (!beta.is_zero())
    for (const auto& [w, c] : b.terms()) r.add_term(w, beta * c);
  return r;
}

/// P_y A P_x: keeps the terms of paths from x to y.
inline AlgebraElement corner(const AlgebraElement& a, VertexIndex x, VertexIndex y) {
  a.graph().check_vertex(x);
  a.graph().check_vertex(y);
  AlgebraElement r(a.graph());
  for (const auto& [w, c] : a.terms())
    if (w.src() == x && w.dst() == y) r.add_term(w, c);
  return r;
}

/// Homogeneous component of degree m (Phi_m).
inline AlgebraElement phi(const AlgebraElement& a, std::size_t m) {
  AlgebraElement r(a.graph());
  for (const auto& [w, c] : a.terms())
    if (w.length() == m) r.add_term(w, c);
  return r;
}

inline Complex fourier_coeff(const AlgebraElement& a, const Path& w) { return a.coeff(w); }

/// Sum of |a_w| over the support (an upper bound for the operator norm).
inline double coefficient_l1(const AlgebraElement& a) {
  double s = 0;
  for (const auto& [w, c] : a.terms()) s += std::abs(c.to_double());
  return s;
}

// ---------------------------------------------------------------------------
// Serialization: [[path, re, im], ...] with rationals as "p/q" strings.

inline nlohmann::json element_to_json(const AlgebraElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : a.terms())
    out.push_back({w.to_string(), c.re().get_str(), c.im().get_str()});
  return out;
}

inline AlgebraElement element_from_json(const DirectedGraph& g, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("element", "expected an array of [path, re, im]");
  AlgebraElement r(g);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& t = doc[i];
    const std::string where = "element[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() < 2 || t.size() > 3)
      throw ParseError(where, "expected [path, re] or [path, re, im]");
    for (const auto& part : t)
      if (!part.is_string()) throw ParseError(where, "fields must be strings");
    const Path w = parse_path(g, t[0].get<std::string>());
    Rational re = Complex::parse_rational(t[1].get<std::string>());
    Rational im = t.size() == 3 ? Complex::parse_rational(t[2].get<std::string>()) : Rational(0);
    r.add_term(w, Complex(std::move(re), std::move(im)));
  }
  return r;
}

}  // namespace quivalg
