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

// Truncated Fock representation: the creation operators L_e and vertex
// projections P_v as sparse 0/1 matrices on span{xi_w : |w| <= k}.
// Creation past level k maps to 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/error.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/paths.hpp"
#include "quivalg/sparse.hpp"

namespace quivalg {

class TruncatedFock {
 public:
  TruncatedFock(const DirectedGraph& g, std::size_t level)
      : graph_(&g), level_(level), table_(g, level) {
    if (level < 1) throw DomainError("truncation level must be at least 1");
    const std::size_t n = table_.size();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) creation_.emplace_back(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& child : table_.children(j)) creation_[child.edge].add(child.index, j, 1);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) projection_.emplace_back(n, n);
    for (std::size_t j = 0; j < n; ++j) projection_[table_[j].dst()].add(j, j, 1);
  }

  const DirectedGraph& graph() const { return *graph_; }
  std::size_t level() const { return level_; }
  std::size_t dimension() const { return table_.size(); }
  const PathTable& basis() const { return table_; }

  const IntMatrix& creation(EdgeIndex e) const { return creation_.at(e); }
  const IntMatrix& projection(VertexIndex v) const { return projection_.at(v); }

  /// Copy with one creation matrix replaced. Used to inject faults in tests.
  TruncatedFock with_creation(EdgeIndex e, IntMatrix m) const {
    TruncatedFock copy = *this;
    copy.creation_.at(e) = std::move(m);
    return copy;
  }

  /// Basis index reached from column j by L_w, or nullopt if L_w xi_j = 0.
  /// Uses the stored generator matrices, so injected faults propagate.
  std::optional<std::size_t> apply_path(const Path& w, std::size_t j) const {
    if (w.is_vertex()) {
      if (table_[j].dst() != w.src()) return std::nullopt;
      return j;
    }
    std::size_t cur = j;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
      auto col = creation_[*it].column(cur);
      if (col.empty()) return std::nullopt;
      cur = col.front().first;
    }
    return cur;
  }

 private:
  const DirectedGraph* graph_;
  std::size_t level_;
  PathTable table_;
  std::vector<IntMatrix> creation_;
  std::vector<IntMatrix> projection_;
};

/// Copy of f with the first stored entry of L_e removed (a deliberately
/// broken generator for self-tests of the relation check).
inline TruncatedFock drop_generator_entry(const TruncatedFock& f, EdgeIndex e) {
  IntMatrix m = f.creation(e);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto col = m.column(j);
    if (col.empty()) continue;
    m.add(col.front().first, j, -col.front().second);
    break;
  }
  return f.with_creation(e, std::move(m));
}

inline TruncatedFock build_truncated_rep(const DirectedGraph& g, std::size_t k) {
  return TruncatedFock(g, k);
}

/// Matrix of A = sum a_w L_w on the truncated space.
inline ExactMatrix represent(const AlgebraElement& a, const TruncatedFock& f) {
  if (&a.graph() != &f.graph()) throw DomainError("element and representation over different graphs");
  if (a.degree() > f.level())
    throw DomainError("element degree " + std::to_string(a.degree()) + " exceeds level " +
                      std::to_string(f.level()));
  const std::size_t n = f.dimension();
  ExactMatrix m(n, n);
  for (const auto& [w, c] : a.terms())
    for (std::size_t j = 0; j < n; ++j)
      if (auto i = f.apply_path(w, j)) m.add(*i, j, c);
  return m;
}

/// Floating-point copy of represent().
inline DoubleMatrix represent_numeric(const AlgebraElement& a, const TruncatedFock& f) {
  return represent(a, f).map<std::complex<double>>([](const Complex& c) { return c.to_double(); });
}

// ---------------------------------------------------------------------------
// Relation checks

struct RelationCheck {
  int relation = 0;         // 1..4
  bool passed = true;
  std::size_t max_level = 0;  // checked on columns xi_w with |w| <= max_level
  std::string detail;       // which operator identity failed
  std::optional<std::string> counterexample;  // basis vector xi_w, as the path w
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

namespace detail {

/// Exact positive-semidefiniteness of a symmetric integer matrix.
/// Returns the first offending basis index, or nullopt when PSD.
inline std::optional<std::size_t> psd_violation(const IntMatrix& d) {
  const std::size_t n = d.cols();
  std::vector<bool> coupled(n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : d.column(j))
      if (i != j) coupled[i] = coupled[j] = true;
  std::vector<std::size_t> block;
  for (std::size_t j = 0; j < n; ++j) {
    if (!coupled[j]) {
      if (d.at(j, j) < 0) return j;
    } else {
      block.push_back(j);
    }
  }
  if (block.empty()) return std::nullopt;
  // Symmetric elimination over the rationals on the coupled block.
  const std::size_t b = block.size();
  std::vector<std::vector<Rational>> m(b, std::vector<Rational>(b));
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) m[r][c] = d.at(block[r], block[c]);
  for (std::size_t p = 0; p < b; ++p) {
    if (sgn(m[p][p]) < 0) return block[p];
    if (sgn(m[p][p]) == 0) {
      for (std::size_t c = p + 1; c < b; ++c)
        if (sgn(m[p][c]) != 0) return block[p];
      continue;
    }
    for (std::size_t r = p + 1; r < b; ++r) {
      if (sgn(m[r][p]) == 0) continue;
      const Rational f = m[r][p] / m[p][p];
      for (std::size_t c = p; c < b; ++c) m[r][c] -= f * m[p][c];
    }
  }
  return std::nullopt;
}

/// First column j (with |w_j| <= max_level) where a and b differ.
inline std::optional<std::size_t> first_difference(const IntMatrix& a, const IntMatrix& b,
                                                   const PathTable& table,
                                                   std::size_t max_level) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (table[j].length() > max_level) continue;
    auto ca = a.column(j);
    auto cb = b.column(j);
    if (!std::equal(ca.begin(), ca.end(), cb.begin(), cb.end())) return j;
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the four Toeplitz-Cuntz-Krieger relations on the truncated space.
/// (1) and (4) are checked on every basis vector; (2) and (3) only on levels
/// below k, since truncation kills L_e on the top level.
inline RelationReport verify_relations(const TruncatedFock& f) {
  const DirectedGraph& g = f.graph();
  const PathTable& t = f.basis();
  const std::size_t k = f.level();
  const std::size_t n = f.dimension();
  RelationReport report;

  RelationCheck r1{1, true, k, "P_x P_y = 0 (x != y), P_x^2 = P_x", std::nullopt};
  const IntMatrix zero(n, n);
  for (VertexIndex x = 0; x < g.vertex_count() && r1.passed; ++x) {
    for (VertexIndex y = 0; y < g.vertex_count() && r1.passed; ++y) {
      const IntMatrix prod = f.projection(x) * f.projection(y);
      const IntMatrix& want = x == y ? f.projection(x) : zero;
      if (auto j = detail::first_difference(prod, want, t, k)) {
        r1.passed = false;
        r1.detail = "P_" + g.vertex_id(x) + " P_" + g.vertex_id(y) +
                    (x == y ? " != P_" + g.vertex_id(x) : " != 0");
        r1.counterexample = t[*j].to_string();
      }
    }
  }
  report.checks.push_back(r1);

  const std::size_t below = k - 1;
  std::vector<IntMatrix> adj;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) adj.push_back(f.creation(e).adjoint());

  RelationCheck r2{2, true, below, "L_e^* L_f = 0 (e != f)", std::nullopt};
  RelationCheck r3{3, true, below, "L_e^* L_e = P_s(e)", std::nullopt};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (EdgeIndex h = 0; h < g.edge_count(); ++h) {
      if (e != h && !r2.passed) continue;
      if (e == h && !r3.passed) continue;
      const IntMatrix prod = adj[e] * f.creation(h);
      const IntMatrix& want = e == h ? f.projection(g.edge(e).src) : zero;
      if (auto j = detail::first_difference(prod, want, t, below)) {
        RelationCheck& r = e == h ? r3 : r2;
        r.passed = false;
        r.detail = e == h ? "L_" + g.edge(e).id + "^* L_" + g.edge(e).id + " != P_" +
                                g.vertex_id(g.edge(e).src)
                          : "L_" + g.edge(e).id + "^* L_" + g.edge(h).id + " != 0";
        r.counterexample = t[*j].to_string();
      }
    }
  }
  report.checks.push_back(r2);
  report.checks.push_back(r3);

  RelationCheck r4{4, true, k, "sum_{r(e)=x} L_e L_e^* <= P_x", std::nullopt};
  for (VertexIndex x = 0; x < g.vertex_count() && r4.passed; ++x) {
    IntMatrix defect = f.projection(x);
    for (EdgeIndex e : g.in_edges(x)) defect = defect - f.creation(e) * adj[e];
    if (auto j = detail::psd_violation(defect)) {
      r4.passed = false;
      r4.detail = "P_" + g.vertex_id(x) + " - sum L_e L_e^* is not positive";
      r4.counterexample = t[*j].to_string();
    }
  }
  report.checks.push_back(r4);
  return report;
}

// ---------------------------------------------------------------------------
// Numerics

using ComplexVector = std::vector<std::complex<double>>;

inline double norm2(std::span<const std::complex<double>> v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline std::complex<double> inner(std::span<const std::complex<double>> a,
                                  std::span<const std::complex<double>> b) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

/// Truncated eigenvector for the adjoint algebra at x: components
/// conj(w(lambda)) on words w in the loop edges at x, normalised to unit length.
/// lambda is indexed by loop_edges_at(g, x).
inline ComplexVector eigenvector(const TruncatedFock& f, VertexIndex x,
                                 std::span<const std::complex<double>> lambda) {
  const DirectedGraph& g = f.graph();
  const auto loops = loop_edges_at(g, x);
  if (lambda.size() != loops.size())
    throw DomainError("lambda has dimension " + std::to_string(lambda.size()) + ", expected " +
                      std::to_string(loops.size()));
  if (norm2(lambda) >= 1.0) throw DomainError("eigenvector requires ||lambda|| < 1");
  std::map<EdgeIndex, std::complex<double>> weight;
  for (std::size_t i = 0; i < loops.size(); ++i) weight[loops[i]] = std::conj(lambda[i]);

  const PathTable& t = f.basis();
  ComplexVector v(t.size(), 0.0);
  std::vector<std::size_t> frontier{x};  // level-0 index of x is x
  v[x] = 1.0;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t j : frontier)
      for (const auto& child : t.children(j)) {
        auto it = weight.find(child.edge);
        if (it == weight.end()) continue;
        v[child.index] = it->second * v[j];
        next.push_back(child.index);
      }
    frontier = std::move(next);
  }
  const double n = norm2(v);
  for (auto& z : v) z /= n;
  return v;
}

/// <A v, v> with A represented on f.
inline std::complex<double> vector_state(const AlgebraElement& a, const TruncatedFock& f,
                                         std::span<const std::complex<double>> v) {
  const DoubleMatrix m = represent_numeric(a, f);
  ComplexVector av(v.size());
  m.apply<std::complex<double>>(v, av);
  return inner(av, v);
}

struct NormEstimate {
  double lower = 0;
  double upper = 0;
  std::size_t iterations = 0;
};

/// Lower bound: power iteration on A^*A from the normalised all-ones vector
/// (at most 500 steps, stopping at relative change < 1e-12); the best
/// ||A v|| over unit iterates is reported. Upper bound: sum |a_w|.
inline NormEstimate norm_estimate(const AlgebraElement& a, const TruncatedFock& f) {
  NormEstimate est;
  est.upper = coefficient_l1(a);
  if (a.is_zero()) return est;
  const DoubleMatrix m = represent_numeric(a, f);
  const std::size_t n = f.dimension();
  ComplexVector v(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n), z(n);
  double previous = -1;
  for (std::size_t it = 0; it < 500; ++it) {
    ++est.iterations;
    m.apply<std::complex<double>>(v, y);
    const double ay = norm2(y);
    est.lower = std::max(est.lower, ay);
    if (ay == 0) break;
    if (previous > 0 && std::abs(ay - previous) <= 1e-12 * ay) break;
    previous = ay;
    m.apply_adjoint<std::complex<double>>(y, z);
    const double nz = norm2(z);
    if (nz == 0) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = z[i] / nz;
  }
  // The triangle bound is an upper bound for the true norm; rounding must not
  // push the estimate past it.
  est.lower = std::min(est.lower, est.upper);
  return est;
}

inline NormEstimate norm_estimate(const AlgebraElement& a, std::size_t k) {
  if (a.degree() > k) throw DomainError("element degree exceeds level");
  return norm_estimate(a, TruncatedFock(a.graph(), k));
}

// ---------------------------------------------------------------------------
// The corner at x as a free semigroup algebra

/// Word over primitive loops u_1..u_n (1-based indices), latest first.
using LoopWord = std::vector<std::size_t>;

inline std::string loop_word_string(const LoopWord& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](std::size_t i) { return i > 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

struct CornerWordMap {
  VertexIndex base = 0;
  std::size_t max_length = 0;
  std::vector<Path> primitives;                       // u_1, u_2, ...
  std::vector<std::pair<Path, LoopWord>> words;       // loop -> word, table order
  bool bijective = false;
  bool intertwines = false;
  std::string failure;
};

namespace detail {
inline void count_words(const std::vector<std::size_t>& lengths, std::size_t budget,
                        std::size_t& count) {
  for (std::size_t len : lengths)
    if (len <= budget) {
      ++count;
      count_words(lengths, budget - len, count);
    }
}
}  // namespace detail

/// Identifies loops at x (length <= L = f.level()) with words in the
/// primitive loops, checks the identification is a bijection onto all words
/// of total edge length <= L, and that L_{u_i} acts as the i-th free creation
/// operator on the columns xi_v, v = x or a loop at x.
inline CornerWordMap corner_word_bijection(const TruncatedFock& f, VertexIndex x) {
  const DirectedGraph& g = f.graph();
  g.check_vertex(x);
  const std::size_t L = f.level();
  const PathTable& t = f.basis();
  CornerWordMap out;
  out.base = x;
  out.max_length = L;
  out.primitives = primitive_loops_at(g, x, L);

  std::map<Path, std::size_t> primitive_index;
  for (std::size_t i = 0; i < out.primitives.size(); ++i)
    primitive_index.emplace(out.primitives[i], i + 1);

  std::map<LoopWord, std::size_t> seen;  // word -> table index
  std::map<std::size_t, LoopWord> word_of;
  out.bijective = true;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Path& p = t[j];
    if (!p.is_loop() || p.src() != x) continue;
    LoopWord word;
    for (const Path& factor : factor_loop(p)) word.push_back(primitive_index.at(factor));
    if (!seen.emplace(word, j).second) {
      out.bijective = false;
      out.failure = "word " + loop_word_string(word) + " hit twice";
    }
    word_of.emplace(j, word);
    out.words.emplace_back(p, std::move(word));
  }
  std::vector<std::size_t> lengths;
  for (const auto& u : out.primitives) lengths.push_back(u.length());
  std::size_t expected = 0;
  detail::count_words(lengths, L, expected);
  if (out.bijective && expected != seen.size()) {
    out.bijective = false;
    out.failure = "expected " + std::to_string(expected) + " words, found " +
                  std::to_string(seen.size());
  }

  // Intertwining on the wandering subspace generated by xi_x.
  out.intertwines = true;
  std::vector<std::size_t> columns{x};
  for (const auto& [j, _] : word_of) columns.push_back(j);
  for (std::size_t i = 0; i < out.primitives.size() && out.intertwines; ++i) {
    const ExactMatrix m = represent(AlgebraElement::monomial(out.primitives[i]), f);
    for (std::size_t j : columns) {
      const LoopWord base_word = j == x ? LoopWord{} : word_of.at(j);
      auto col = m.column(j);
      const bool fits = out.primitives[i].length() + t[j].length() <= L;
      bool ok;
      if (!fits) {
        ok = col.empty();
      } else {
        LoopWord want{i + 1};
        want.insert(want.end(), base_word.begin(), base_word.end());
        auto hit = seen.find(want);
        ok = col.size() == 1 && hit != seen.end() && col.front().first == hit->second &&
             col.front().second == Complex(1);
      }
      if (!ok) {
        out.intertwines = false;
        out.failure = "L_" + out.primitives[i].to_string() + " on xi_" + t[j].to_string();
        break;
      }
    }
  }
  return out;
}

inline CornerWordMap corner_word_bijection(const DirectedGraph& g, VertexIndex x, std::size_t L) {
  return corner_word_bijection(TruncatedFock(g, L), x);
}

}  // namespace quivalg
