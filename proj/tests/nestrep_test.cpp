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

#include <gtest/gtest.h>

#include "test_graphs.hpp"

namespace quivalg {
namespace {

using namespace quivalg::testing;

Matrix2 M(long a, long b, long c, long d) {
  return Matrix2{{{Complex(a), Complex(b)}, {Complex(c), Complex(d)}}};
}

/// pi_e(A) by compressing the Fock matrix of A to span{xi_e, xi_s(e)}.
Matrix2 compressed(const AlgebraElement& a, const NestRep& pi) {
  const std::size_t k = std::max<std::size_t>(a.degree(), 1);
  const TruncatedFock f(*pi.graph, k);
  const ExactMatrix m = represent(a, f);
  const std::size_t basis[2] = {*f.basis().index_of(Path::edge(*pi.graph, pi.edge)), pi.from};
  Matrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = m.at(basis[i], basis[j]);
  return out;
}

/// Random polynomial with the vertex terms at x and y removed.
AlgebraElement random_radical(const DirectedGraph& g, SplitMix64& rng, VertexIndex x,
                              VertexIndex y) {
  AlgebraElement a = random_polynomial(g, rng, 8, 3);
  a -= Complex(a.coeff(Path::vertex(g, x))) * AlgebraElement::projection(g, x);
  a -= Complex(a.coeff(Path::vertex(g, y))) * AlgebraElement::projection(g, y);
  return a;
}

TEST(NestRep, WorkedExamples) {
  const auto four = g4();
  const auto pi = nest_rep(four, four.edge_index("e"));
  EXPECT_EQ(pi.from, four.vertex("x"));
  EXPECT_EQ(pi.to, four.vertex("y"));
  EXPECT_EQ(eval_nest(pi, L(four, "e")), M(0, 1, 0, 0));
  EXPECT_EQ(eval_nest(pi, L(four, "x")), M(0, 0, 0, 1));
  EXPECT_EQ(eval_nest(pi, L(four, "y")), M(1, 0, 0, 0));
  EXPECT_TRUE(is_zero(eval_nest(pi, L(four, "e.f"))));
  EXPECT_TRUE(is_zero(eval_nest(pi, L(four, "f"))));

  const auto three = g3();
  const auto p2 = nest_rep(three, three.edge_index("e2"));
  EXPECT_EQ(eval_nest(p2, L(three, "e2")), M(0, 1, 0, 0));
  EXPECT_TRUE(is_zero(eval_nest(p2, L(three, "e1"))));

  EXPECT_THROW(nest_rep(g2(), 0), DomainError);
  EXPECT_THROW(eval_nest(pi, L(three, "e1")), DomainError);
}

TEST(NestRep, AgreesWithFockCompression) {
  SplitMix64 rng(41);
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).src == g.edge(e).dst) continue;
      const auto pi = nest_rep(g, e);
      for (int trial = 0; trial < 3; ++trial) {
        const auto a = random_polynomial(g, rng, 8, 2);
        EXPECT_EQ(eval_nest(pi, a), compressed(a, pi)) << entry.name << " " << a.to_string();
      }
    }
  }
}

TEST(NestRep, Homomorphism) {
  SplitMix64 rng(42);
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).src == g.edge(e).dst) continue;
      const auto pi = nest_rep(g, e);
      EXPECT_EQ(eval_nest(pi, AlgebraElement::unit(g)), M(1, 0, 0, 1));
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_polynomial(g, rng, 8, 3);
        const auto b = random_polynomial(g, rng, 8, 3);
        EXPECT_EQ(eval_nest(pi, a * b), eval_nest(pi, a) * eval_nest(pi, b)) << entry.name;
        const Matrix2 m = eval_nest(pi, a);
        EXPECT_TRUE(m[1][0].is_zero());
      }
    }
  }
}

TEST(RepFamily, WorkedExamples) {
  const auto three = g3();
  const VertexIndex x = three.vertex("x"), y = three.vertex("y");
  EXPECT_EQ(rep_family(three, x, y).size(), 3u);
  EXPECT_TRUE(rep_family(three, y, x).empty());
  const auto five = g5();
  EXPECT_EQ(rep_family(five, five.vertex("x"), five.vertex("y")).size(), 1u);
  EXPECT_THROW(rep_family(three, x, x), DomainError);
}

TEST(RepFamily, NonemptyExactlyWhenAnEdgeExists) {
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> counts;
    for (const auto& e : g.edges()) ++counts[{e.src, e.dst}];
    for (VertexIndex x = 0; x < g.vertex_count(); ++x)
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        const auto family = rep_family(g, x, y);
        const auto it = counts.find({x, y});
        EXPECT_EQ(!family.empty(), it != counts.end()) << entry.name;
        EXPECT_EQ(family.size(), it == counts.end() ? 0 : it->second);
      }
  }
}

TEST(InRadical, WorkedExamples) {
  const auto three = g3();
  const VertexIndex x = three.vertex("x"), y = three.vertex("y");
  EXPECT_TRUE(in_radical(L(three, "e1"), x, y));
  EXPECT_FALSE(in_radical(L(three, "x"), x, y));
  EXPECT_FALSE(in_radical(L(three, "y"), x, y));
  EXPECT_FALSE(in_radical(L(three, "x") + L(three, "e2"), x, y));
  const auto four = g4();
  EXPECT_TRUE(in_radical(L(four, "f.e"), four.vertex("x"), four.vertex("y")));
  EXPECT_THROW(in_radical(L(three, "e1"), x, x), DomainError);
  // Without any edge x -> y only the characters constrain membership.
  EXPECT_TRUE(in_radical(L(three, "e1"), y, x));
  EXPECT_FALSE(in_radical(L(three, "x"), y, x));
}

TEST(InRadical, MatchesSquareZeroOfCompressions) {
  SplitMix64 rng(43);
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    for (int trial = 0; trial < 10; ++trial) {
      const VertexIndex x = rng.below(g.vertex_count());
      const VertexIndex y = rng.below(g.vertex_count());
      if (x == y) continue;
      AlgebraElement a = rng.below(2) ? random_radical(g, rng, x, y) : random_polynomial(g, rng, 8, 2);
      bool want = a.coeff(Path::vertex(g, x)).is_zero() && a.coeff(Path::vertex(g, y)).is_zero();
      for (const auto& pi : rep_family(g, x, y)) {
        const Matrix2 m = compressed(a, pi);
        want = want && is_zero(m * m);
      }
      EXPECT_EQ(in_radical(a, x, y), want) << entry.name << " " << a.to_string();
    }
  }
}

TEST(InRadical, IsAnIdeal) {
  SplitMix64 rng(44);
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    if (g.vertex_count() < 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      const VertexIndex x = rng.below(g.vertex_count());
      VertexIndex y = rng.below(g.vertex_count() - 1);
      if (y >= x) ++y;
      const auto a = random_radical(g, rng, x, y);
      const auto a2 = random_radical(g, rng, x, y);
      const auto b = random_polynomial(g, rng, 6, 2);
      ASSERT_TRUE(in_radical(a, x, y));
      EXPECT_TRUE(in_radical(b * a, x, y)) << entry.name;
      EXPECT_TRUE(in_radical(a * b, x, y)) << entry.name;
      EXPECT_TRUE(in_radical(a + a2, x, y)) << entry.name;
    }
  }
}

TEST(InRadical, KilledCornersHaveNoEdgeCoefficients) {
  SplitMix64 rng(45);
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    for (VertexIndex x = 0; x < g.vertex_count(); ++x)
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        const auto family = rep_family(g, x, y);
        for (int trial = 0; trial < 3; ++trial) {
          AlgebraElement a = corner(random_polynomial(g, rng, 10, 3), x, y);
          // Half the time strip the edge terms so the family kills the corner.
          if (trial % 2 == 0)
            for (EdgeIndex e : edges_between(g, x, y))
              a -= Complex(a.coeff(Path::edge(g, e))) * AlgebraElement::creation(g, e);
          bool killed = true;
          for (const auto& pi : family) killed = killed && is_zero(compressed(a, pi));
          if (!killed) continue;
          for (EdgeIndex e : edges_between(g, x, y))
            EXPECT_TRUE(fourier_coeff(a, Path::edge(g, e)).is_zero());
        }
      }
  }
}

TEST(RadicalSpan, DropsNonRadicalProbesAndReduces) {
  const auto three = g3();
  const VertexIndex x = three.vertex("x"), y = three.vertex("y");
  const auto family = rep_family(three, x, y);
  const std::vector<AlgebraElement> probes{
      L(three, "e1") + L(three, "e2"), L(three, "e1") - L(three, "e2"), Complex(3) * L(three, "e1"),
      L(three, "x") + L(three, "e3") /* corner drops P_x, still radical */, L(three, "y")};
  const auto span = radical_span(probes, family, x, y);
  EXPECT_EQ(span.probes_offered, 5u);
  EXPECT_EQ(span.probes_radical, 5u);
  ASSERT_EQ(span.dimension(), 3u);
  EXPECT_EQ(span.basis[0], L(three, "e1"));
  EXPECT_EQ(span.basis[1], L(three, "e2"));
  EXPECT_EQ(span.basis[2], L(three, "e3"));
}

TEST(EdgeCount, WorkedExamples) {
  const auto three = g3();
  const auto c3 = edge_count_via_radical(three, three.vertex("x"), three.vertex("y"));
  EXPECT_EQ(c3.count, 3u);
  EXPECT_EQ(c3.family_size, 3u);
  EXPECT_TRUE(c3.matches());
  const auto four = g4();
  EXPECT_EQ(edge_count_via_radical(four, four.vertex("x"), four.vertex("y")).count, 1u);
  const auto five = g5();
  const auto c5 = edge_count_via_radical(five, five.vertex("y"), five.vertex("x"));
  EXPECT_EQ(c5.count, 0u);
  EXPECT_EQ(c5.family_size, 0u);
  EXPECT_THROW(edge_count_via_radical(three, 0, 0), DomainError);
}

TEST(EdgeCount, MatchesDirectCountOnCorpus) {
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    for (std::uint64_t seed : {0u, 7u})
      for (VertexIndex x = 0; x < g.vertex_count(); ++x)
        for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
          if (x == y) continue;
          const auto c = edge_count_via_radical(g, x, y, seed);
          EXPECT_TRUE(c.matches()) << entry.name << " " << g.vertex_id(x) << "->" << g.vertex_id(y);
        }
  }
}

TEST(EdgeCount, RandomProbesAloneRecoverTheCount) {
  // Without the deterministic L_e probes, enough random radical probes still span.
  const auto three = g3();
  const VertexIndex x = three.vertex("x"), y = three.vertex("y");
  std::vector<AlgebraElement> generators;
  for (EdgeIndex e = 0; e < three.edge_count(); ++e)
    generators.push_back(AlgebraElement::creation(three, e));
  SplitMix64 rng(46);
  const auto probes = random_radical_probes(three, generators, rng, 40);
  EXPECT_EQ(radical_span(probes, rep_family(three, x, y), x, y).dimension(), 3u);
}

}  // namespace
}  // namespace quivalg
