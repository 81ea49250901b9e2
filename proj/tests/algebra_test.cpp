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

TEST(Multiply, WorkedExamples) {
  const auto four = g4();
  EXPECT_EQ(multiply(L(four, "f"), L(four, "e")), L(four, "f.e"));
  EXPECT_TRUE(multiply(L(four, "e"), L(four, "e")).is_zero());
  const AlgebraElement a = L(four, "x") + L(four, "e");
  EXPECT_EQ(multiply(a, a), a);
  EXPECT_THROW(multiply(L(four, "e"), L(g4(), "e")), DomainError);
}

TEST(AddScale, WorkedExamples) {
  const auto two = g2();
  EXPECT_TRUE(add_scale(L(two, "a"), L(two, "a"), 1, -1).is_zero());
  const auto combo = add_scale(L(two, "a"), L(two, "b"), 2, 3);
  EXPECT_EQ(combo.coeff(P(two, "a")), Complex(2));
  EXPECT_EQ(combo.coeff(P(two, "b")), Complex(3));
  EXPECT_EQ(combo.support_size(), 2u);
  EXPECT_EQ(add_scale(L(two, "v"), AlgebraElement::zero(two), 1, 0), L(two, "v"));
}

TEST(Corner, WorkedExamples) {
  const auto four = g4();
  const VertexIndex x = four.vertex("x"), y = four.vertex("y");
  EXPECT_EQ(corner(L(four, "x") + L(four, "e") + L(four, "f"), x, y), L(four, "e"));
  const auto two = g2();
  EXPECT_EQ(corner(L(two, "a"), 0, 0), L(two, "a"));
  EXPECT_TRUE(corner(L(four, "e"), y, x).is_zero());
  EXPECT_THROW(corner(L(four, "e"), 0, 9), DomainError);
}

TEST(Phi, WorkedExamples) {
  const auto four = g4();
  const AlgebraElement a = L(four, "x", 2) + L(four, "e", 3) + L(four, "f.e", 4);
  EXPECT_EQ(phi(a, 1), L(four, "e", 3));
  EXPECT_EQ(phi(a, 0), L(four, "x", 2));
  const auto two = g2();
  EXPECT_TRUE(phi(L(two, "a"), 2).is_zero());
}

TEST(FourierCoeff, WorkedExamples) {
  const auto four = g4();
  const AlgebraElement a = L(four, "e", 3) + L(four, "f", Complex::i());
  EXPECT_EQ(fourier_coeff(a, P(four, "e")), Complex(3));
  EXPECT_EQ(fourier_coeff(a, P(four, "f")), Complex::i());
  EXPECT_TRUE(fourier_coeff(a, P(four, "f.e")).is_zero());
  EXPECT_EQ(fourier_coeff(multiply(L(four, "f"), L(four, "e")), P(four, "f.e")), Complex(1));
  EXPECT_THROW(fourier_coeff(a, P(g4(), "e")), DomainError);
}

TEST(AlgebraElement, NoZeroCoefficientsStored) {
  const auto two = g2();
  AlgebraElement a(two);
  a.add_term(P(two, "a"), 0);
  EXPECT_TRUE(a.is_zero());
  a.add_term(P(two, "a"), Complex(Q(1, 2)));
  a.add_term(P(two, "a"), Complex(Q(-1, 2)));
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.degree(), 0u);
}

TEST(AlgebraElement, TextAndJson) {
  const auto four = g4();
  const AlgebraElement a = L(four, "x", 2) + L(four, "f.e", Complex(Q(1, 2), Q(-3)));
  EXPECT_EQ(a.to_string(), "2·x + ((1/2)-3i)·f.e");
  EXPECT_EQ(element_to_json(a).dump(), R"([["x","2","0"],["f.e","1/2","-3"]])");
  EXPECT_EQ(element_from_json(four, element_to_json(a)), a);
  EXPECT_THROW(element_from_json(four, nlohmann::json::parse(R"([["e.e","1"]])")), DomainError);
  EXPECT_THROW(element_from_json(four, nlohmann::json::parse(R"([["e","x/2"]])")),
               std::invalid_argument);
}

class RingAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(RingAxioms, HoldExactlyOnRandomElements) {
  CorpusSpec spec;
  spec.add_family(GetParam());
  const auto& g = *spec.graphs.front().graph;
  SplitMix64 rng(0xa1);
  const AlgebraElement unit = AlgebraElement::unit(g);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_polynomial(g, rng, 8, 3);
    const auto b = random_polynomial(g, rng, 8, 3);
    const auto c = random_polynomial(g, rng, 8, 3);
    const Complex s = random_coefficient(rng), t = random_coefficient(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * add_scale(b, c, s, t), add_scale(a * b, a * c, s, t));
    EXPECT_EQ(add_scale(b, c, s, t) * a, add_scale(b * a, c * a, s, t));
    EXPECT_EQ(unit * a, a);
    EXPECT_EQ(a * unit, a);
    EXPECT_LE((a * b).degree(), a.degree() + b.degree());

    AlgebraElement sum(g);
    for (std::size_t m = 0; m <= a.degree(); ++m) sum += phi(a, m);
    EXPECT_EQ(sum, a);
    EXPECT_EQ(phi(phi(a, 1), 1), phi(a, 1));
    EXPECT_LE(coefficient_l1(phi(a, 1)), coefficient_l1(a));

    for (VertexIndex x = 0; x < g.vertex_count(); ++x)
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        const auto c_xy = corner(a, x, y);
        EXPECT_EQ(c_xy, AlgebraElement::projection(g, y) * a * AlgebraElement::projection(g, x));
        EXPECT_EQ(corner(c_xy, x, y), c_xy);
      }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, RingAxioms,
                         ::testing::Values("loops:2", "cycle2", "parallel:3", "cycle:3",
                                           "union:loops:2+cycle2"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

}  // namespace
}  // namespace quivalg
