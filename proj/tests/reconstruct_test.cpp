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

/// Non-isomorphism certified by counts or by trying every vertex permutation.
std::optional<bool> certified_non_isomorphic(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return true;
  if (a.vertex_count() > 8) return std::nullopt;
  return !isomorphic_exhaustive(a, b);
}

TEST(Reconstruct, WorkedExamples) {
  const auto three = g3();
  const auto r3 = reconstruct(three);
  ASSERT_EQ(r3.components.size(), 2u);
  EXPECT_EQ(r3.loop_count(0), 0u);
  EXPECT_EQ(r3.loop_count(1), 0u);
  EXPECT_EQ(r3.counts, (std::vector<std::vector<std::size_t>>{{0, 3}, {0, 0}}));

  const auto r2 = reconstruct(g2());
  ASSERT_EQ(r2.components.size(), 1u);
  EXPECT_EQ(r2.loop_count(0), 2u);
  EXPECT_EQ(r2.counts, (std::vector<std::vector<std::size_t>>{{0}}));

  const auto r1 = reconstruct(g1());
  ASSERT_EQ(r1.components.size(), 1u);
  EXPECT_EQ(r1.loop_count(0), 0u);
}

TEST(Realize, WorkedExamples) {
  const auto three = g3();
  EXPECT_TRUE(are_isomorphic(realize(reconstruct(three)), three).has_value());
  const auto two = realize(reconstruct(g2()));
  EXPECT_EQ(two.vertex_count(), 1u);
  EXPECT_EQ(two.edge_count(), 2u);
  EXPECT_EQ(loop_edges_at(two, 0).size(), 2u);
  const auto empty = realize(ReconstructedGraph{});
  EXPECT_EQ(empty.vertex_count(), 0u);
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_FALSE(are_isomorphic(realize(reconstruct(three)), g4()).has_value());
}

TEST(Scramble, WorkedExamples) {
  const auto four = g4();
  const auto [s4, w4] = scramble(four, 7);
  EXPECT_TRUE(check_witness(four, s4, w4));
  const auto three = g3();
  const auto a = scramble(three, 1).first;
  const auto b = scramble(three, 2).first;
  EXPECT_TRUE(are_isomorphic(a, b).has_value());
  const auto [s1, w1] = scramble(g1(), 99);
  EXPECT_EQ(s1.vertex_count(), 1u);
  EXPECT_EQ(s1.edge_count(), 0u);
  // Deterministic in the seed.
  EXPECT_EQ(graph_to_json(scramble(three, 5).first), graph_to_json(scramble(three, 5).first));
}

TEST(Scramble, ActuallyReorders) {
  CorpusSpec spec;
  spec.add_family("chain:6");
  const auto& g = *spec.graphs.front().graph;
  std::set<std::string> listings;
  for (std::uint64_t s = 0; s < 8; ++s) listings.insert(graph_to_json(scramble(g, s).first).dump());
  EXPECT_GT(listings.size(), 4u);
}

TEST(VerifyRoundtrip, WorkedExamples) {
  for (const auto& g : {g3(), g4()}) {
    const auto report = verify_roundtrip(g);
    EXPECT_TRUE(report.passed());
    ASSERT_EQ(report.stages.size(), 7u);
    ASSERT_TRUE(report.witness.has_value());
  }
}

TEST(VerifyRoundtrip, WholeCorpus) {
  for (const auto& entry : full_corpus().graphs) {
    const auto report = verify_roundtrip(*entry.graph, 3);
    EXPECT_TRUE(report.passed()) << entry.name;
    for (const auto& stage : report.stages) EXPECT_TRUE(stage.passed) << entry.name << ": " << stage.name;
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_TRUE(check_witness(realize(report.reconstruction), *entry.graph, *report.witness));
  }
}

TEST(Reconstruct, LoopCountsEqualBallDimensions) {
  for (const auto& entry : full_corpus().graphs) {
    const auto& g = *entry.graph;
    const auto r = reconstruct(g);
    ASSERT_EQ(r.components.size(), g.vertex_count());
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      EXPECT_EQ(r.components[i].origin, g.vertex_id(i));
      EXPECT_EQ(r.loop_count(i), ball_dimension(g, i));
      EXPECT_EQ(r.counts[i][i], 0u);
    }
  }
}

TEST(Reconstruct, DiscriminatesNonIsomorphicCorpusPairs) {
  const auto corpus = full_corpus();
  std::vector<ReconstructedGraph> recon;
  for (const auto& entry : corpus.graphs) recon.push_back(reconstruct(*entry.graph));
  std::size_t certified = 0;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.graphs.size(); ++j) {
      const auto verdict = certified_non_isomorphic(*corpus.graphs[i].graph, *corpus.graphs[j].graph);
      if (!verdict.value_or(false)) continue;
      ++certified;
      EXPECT_TRUE(invariants_differ(recon[i], recon[j]))
          << corpus.graphs[i].name << " vs " << corpus.graphs[j].name;
    }
  EXPECT_GT(certified, 400u);
}

TEST(Reconstruct, PairsWithEqualCountsAreSeparated) {
  // Same vertex and edge counts, different shapes.
  const auto out_star = parse_graph(
      R"({"vertices":["c","p","q"],"edges":[["a","c","p"],["b","c","q"]]})");
  const auto in_star = parse_graph(
      R"({"vertices":["c","p","q"],"edges":[["a","p","c"],["b","q","c"]]})");
  const auto path = parse_graph(
      R"({"vertices":["c","p","q"],"edges":[["a","c","p"],["b","p","q"]]})");
  const auto loops = parse_graph(R"({"vertices":["c","p","q"],"edges":[["a","c","c"],["b","p","p"]]})");
  const std::vector<DirectedGraph> graphs{out_star, in_star, path, loops};
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      ASSERT_FALSE(isomorphic_exhaustive(graphs[i], graphs[j]));
      EXPECT_TRUE(invariants_differ(reconstruct(graphs[i]), reconstruct(graphs[j])));
    }
}

TEST(Reconstruct, AccessAudit) {
  const auto five = g5();
  AlgebraProbe probe(five, 0);
  const auto r = reconstruct(probe);
  ASSERT_FALSE(r.trace.empty());
  for (const auto& call : r.trace) EXPECT_TRUE(AlgebraProbe::allowed_call(call)) << call;
  EXPECT_EQ(r.trace.front(), "characters.component_of");
  EXPECT_FALSE(AlgebraProbe::allowed_call("graph.edges"));
  EXPECT_FALSE(AlgebraProbe::allowed_call("paths.enumerate"));
}

TEST(Reconstruct, ProvenanceNamesEveryCount) {
  const auto three = g3();
  const auto r = reconstruct(three);
  const auto j = reconstruction_to_json(r);
  EXPECT_EQ(j["counts"], nlohmann::json::parse("[[0,3],[0,0]]"));
  EXPECT_EQ(j["components"][0]["origin"], "x");
  bool found = false;
  for (const auto& p : r.provenance) found = found || p.starts_with("edges(x->y) = radical span dimension 3");
  EXPECT_TRUE(found);
}

TEST(Reconstruct, Dot) {
  const auto dot = emit_dot(reconstruct(g5()));
  EXPECT_NE(dot.find("digraph R {"), std::string::npos);
  EXPECT_NE(dot.find("\"c0\" -> \"c1\" [label=\"c0_c1_0\"];"), std::string::npos);
  EXPECT_NE(dot.find("\"c1\" -> \"c1\" [label=\"c1_loop0\"];"), std::string::npos);
}

}  // namespace
}  // namespace quivalg
