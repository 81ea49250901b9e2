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

// Corpus runs: named graph families, per-graph checks and a deterministic
// JSON report.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivalg/characters.hpp"
#include "quivalg/error.hpp"
#include "quivalg/fock.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/nestrep.hpp"
#include "quivalg/reconstruct.hpp"

namespace quivalg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// ---------------------------------------------------------------------------
// Named families

namespace families {

/// One vertex with n loops.
inline DirectedGraph loops(std::size_t n) {
  std::vector<DirectedGraph::EdgeSpec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({"l" + std::to_string(i), "v", "v"});
  return DirectedGraph({"v"}, e);
}

/// Two vertices with k parallel edges x -> y.
inline DirectedGraph parallel(std::size_t k) {
  std::vector<DirectedGraph::EdgeSpec> e;
  for (std::size_t i = 0; i < k; ++i) e.push_back({"e" + std::to_string(i + 1), "x", "y"});
  return DirectedGraph({"x", "y"}, e);
}

/// Directed cycle on n vertices (n = 2 is the two-cycle x <-> y).
inline DirectedGraph cycle(std::size_t n) {
  if (n == 2) return DirectedGraph({"x", "y"}, {{"e", "x", "y"}, {"f", "y", "x"}});
  std::vector<std::string> v;
  std::vector<DirectedGraph::EdgeSpec> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) e.push_back({"e" + std::to_string(i), v[i], v[(i + 1) % n]});
  return DirectedGraph(v, e);
}

/// Source-to-sink chain v0 -> v1 -> ... -> v{n-1}.
inline DirectedGraph chain(std::size_t n) {
  std::vector<std::string> v;
  std::vector<DirectedGraph::EdgeSpec> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({"e" + std::to_string(i), v[i], v[i + 1]});
  return DirectedGraph(v, e);
}

/// Disjoint union; ids are prefixed with "g<i>_".
inline DirectedGraph disjoint_union(const std::vector<DirectedGraph>& parts) {
  std::vector<std::string> v;
  std::vector<DirectedGraph::EdgeSpec> e;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string p = "g" + std::to_string(i) + "_";
    for (const auto& id : parts[i].vertices()) v.push_back(p + id);
    for (const auto& edge : parts[i].edges())
      e.push_back({p + edge.id, p + parts[i].vertex_id(edge.src), p + parts[i].vertex_id(edge.dst)});
  }
  return DirectedGraph(v, e);
}

/// "loops:N", "parallel:K", "cycle2", "cycle:N", "chain:N", "union:A+B+...".
inline DirectedGraph from_name(const std::string& name) {
  auto number = [&](std::size_t colon) -> std::size_t {
    try {
      std::size_t used = 0;
      const std::string digits = name.substr(colon + 1);
      const unsigned long n = std::stoul(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(name);
      return n;
    } catch (const std::exception&) {
      throw ParseError(name, "bad family size");
    }
  };
  if (name.starts_with("union:")) {
    std::vector<DirectedGraph> parts;
    std::string rest = name.substr(6);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t plus = rest.find('+', start);
      if (plus == std::string::npos) plus = rest.size();
      parts.push_back(from_name(rest.substr(start, plus - start)));
      start = plus + 1;
    }
    return disjoint_union(parts);
  }
  if (name == "cycle2") return cycle(2);
  const std::size_t colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (colon != std::string::npos) {
    if (head == "loops") return loops(number(colon));
    if (head == "parallel") return parallel(number(colon));
    if (head == "cycle") return cycle(number(colon));
    if (head == "chain") return chain(number(colon));
  }
  throw ParseError(name, "unknown graph family");
}

}  // namespace families

// ---------------------------------------------------------------------------
// Corpus runs

struct CorpusEntry {
  std::string name;    // file path or family name
  std::shared_ptr<const DirectedGraph> graph;
};

struct CorpusSpec {
  std::vector<CorpusEntry> graphs;
  std::uint64_t seed = 0;
  std::size_t level = 4;
  std::string report_path;
  std::size_t threads = 0;  // 0: QUIVALG_THREADS or hardware concurrency
  /// Applied to every truncated representation before the relation check.
  /// Lets tests inject faults; identity when empty.
  std::function<TruncatedFock(TruncatedFock)> fock_hook;

  void add_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      graphs.push_back({path, std::make_shared<const DirectedGraph>(parse_graph(buf.str()))});
    } catch (const ParseError& e) {
      throw ParseError(path, e.what());
    }
  }
  void add_family(const std::string& name) {
    graphs.push_back({name, std::make_shared<const DirectedGraph>(families::from_name(name))});
  }
  void add_graph(std::string name, DirectedGraph g) {
    graphs.push_back({std::move(name), std::make_shared<const DirectedGraph>(std::move(g))});
  }
};

inline nlohmann::json relation_report_to_json(const RelationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"relation", c.relation}, {"passed", c.passed}, {"max_level", c.max_level},
                     {"identity", c.detail}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

inline nlohmann::json norm_to_json(const NormEstimate& n) {
  return {{"lower", n.lower}, {"upper", n.upper}};
}

/// All checks for one graph.
inline nlohmann::json run_graph(const CorpusEntry& entry, const CorpusSpec& spec) {
  const DirectedGraph& g = *entry.graph;
  nlohmann::json out{{"name", entry.name},
                     {"vertices", g.vertex_count()},
                     {"edges", g.edge_count()}};
  bool ok = true;

  TruncatedFock fock(g, spec.level);
  if (spec.fock_hook) fock = spec.fock_hook(std::move(fock));
  const RelationReport rel = verify_relations(fock);
  ok = ok && rel.passed();
  out["dimension"] = fock.dimension();
  out["relations"] = relation_report_to_json(rel);

  nlohmann::json balls = nlohmann::json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    balls.push_back({g.vertex_id(v), ball_dimension(g, v)});
  out["ball_dimensions"] = balls;

  nlohmann::json counts = nlohmann::json::array();
  bool counts_ok = true;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
      if (x == y) {
        row.push_back(nullptr);
        continue;
      }
      const EdgeCount c = edge_count_via_radical(g, x, y, spec.seed);
      counts_ok = counts_ok && c.matches();
      row.push_back(c.count);
    }
    counts.push_back(std::move(row));
  }
  ok = ok && counts_ok;
  out["edge_counts"] = {{"matrix", counts}, {"matches_direct", counts_ok}};

  AlgebraElement sum(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) sum += AlgebraElement::creation(g, e);
  out["norms"] = {{"sum_of_generators", norm_to_json(norm_estimate(sum, fock))}};

  const RoundtripReport rt = verify_roundtrip(g, spec.seed);
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : rt.stages)
    stages.push_back({{"stage", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  out["roundtrip"] = {{"passed", rt.passed()}, {"stages", stages}};
  ok = ok && rt.passed();

  out["passed"] = ok;
  return out;
}

inline std::size_t worker_count(const CorpusSpec& spec, std::size_t jobs) {
  std::size_t n = spec.threads;
  if (n == 0) {
    if (const char* env = std::getenv("QUIVALG_THREADS")) n = std::strtoul(env, nullptr, 10);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, jobs));
}

/// Runs every graph (in parallel workers) and assembles the report in input
/// order. Failures of individual graphs are recorded, not thrown.
inline nlohmann::json run_corpus(const CorpusSpec& spec) {
  std::vector<nlohmann::json> results(spec.graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < spec.graphs.size(); i = next++) {
      try {
        results[i] = run_graph(spec.graphs[i], spec);
      } catch (const std::exception& ex) {
        results[i] = {{"name", spec.graphs[i].name}, {"passed", false}, {"error", ex.what()}};
      }
    }
  };
  const std::size_t workers = worker_count(spec, spec.graphs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  bool ok = true;
  nlohmann::json graphs = nlohmann::json::array();
  for (auto& r : results) {
    ok = ok && r.value("passed", false);
    graphs.push_back(std::move(r));
  }
  return {{"schema", kReportSchema}, {"tool", "quivalg"},   {"version", kVersion},
          {"seed", spec.seed},       {"level", spec.level}, {"graphs", graphs},
          {"passed", ok}};
}

}  // namespace quivalg
