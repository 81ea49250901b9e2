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

// quivalg command-line front end.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quivalg/quivalg.hpp"

namespace {

using nlohmann::json;
using namespace quivalg;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  std::size_t level = 4;
  std::string fault_edge;  // --inject-fault
  std::uint64_t seed = 0;
  bool text = false;
  std::string out;
};

DirectedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

/// Writes to --out when given, else stdout.
void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw ParseError(opt.out, "cannot write file");
  f << payload;
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

/// Element argument: inline JSON or a path to a JSON file.
AlgebraElement load_element(const DirectedGraph& g, const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '[') {
    std::ifstream in(arg);
    if (!in) throw ParseError(arg, "cannot open element file");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw ParseError("element", "malformed JSON");
  }
  return element_from_json(g, doc);
}

/// lambda as JSON [[re, im], ...] with rational strings.
std::vector<Complex> parse_lambda(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw ParseError("lambda", "malformed JSON");
  }
  if (!doc.is_array()) throw ParseError("lambda", "expected [[re, im], ...]");
  std::vector<Complex> out;
  for (const auto& z : doc) {
    if (z.is_string()) {
      out.emplace_back(Complex::parse_rational(z.get<std::string>()));
    } else if (z.is_array() && z.size() == 2 && z[0].is_string() && z[1].is_string()) {
      out.emplace_back(Complex::parse_rational(z[0].get<std::string>()),
                       Complex::parse_rational(z[1].get<std::string>()));
    } else {
      throw ParseError("lambda", "entries must be \"re\" or [\"re\", \"im\"]");
    }
  }
  return out;
}

json complex_json(const Complex& z) { return {z.re().get_str(), z.im().get_str()}; }

int cmd_parse(const Options& opt, const std::string& file) {
  const DirectedGraph g = load_graph(file);
  const auto cls = classify_vertices(g);
  std::vector<std::string> sinks, sources;
  for (auto v : cls.sinks) sinks.push_back(g.vertex_id(v));
  for (auto v : cls.sources) sources.push_back(g.vertex_id(v));
  if (opt.text) {
    std::ostringstream os;
    os << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    emit(opt, os.str());
  } else {
    emit_json(opt, {{"graph", graph_to_json(g)}, {"sinks", sinks}, {"sources", sources}});
  }
  return kPass;
}

int cmd_paths(const Options& opt, const std::string& file) {
  const DirectedGraph g = load_graph(file);
  const PathTable t = enumerate_paths(g, opt.level);
  json levels = json::array();
  std::vector<std::size_t> totals;
  for (std::size_t m = 0; m < t.level_count(); ++m) {
    json level = json::array();
    for (std::size_t i : t.level(m)) level.push_back(t[i].to_string());
    totals.push_back(t.level(m).size());
    levels.push_back(std::move(level));
  }
  json prim = json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    json loops = json::array();
    for (const Path& u : primitive_loops_at(g, v, opt.level)) loops.push_back(u.to_string());
    prim[g.vertex_id(v)] = loops;
  }
  if (opt.text) {
    std::ostringstream os;
    for (std::size_t m = 0; m < levels.size(); ++m) {
      os << m << ":";
      for (const auto& p : levels[m]) os << ' ' << p.get<std::string>();
      os << '\n';
    }
    emit(opt, os.str());
  } else {
    emit_json(opt, {{"max_length", opt.level},
                    {"total", t.size()},
                    {"level_sizes", totals},
                    {"levels", levels},
                    {"primitive_loops", prim}});
  }
  return kPass;
}

int cmd_fock(const Options& opt, const std::string& file, const std::string& matrix) {
  const DirectedGraph g = load_graph(file);
  TruncatedFock f(g, opt.level);
  if (!opt.fault_edge.empty()) f = drop_generator_entry(f, g.edge_index(opt.fault_edge));
  if (!matrix.empty()) {
    // COO export of one element's matrix.
    const AlgebraElement a = matrix.front() == '[' ? load_element(g, matrix)
                                                  : AlgebraElement::monomial(parse_path(g, matrix));
    std::ostringstream os;
    represent(a, f).write_coo(os);
    emit(opt, os.str());
    return kPass;
  }
  const RelationReport rel = verify_relations(f);
  json norms = json::array();
  AlgebraElement sum(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const AlgebraElement l = AlgebraElement::creation(g, e);
    sum += l;
    norms.push_back({{"element", l.to_string()}, {"estimate", norm_to_json(norm_estimate(l, f))}});
  }
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    AlgebraElement into(g);
    for (EdgeIndex e : g.in_edges(x)) into += AlgebraElement::creation(g, e);
    if (into.is_zero()) continue;
    norms.push_back({{"element", into.to_string()}, {"estimate", norm_to_json(norm_estimate(into, f))}});
  }
  if (!sum.is_zero())
    norms.push_back({{"element", sum.to_string()}, {"estimate", norm_to_json(norm_estimate(sum, f))}});
  if (opt.text) {
    std::ostringstream os;
    os << "dimension " << f.dimension() << '\n';
    for (const auto& c : rel.checks)
      os << "relation " << c.relation << ": " << (c.passed ? "pass" : "FAIL") << " (levels <= "
         << c.max_level << ")" << (c.counterexample ? " at xi_" + *c.counterexample : "") << '\n';
    emit(opt, os.str());
  } else {
    emit_json(opt, {{"level", opt.level},
                    {"dimension", f.dimension()},
                    {"relations", relation_report_to_json(rel)},
                    {"norms", norms}});
  }
  return rel.passed() ? kPass : kFail;
}

int cmd_chars(const Options& opt, const std::string& file, const std::string& vertex,
              const std::string& lambda, const std::string& element) {
  const DirectedGraph g = load_graph(file);
  json balls = json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    balls.push_back({{"vertex", g.vertex_id(v)}, {"ball_dim", ball_dimension(g, v)}});
  json out{{"components", balls}};
  if (!vertex.empty()) {
    const VertexIndex x = g.vertex(vertex);
    const std::vector<Complex> lam = lambda.empty()
                                         ? std::vector<Complex>(ball_dimension(g, x))
                                         : parse_lambda(lambda);
    const Character rho = character(g, x, lam);
    json ev{{"vertex", vertex}, {"boundary", rho.on_boundary()},
            {"component", g.vertex_id(component_of(rho))}};
    if (!element.empty()) {
      const AlgebraElement a = load_element(g, element);
      ev["element"] = a.to_string();
      ev["value"] = complex_json(eval_character(rho, a));
    }
    out["evaluation"] = ev;
  }
  if (opt.text) {
    std::ostringstream os;
    for (const auto& b : balls) os << b["vertex"].get<std::string>() << ": " << b["ball_dim"] << '\n';
    if (out.contains("evaluation") && out["evaluation"].contains("value"))
      os << "value " << out["evaluation"]["value"][0].get<std::string>() << " + "
         << out["evaluation"]["value"][1].get<std::string>() << "i\n";
    emit(opt, os.str());
  } else {
    emit_json(opt, out);
  }
  return kPass;
}

int cmd_radical(const Options& opt, const std::string& file, const std::string& from,
                const std::string& to) {
  const DirectedGraph g = load_graph(file);
  const EdgeCount c = edge_count_via_radical(g, g.vertex(from), g.vertex(to), opt.seed);
  json basis = json::array();
  for (const auto& b : c.span.basis) basis.push_back(element_to_json(b));
  if (opt.text) {
    std::ostringstream os;
    os << from << " -> " << to << ": family " << c.family_size << ", radical count " << c.count
       << ", direct count " << c.direct << '\n';
    emit(opt, os.str());
  } else {
    emit_json(opt, {{"from", from},
                    {"to", to},
                    {"seed", opt.seed},
                    {"family_size", c.family_size},
                    {"span_basis", basis},
                    {"probes", {{"offered", c.span.probes_offered}, {"radical", c.span.probes_radical}}},
                    {"computed_count", c.count},
                    {"direct_count", c.direct},
                    {"matches", c.matches()}});
  }
  return c.matches() ? kPass : kFail;
}

int cmd_reconstruct(const Options& opt, const std::string& file) {
  const DirectedGraph g = load_graph(file);
  const RoundtripReport rt = verify_roundtrip(g, opt.seed);
  json out = reconstruction_to_json(rt.reconstruction);
  out["roundtrip"] = rt.passed() ? "pass" : "fail";
  json stages = json::array();
  for (const auto& s : rt.stages)
    stages.push_back({{"stage", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  out["stages"] = stages;
  out["witness"] = rt.witness ? vertex_map_to_json(*rt.witness) : json(nullptr);
  out["seed"] = opt.seed;
  if (opt.text) {
    std::ostringstream os;
    os << rt.reconstruction.components.size() << " components, roundtrip "
       << (rt.passed() ? "pass" : "fail") << '\n';
    emit(opt, os.str());
  } else {
    emit_json(opt, out);
  }
  return rt.passed() ? kPass : kFail;
}

int cmd_corpus(const Options& opt, const std::vector<std::string>& inputs) {
  CorpusSpec spec;
  spec.seed = opt.seed;
  spec.level = opt.level;
  spec.report_path = opt.out;
  if (!opt.fault_edge.empty()) {
    spec.fock_hook = [edge = opt.fault_edge](TruncatedFock f) {
      if (auto e = f.graph().find_edge(edge)) return drop_generator_entry(f, *e);
      return f;
    };
  }
  for (const auto& in : inputs) {
    if (in.ends_with(".json")) {
      spec.add_file(in);
    } else {
      spec.add_family(in);
    }
  }
  const json report = run_corpus(spec);
  if (opt.text) {
    std::ostringstream os;
    for (const auto& g : report["graphs"])
      os << (g["passed"].get<bool>() ? "PASS " : "FAIL ") << g["name"].get<std::string>() << '\n';
    emit(opt, os.str());
  } else {
    emit_json(opt, report);
  }
  return report["passed"].get<bool>() ? kPass : kFail;
}

int cmd_dot(const Options& opt, const std::string& file, bool reconstructed) {
  const DirectedGraph g = load_graph(file);
  emit(opt, reconstructed ? emit_dot(reconstruct(g, opt.seed)) : emit_dot(g));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quivalg: tensor algebras of finite directed graphs"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--level,-k", opt.level, "truncation level / maximum path length")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    auto* text = sub->add_flag("--text", opt.text, "plain text output");
    sub->add_flag("--json", [&](std::int64_t) { opt.text = false; }, "JSON output (default)")
        ->excludes(text);
    sub->add_option("--out,-o", opt.out, "write output to this file");
  };

  std::string file, matrix, vertex, lambda, element, from, to;
  std::vector<std::string> inputs;
  bool reconstructed = false;

  auto* parse = app.add_subcommand("parse", "validate a graph document");
  parse->add_option("graph", file, "graph JSON file")->required();
  add_common(parse);

  auto* paths = app.add_subcommand("paths", "enumerate paths and primitive loops");
  paths->add_option("graph", file)->required();
  add_common(paths);

  auto* fock = app.add_subcommand("fock", "truncated Fock representation: relations and norms");
  fock->add_option("graph", file)->required();
  fock->add_option("--matrix", matrix, "export the COO matrix of a path or element JSON");
  fock->add_option("--inject-fault", opt.fault_edge, "break one entry of L_EDGE (self-test)");
  add_common(fock);

  auto* chars = app.add_subcommand("chars", "character space: ball dimensions and evaluation");
  chars->add_option("graph", file)->required();
  chars->add_option("--vertex", vertex, "base vertex of the character");
  chars->add_option("--lambda", lambda, R"(parameters, e.g. '[["1/2","0"]]')");
  chars->add_option("--element", element, "element JSON (inline or file)");
  add_common(chars);

  auto* radical = app.add_subcommand("radical", "edge count between two vertices via the radical");
  radical->add_option("graph", file)->required();
  radical->add_option("from", from)->required();
  radical->add_option("to", to)->required();
  add_common(radical);

  auto* recon = app.add_subcommand("reconstruct", "rebuild the graph from algebra probes");
  recon->add_option("graph", file)->required();
  add_common(recon);

  auto* corpus = app.add_subcommand("corpus", "run every check over graph files and families");
  corpus->add_option("inputs", inputs, "graph files (*.json) or family names (loops:3, ...)");
  corpus->add_option("--inject-fault", opt.fault_edge,
                     "break one entry of L_EDGE in every graph having that edge (self-test)");
  add_common(corpus);

  auto* dot = app.add_subcommand("dot", "emit Graphviz DOT");
  dot->add_option("graph", file)->required();
  dot->add_flag("--reconstructed", reconstructed, "emit the reconstructed graph instead");
  add_common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*parse) return cmd_parse(opt, file);
    if (*paths) return cmd_paths(opt, file);
    if (*fock) return cmd_fock(opt, file, matrix);
    if (*chars) return cmd_chars(opt, file, vertex, lambda, element);
    if (*radical) return cmd_radical(opt, file, from, to);
    if (*recon) return cmd_reconstruct(opt, file);
    if (*corpus) return cmd_corpus(opt, inputs);
    if (*dot) return cmd_dot(opt, file, reconstructed);
  } catch (const quivalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
