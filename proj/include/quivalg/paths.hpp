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

// The path space of a graph: vertices (length 0) and composable edge words.
//
// Words are stored latest-first, w = e_k ... e_1, so that the creation
// operator for e acts by prepending: L_e xi_w = xi_{ew}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quivalg/error.hpp"
#include "quivalg/graph.hpp"

namespace quivalg {

class Path {
 public:
  Path() = default;

  static Path vertex(const DirectedGraph& g, VertexIndex v) {
    g.check_vertex(v);
    Path p;
    p.graph_ = &g;
    p.src_ = p.dst_ = v;
    return p;
  }

  static Path edge(const DirectedGraph& g, EdgeIndex e) {
    Path p;
    p.graph_ = &g;
    p.src_ = g.edge(e).src;
    p.dst_ = g.edge(e).dst;
    p.word_ = {e};
    return p;
  }

  /// Builds a path from a latest-first edge word; throws if not composable.
  static Path from_word(const DirectedGraph& g, std::vector<EdgeIndex> word) {
    if (word.empty()) throw DomainError("empty edge word; use Path::vertex");
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      // word[i] is applied after word[i+1]
      if (g.edge(word[i]).src != g.edge(word[i + 1]).dst)
        throw DomainError("edges '" + g.edge(word[i]).id + "' and '" + g.edge(word[i + 1]).id +
                          "' are not composable");
    }
    Path p;
    p.graph_ = &g;
    p.dst_ = g.edge(word.front()).dst;
    p.src_ = g.edge(word.back()).src;
    p.word_ = std::move(word);
    return p;
  }

  const DirectedGraph* graph() const { return graph_; }
  VertexIndex src() const { return src_; }
  VertexIndex dst() const { return dst_; }
  std::size_t length() const { return word_.size(); }
  bool is_vertex() const { return word_.empty(); }
  bool is_loop() const { return !word_.empty() && src_ == dst_; }
  /// Latest-first edge word.
  const std::vector<EdgeIndex>& word() const { return word_; }

  /// Level-major, then lexicographic in traversal order (e_1, e_2, ...) by
  /// edge declaration index; vertices ordered by declaration.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    if (a.word_.empty()) return a.src_ <=> b.src_;
    return std::lexicographical_compare_three_way(a.word_.rbegin(), a.word_.rend(),
                                                  b.word_.rbegin(), b.word_.rend());
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.word_ == b.word_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(src_) * 0x9e3779b97f4a7c15ULL;
    for (EdgeIndex e : word_) h = (h ^ e) * 0x100000001b3ULL + 0x7f4a7c15;
    return h;
  }

  /// "x" for a vertex, "e_k.….e_1" for a word.
  std::string to_string() const {
    if (word_.empty()) return graph_->vertex_id(src_);
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) s += '.';
      s += graph_->edge(word_[i]).id;
    }
    return s;
  }

 private:
  const DirectedGraph* graph_ = nullptr;
  VertexIndex src_ = 0;
  VertexIndex dst_ = 0;
  std::vector<EdgeIndex> word_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const { return p.hash(); }
};

/// Parses the text form produced by Path::to_string.
inline Path parse_path(const DirectedGraph& g, std::string_view text) {
  if (auto v = g.find_vertex(text)) return Path::vertex(g, *v);
  std::vector<EdgeIndex> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    const std::string_view part = text.substr(start, dot - start);
    auto e = g.find_edge(part);
    if (!e) throw ParseError(std::string(text), "unknown vertex or edge '" + std::string(part) + "'");
    word.push_back(*e);
    start = dot + 1;
  }
  return Path::from_word(g, std::move(word));
}

/// w2 * w1 (w1 first, then w2), or nullopt when s(w2) != r(w1).
inline std::optional<Path> compose(const Path& w2, const Path& w1) {
  if (w2.graph() != w1.graph()) throw DomainError("paths belong to different graphs");
  if (w2.src() != w1.dst()) return std::nullopt;
  if (w1.is_vertex()) return w2;
  if (w2.is_vertex()) return w1;
  std::vector<EdgeIndex> word = w2.word();
  word.insert(word.end(), w1.word().begin(), w1.word().end());
  return Path::from_word(*w2.graph(), std::move(word));
}

/// All paths up to a maximum length, level-major, with a global index.
class PathTable {
 public:
  struct Child {
    EdgeIndex edge;
    std::size_t index;
  };

  PathTable(const DirectedGraph& g, std::size_t max_len) : graph_(&g), max_len_(max_len) {
    std::vector<std::size_t> prev;
    levels_.emplace_back();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      levels_[0].push_back(add(Path::vertex(g, v)));
    }
    // Level 1 lists every edge in declaration order; deeper levels extend each
    // path in order by each composable edge in declaration order.
    for (std::size_t m = 1; m <= max_len; ++m) {
      std::vector<std::size_t> level;
      if (m == 1) {
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
          const std::size_t idx = add(Path::edge(g, e));
          level.push_back(idx);
          children_[levels_[0][g.edge(e).src]].push_back({e, idx});
        }
      } else {
        for (std::size_t parent : levels_[m - 1]) {
          const VertexIndex end = paths_[parent].dst();
          for (EdgeIndex e : g.out_edges(end)) {
            std::vector<EdgeIndex> word{e};
            const auto& pw = paths_[parent].word();
            word.insert(word.end(), pw.begin(), pw.end());
            const std::size_t idx = add(Path::from_word(g, std::move(word)));
            level.push_back(idx);
            children_[parent].push_back({e, idx});
          }
        }
        // Children of one parent were appended in out-edge order, which is
        // declaration order; level order is inherited from the parents.
      }
      if (level.empty()) {
        // Nothing deeper exists either; keep empty levels for uniform access.
        for (std::size_t r = m; r <= max_len; ++r) levels_.emplace_back();
        break;
      }
      levels_.push_back(std::move(level));
    }
  }

  const DirectedGraph& graph() const { return *graph_; }
  std::size_t max_length() const { return max_len_; }
  std::size_t size() const { return paths_.size(); }
  const Path& operator[](std::size_t i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }

  /// Indices of the paths of length m.
  const std::vector<std::size_t>& level(std::size_t m) const { return levels_.at(m); }
  std::size_t level_count() const { return levels_.size(); }

  std::optional<std::size_t> index_of(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// (e, index of e*w) for each edge e composable with path i, if within the table.
  std::span<const Child> children(std::size_t i) const { return children_[i]; }

 private:
  std::size_t add(Path p) {
    const std::size_t idx = paths_.size();
    index_.emplace(p, idx);
    paths_.push_back(std::move(p));
    children_.emplace_back();
    return idx;
  }

  const DirectedGraph* graph_;
  std::size_t max_len_;
  std::vector<Path> paths_;
  std::vector<std::vector<std::size_t>> levels_;
  std::vector<std::vector<Child>> children_;
  std::unordered_map<Path, std::size_t, PathHash> index_;
};

inline PathTable enumerate_paths(const DirectedGraph& g, std::size_t max_len) {
  return PathTable(g, max_len);
}

/// Loops at x of length 1..max_len that do not revisit x before their end.
inline std::vector<Path> primitive_loops_at(const DirectedGraph& g, VertexIndex x,
                                            std::size_t max_len) {
  g.check_vertex(x);
  std::vector<Path> result;
  // Traversal-order words (e_1 first) that left x and have not come back.
  std::vector<std::vector<EdgeIndex>> open;
  for (EdgeIndex e : g.out_edges(x)) {
    if (g.edge(e).dst == x) {
      result.push_back(Path::edge(g, e));
    } else {
      open.push_back({e});
    }
  }
  for (std::size_t len = 2; len <= max_len && !open.empty(); ++len) {
    std::vector<std::vector<EdgeIndex>> next;
    for (const auto& walk : open) {
      for (EdgeIndex e : g.out_edges(g.edge(walk.back()).dst)) {
        auto extended = walk;
        extended.push_back(e);
        if (g.edge(e).dst == x) {
          result.push_back(Path::from_word(g, {extended.rbegin(), extended.rend()}));
        } else {
          next.push_back(std::move(extended));
        }
      }
    }
    open = std::move(next);
  }
  std::stable_sort(result.begin(), result.end());
  return result;
}

/// Unique factorization of a loop into primitive loops at its base point,
/// latest factor first (so composing the list left to right gives u back).
inline std::vector<Path> factor_loop(const Path& u) {
  if (!u.is_loop()) throw DomainError("factor_loop: '" + u.to_string() + "' is not a loop");
  const DirectedGraph& g = *u.graph();
  const VertexIndex x = u.src();
  std::vector<Path> factors;
  std::vector<EdgeIndex> piece;  // traversal order
  const auto& w = u.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    piece.push_back(*it);
    if (g.edge(*it).dst == x) {
      factors.push_back(Path::from_word(g, {piece.rbegin(), piece.rend()}));
      piece.clear();
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

/// Number of primitive factors of a loop.
inline std::size_t loop_weight(const Path& u) { return factor_loop(u).size(); }

}  // namespace quivalg
