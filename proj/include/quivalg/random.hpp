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

// Deterministic random streams and random test inputs.
//
// SplitMix64 is used instead of <random> distributions so that every stream
// is reproducible bit-for-bit across standard libraries.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/paths.hpp"

namespace quivalg {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream; the parent advances by one draw.
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

  /// Uniform in [0, n); n > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates with SplitMix64.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

/// Small nonzero Gaussian rational (p + q i)/d with |p|,|q| <= 3, 1 <= d <= 3.
inline Complex random_coefficient(SplitMix64& rng) {
  for (;;) {
    const mpz_class d(static_cast<long>(rng.between(1, 3)));
    const mpz_class p(static_cast<long>(rng.between(-3, 3)));
    const mpz_class q(static_cast<long>(rng.between(-3, 3)));
    Complex z(Rational(p, d), Rational(q, d));
    if (!z.is_zero()) return z;
  }
}

/// A path of length at most max_len obtained by a random walk; walks stop
/// early at sinks.
inline Path random_path(const DirectedGraph& g, SplitMix64& rng, std::size_t max_len) {
  const VertexIndex start = rng.below(g.vertex_count());
  const std::size_t len = rng.below(max_len + 1);
  std::vector<EdgeIndex> traversal;
  VertexIndex at = start;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& out = g.out_edges(at);
    if (out.empty()) break;
    const EdgeIndex e = out[rng.below(out.size())];
    traversal.push_back(e);
    at = g.edge(e).dst;
  }
  if (traversal.empty()) return Path::vertex(g, start);
  return Path::from_word(g, {traversal.rbegin(), traversal.rend()});
}

/// Random polynomial with at most max_support terms of degree <= max_degree.
inline AlgebraElement random_polynomial(const DirectedGraph& g, SplitMix64& rng,
                                        std::size_t max_support, std::size_t max_degree) {
  AlgebraElement a(g);
  if (g.vertex_count() == 0) return a;
  const std::size_t terms = 1 + rng.below(max_support);
  for (std::size_t i = 0; i < terms; ++i)
    a.add_term(random_path(g, rng, max_degree), random_coefficient(rng));
  return a;
}

}  // namespace quivalg
