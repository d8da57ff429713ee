// Copyright 2026 The defcol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic graph families with known excluded clique minors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

inline constexpr std::size_t kDefaultSharpCap = 1'000'000;

namespace detail {

// mt19937_64 is fully specified by the standard; the standard distributions
// are not, so draws are done by hand to keep output identical across
// standard libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw_below(rng, i)]);
  }
}

}  // namespace detail

// Vertex count of G(s,t): n(1) = 1, n(t) = (s+1) n(t-1) + 1. Empty when the
// count would exceed `cap`.
inline std::optional<std::size_t> sharp_vertex_count(std::size_t s, std::size_t t,
                                                     std::size_t cap = kDefaultSharpCap) {
  if (t < 1) return std::nullopt;
  std::size_t n = 1;
  for (std::size_t level = 2; level <= t; ++level) {
    if (n > (cap - 1) / (s + 1)) return std::nullopt;
    n = (s + 1) * n + 1;
  }
  if (n > cap) return std::nullopt;
  return n;
}

// G(s,1) is one vertex; G(s,t) is s+1 disjoint copies of G(s,t-1) laid out
// consecutively, followed by an apex adjacent to every other vertex.
// K_{t+1} is not a minor of G(s,t), yet every partition into t-1 parts has a
// part inducing a vertex of degree > s.
inline Graph construct_sharp(std::size_t s, std::size_t t, std::size_t cap = kDefaultSharpCap) {
  if (t < 1) {
    throw std::invalid_argument("construct_sharp: t must be at least 1");
  }
  auto total = sharp_vertex_count(s, t, cap);
  if (!total) {
    throw std::length_error("construct_sharp: G(" + std::to_string(s) + "," + std::to_string(t) +
                            ") exceeds the vertex cap of " + std::to_string(cap));
  }
  Graph g(*total);
  // Build bottom-up: after level L, the block [0, size) holds G(s,L).
  std::vector<Edge> block;
  std::size_t size = 1;
  for (std::size_t level = 2; level <= t; ++level) {
    std::vector<Edge> next;
    next.reserve((s + 1) * block.size() + (s + 1) * size);
    for (std::size_t copy = 0; copy <= s; ++copy) {
      auto offset = static_cast<VertexId>(copy * size);
      for (auto [u, v] : block) next.emplace_back(u + offset, v + offset);
    }
    auto apex = static_cast<VertexId>((s + 1) * size);
    for (VertexId v = 0; v < apex; ++v) next.emplace_back(v, apex);
    block = std::move(next);
    size = (s + 1) * size + 1;
  }
  for (auto [u, v] : block) g.add_edge(u, v);
  return g;
}

// Random forest: vertex v > 0 attaches to a uniformly chosen earlier vertex
// with probability 7/8 and starts a new tree otherwise.
inline Graph gen_forest(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) {
    if (detail::draw_below(rng, 8) == 0) continue;
    auto parent = static_cast<VertexId>(detail::draw_below(rng, v));
    g.add_edge(parent, static_cast<VertexId>(v));
  }
  return g;
}

// Random k-tree: K_{k+1} on 0..k, then each new vertex joins a uniformly
// chosen existing k-clique. m = kn - k(k+1)/2.
inline Graph gen_ktree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < k + 1) {
    throw std::invalid_argument("gen_ktree: need n >= k+1 (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (VertexId u = 0; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) g.add_edge(u, v);
  }
  std::vector<std::vector<VertexId>> cliques;
  for (VertexId skip = 0; skip <= k; ++skip) {
    std::vector<VertexId> c;
    for (VertexId v = 0; v <= k; ++v) {
      if (v != skip) c.push_back(v);
    }
    cliques.push_back(std::move(c));
    if (k == 0) break;
  }
  for (std::size_t v = k + 1; v < n; ++v) {
    const auto base = cliques[detail::draw_below(rng, cliques.size())];
    auto nv = static_cast<VertexId>(v);
    for (VertexId w : base) g.add_edge(w, nv);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      auto c = base;
      c[drop] = nv;
      cliques.push_back(std::move(c));
    }
  }
  return g;
}

// w x h grid; vertex (x, y) has id y*w + x.
inline Graph gen_grid(std::size_t w, std::size_t h) {
  if (w != 0 && h > std::numeric_limits<VertexId>::max() / w) {
    throw std::invalid_argument("gen_grid: grid too large");
  }
  Graph g(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      auto v = static_cast<VertexId>(y * w + x);
      if (x + 1 < w) g.add_edge(v, v + 1);
      if (y + 1 < h) g.add_edge(v, static_cast<VertexId>(v + w));
    }
  }
  return g;
}

// Erdos-Renyi G(n, p).
inline Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gen_random: p must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (detail::draw_unit(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace defcol
