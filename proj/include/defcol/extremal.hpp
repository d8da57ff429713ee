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

// Executable forms of the two counting inequalities behind the defect bound:
// the clique-minor edge density bound, and its strengthening for a stable
// set of vertices of degree at least t.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcol/generators.hpp"
#include "defcol/graph.hpp"
#include "defcol/params.hpp"

namespace defcol {

// Both sides are returned so a failing property test says by how much.
struct BoundCheck {
  bool holds;
  std::uint64_t lhs;
  double rhs;
};

struct StableSetWitness {
  std::vector<VertexId> members;
  std::size_t t = 0;
};

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(VertexId v, const std::string& what)
      : std::invalid_argument(what), vertex_(v) {}
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

// |E(G)| <= C (t+1) sqrt(ln(t+1)) |V(G)|.
inline BoundCheck density_bound_holds(const Graph& g, std::size_t t,
                                      double C = kDefaultDensityConstant) {
  if (!(C > 0.0)) throw std::invalid_argument("density constant C must be positive");
  const double rhs = density_base(t, C, std::nullopt) * static_cast<double>(g.vertex_count());
  const std::uint64_t lhs = g.edge_count();
  return {static_cast<double>(lhs) <= rhs, lhs, rhs};
}

// |E(G - A)| + |A| <= r |V(G - A)| for a stable set A of vertices whose
// degrees are all at least witness.t. Throws PreconditionError naming the
// first offending vertex if A is not such a set.
inline BoundCheck smallind_holds(const Graph& g, const StableSetWitness& witness, double r) {
  std::vector<char> in_a(g.id_bound(), 0);
  for (VertexId v : witness.members) {
    if (!g.is_live(v)) {
      throw PreconditionError(v, "vertex " + std::to_string(v) + " is not in the graph");
    }
    if (in_a[v]) {
      throw PreconditionError(v, "vertex " + std::to_string(v) + " listed twice");
    }
    in_a[v] = 1;
  }
  std::uint64_t edges_touching_a = 0;
  for (VertexId v : witness.members) {
    if (g.degree(v) < witness.t) {
      throw PreconditionError(v, "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(g.degree(v)) + " < " +
                                     std::to_string(witness.t));
    }
    for (VertexId w : g.neighbors(v)) {
      if (in_a[w]) {
        throw PreconditionError(v, "vertex " + std::to_string(v) + " is adjacent to " +
                                       std::to_string(w) + " inside the stable set");
      }
    }
    edges_touching_a += g.degree(v);
  }
  const std::uint64_t a = witness.members.size();
  const std::uint64_t lhs = (g.edge_count() - edges_touching_a) + a;
  const double rhs = r * static_cast<double>(g.vertex_count() - a);
  return {static_cast<double>(lhs) <= rhs, lhs, rhs};
}

// Maximal stable set among the vertices of degree >= t, grown greedily in a
// seeded random order. Empty when no vertex qualifies.
inline std::optional<StableSetWitness> random_stable_witness(const Graph& g, std::size_t t,
                                                             std::uint64_t seed) {
  std::vector<VertexId> order;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) >= t) order.push_back(v);
  }
  if (order.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  detail::shuffle(order, rng);

  std::vector<char> blocked(g.id_bound(), 0);
  StableSetWitness w{{}, t};
  for (VertexId v : order) {
    if (blocked[v]) continue;
    w.members.push_back(v);
    for (VertexId x : g.neighbors(v)) blocked[x] = 1;
  }
  std::sort(w.members.begin(), w.members.end());
  return w;
}

}  // namespace defcol
