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

// Peel-and-replay defective colouring.
//
// A graph with no K_{t+1} minor always has either a vertex of degree < t or
// an edge whose ends both have degree < s, with s = compute_s(r, t). The
// peel phase repeatedly deletes such a vertex or edge until nothing is left.
// The replay phase walks the deletions backwards: a restored vertex joins a
// part holding none of its (fewer than t) neighbours, and a restored edge
// leaves the partition alone. Since both ends of a restored edge had degree
// below s when it was removed, every part keeps induced maximum degree at
// most s - 1.
//
// The result is checked, never trusted: whatever the input, a returned
// partition satisfies verify_partition. Only totality depends on the
// excluded-minor hypothesis; when it fails the peel gets stuck and the
// surviving graph is handed back.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "defcol/graph.hpp"
#include "defcol/params.hpp"

namespace defcol {

struct VertexDeletion {
  VertexId v;
  std::vector<VertexId> neighbors;  // at deletion time, increasing

  friend bool operator==(const VertexDeletion&, const VertexDeletion&) = default;
};

struct EdgeDeletion {
  VertexId u;
  VertexId v;

  friend bool operator==(const EdgeDeletion&, const EdgeDeletion&) = default;
};

using ReductionStep = std::variant<VertexDeletion, EdgeDeletion>;

struct ReductionTrace {
  std::size_t id_bound = 0;  // of the graph the trace was taken from
  std::vector<ReductionStep> steps;
};

// The peel could not continue on a non-null graph. Assuming the parameters
// are valid for the input's minor-closed class, `remaining` (a subgraph of
// the input) has a K_{t+1} minor.
struct Stuck {
  Graph remaining;
  std::size_t steps_taken = 0;
};

struct Partition {
  std::vector<std::vector<VertexId>> parts;
  std::uint64_t defect_bound = 0;  // every part induces max degree < this
};

// Lowest-id vertex of degree < t; failing that, the lexicographically least
// edge with both ends of degree < s; failing that, nothing.
inline std::optional<ReductionStep> find_reduction(const Graph& g, std::size_t t, std::uint64_t s) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < t) {
      const auto& nb = g.neighbors(v);
      return VertexDeletion{v, {nb.begin(), nb.end()}};
    }
  }
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) < s && g.degree(v) < s) return EdgeDeletion{u, v};
  }
  return std::nullopt;
}

inline void apply_step(Graph& g, const ReductionStep& step) {
  std::visit(
      [&](const auto& st) {
        if constexpr (std::is_same_v<std::decay_t<decltype(st)>, VertexDeletion>) {
          g.delete_vertex(st.v);
        } else {
          g.delete_edge(st.u, st.v);
        }
      },
      step);
}

// Iterates find_reduction to exhaustion. Produces the same steps as repeated
// calls to find_reduction on a working copy but keeps the candidate vertices
// and edges in ordered sets, so each step costs O(deg log n) instead of a
// full scan.
inline std::variant<ReductionTrace, Stuck> reduce(const Graph& g, std::size_t t, std::uint64_t s) {
  Graph work = g;
  ReductionTrace trace{g.id_bound(), {}};

  std::set<VertexId> low_vertices;
  std::set<Edge> low_edges;
  auto ordered = [](VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; };

  for (VertexId v : work.vertices()) {
    if (work.degree(v) < t) low_vertices.insert(v);
  }
  for (auto [u, v] : work.edges()) {
    if (work.degree(u) < s && work.degree(v) < s) low_edges.emplace(u, v);
  }

  // Called after w lost exactly one incident edge.
  auto on_degree_drop = [&](VertexId w) {
    const std::size_t d = work.degree(w);
    if (d + 1 == t) low_vertices.insert(w);
    if (d + 1 == s) {
      for (VertexId x : work.neighbors(w)) {
        if (work.degree(x) < s) low_edges.insert(ordered(w, x));
      }
    }
  };

  while (true) {
    if (!low_vertices.empty()) {
      const VertexId v = *low_vertices.begin();
      low_vertices.erase(low_vertices.begin());
      const auto& nb = work.neighbors(v);
      std::vector<VertexId> neighbors(nb.begin(), nb.end());
      for (VertexId w : neighbors) low_edges.erase(ordered(v, w));
      work.delete_vertex(v);
      for (VertexId w : neighbors) on_degree_drop(w);
      trace.steps.push_back(VertexDeletion{v, std::move(neighbors)});
    } else if (!low_edges.empty()) {
      const auto [u, v] = *low_edges.begin();
      low_edges.erase(low_edges.begin());
      work.delete_edge(u, v);
      on_degree_drop(u);
      on_degree_drop(v);
      trace.steps.push_back(EdgeDeletion{u, v});
    } else {
      break;
    }
  }

  if (!work.empty()) {
    return Stuck{std::move(work), trace.steps.size()};
  }
  return trace;
}

// View handed to a replay observer after each restored step.
struct ReplayState {
  std::size_t depth;               // steps still deleted
  const Graph& graph;              // graph state at this depth
  std::span<const int> part_of;    // -1 for vertices not yet restored
};

using ReplayObserver = std::function<void(const ReplayState&)>;

class CorruptTraceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Walks the trace backwards and assigns every restored vertex to the
// lowest-index part holding none of its neighbours. An observer, when given,
// sees the reconstructed graph after every step.
inline Partition replay(const ReductionTrace& trace, std::size_t t, std::uint64_t s,
                        const ReplayObserver& observer = {}) {
  if (t == 0 && !trace.steps.empty()) {
    throw std::invalid_argument("replay: t = 0 admits only the empty trace");
  }
  const std::size_t n = trace.id_bound;
  std::vector<int> part_of(n, -1);
  std::vector<std::uint64_t> induced_degree(n, 0);
  std::vector<char> used(t, 0);

  std::optional<Graph> state;
  if (observer) {
    state.emplace(n);
    for (VertexId v = 0; v < n; ++v) state->delete_vertex(v);
  }

  auto require_assigned = [&](VertexId v) {
    if (v >= n || part_of[v] < 0) {
      throw CorruptTraceError("replay: vertex " + std::to_string(v) +
                              " referenced before it was restored");
    }
  };

  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    const auto& step = trace.steps[i];
    if (const auto* vd = std::get_if<VertexDeletion>(&step)) {
      if (vd->v >= n || part_of[vd->v] >= 0) {
        throw CorruptTraceError("replay: vertex " + std::to_string(vd->v) + " restored twice");
      }
      std::fill(used.begin(), used.end(), 0);
      for (VertexId w : vd->neighbors) {
        require_assigned(w);
        used[static_cast<std::size_t>(part_of[w])] = 1;
      }
      std::size_t part = 0;
      while (part < t && used[part]) ++part;
      if (part == t) {
        throw CorruptTraceError("replay: no part avoids the neighbours of vertex " +
                                std::to_string(vd->v));
      }
      part_of[vd->v] = static_cast<int>(part);
      if (state) {
        state->restore_vertex(vd->v);
        for (VertexId w : vd->neighbors) state->add_edge(vd->v, w);
      }
    } else {
      const auto& ed = std::get<EdgeDeletion>(step);
      require_assigned(ed.u);
      require_assigned(ed.v);
      if (part_of[ed.u] == part_of[ed.v]) {
        ++induced_degree[ed.u];
        ++induced_degree[ed.v];
        if (induced_degree[ed.u] >= s || induced_degree[ed.v] >= s) {
          throw CorruptTraceError("replay: restoring edge " + std::to_string(ed.u) + " " +
                                  std::to_string(ed.v) + " exceeds the defect bound");
        }
      }
      if (state) state->add_edge(ed.u, ed.v);
    }
    if (observer) observer(ReplayState{i, *state, part_of});
  }

  Partition out;
  out.defect_bound = s;
  out.parts.resize(t);
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] >= 0) out.parts[static_cast<std::size_t>(part_of[v])].push_back(v);
  }
  return out;
}

struct ColoringConfig {
  double C = kDefaultDensityConstant;
  std::optional<double> density_override;
  std::optional<std::uint64_t> s_override;
};

struct Colored {
  Partition partition;
  Params params;
  std::size_t trace_len = 0;
};

struct StuckOutcome {
  Stuck stuck;
  Params params;
};

using ColoringOutcome = std::variant<Colored, StuckOutcome>;

// Partition of V(G) into t parts, each inducing maximum degree < s, or the
// graph on which the peel got stuck.
inline ColoringOutcome defective_coloring(const Graph& g, std::size_t t,
                                          const ColoringConfig& config = {},
                                          const ReplayObserver& observer = {}) {
  Params params = make_params(t, config.C, config.density_override, config.s_override);
  auto reduced = reduce(g, t, params.s);
  if (auto* stuck = std::get_if<Stuck>(&reduced)) {
    return StuckOutcome{std::move(*stuck), params};
  }
  const auto& trace = std::get<ReductionTrace>(reduced);
  Colored out{replay(trace, t, params.s, observer), params, trace.steps.size()};
  return out;
}

struct Violation {
  enum class Kind { uncovered, duplicated, not_a_vertex, over_degree };
  Kind kind;
  VertexId vertex;
  std::size_t part = 0;
  std::size_t induced_degree = 0;

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::uncovered:
        os << "vertex " << vertex << " is not covered";
        break;
      case Kind::duplicated:
        os << "vertex " << vertex << " appears more than once (again in part " << part << ")";
        break;
      case Kind::not_a_vertex:
        os << "part " << part << " lists " << vertex << ", which is not a vertex";
        break;
      case Kind::over_degree:
        os << "vertex " << vertex << " has induced degree " << induced_degree << " in part "
           << part;
        break;
    }
    return os.str();
  }
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks the parts are disjoint, cover every live vertex, and each induces
// maximum degree strictly below s.
inline VerifyReport verify_partition(const Graph& g, const Partition& partition, std::uint64_t s) {
  VerifyReport report;
  const std::size_t n = g.id_bound();
  std::vector<long long> part_of(n, -1);
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    for (VertexId v : partition.parts[p]) {
      if (!g.is_live(v)) {
        report.violations.push_back({Violation::Kind::not_a_vertex, v, p, 0});
      } else if (part_of[v] >= 0) {
        report.violations.push_back({Violation::Kind::duplicated, v, p, 0});
      } else {
        part_of[v] = static_cast<long long>(p);
      }
    }
  }
  for (VertexId v : g.vertices()) {
    if (part_of[v] < 0) {
      report.violations.push_back({Violation::Kind::uncovered, v, 0, 0});
      continue;
    }
    std::size_t inside = 0;
    for (VertexId w : g.neighbors(v)) {
      if (part_of[w] == part_of[v]) ++inside;
    }
    if (inside >= s) {
      report.violations.push_back(
          {Violation::Kind::over_degree, v, static_cast<std::size_t>(part_of[v]), inside});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

// Largest induced degree over all parts; vertices outside the partition and
// repeated entries are ignored.
inline std::size_t max_part_degree(const Graph& g, const Partition& partition) {
  std::vector<long long> part_of(g.id_bound(), -1);
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    for (VertexId v : partition.parts[p]) {
      if (g.is_live(v) && part_of[v] < 0) part_of[v] = static_cast<long long>(p);
    }
  }
  std::size_t best = 0;
  for (VertexId v : g.vertices()) {
    if (part_of[v] < 0) continue;
    std::size_t inside = 0;
    for (VertexId w : g.neighbors(v)) {
      if (part_of[w] == part_of[v]) ++inside;
    }
    best = std::max(best, inside);
  }
  return best;
}

}  // namespace defcol
