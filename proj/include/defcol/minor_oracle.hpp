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

// Exhaustive searches for small graphs: clique-minor containment and the
// minimum achievable defect with a fixed number of parts. Both are
// exponential and meant as ground truth for tests, not for production use.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

// k pairwise disjoint, connected branch sets with an edge between every
// pair: a K_k minor.
struct MinorModel {
  std::vector<std::vector<VertexId>> branch_sets;
};

enum class MinorStatus { yes, no, timeout };

struct MinorSearchResult {
  MinorStatus status;
  std::optional<MinorModel> model;  // set iff status == yes
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultMinorBudget = 50'000'000;
inline constexpr std::size_t kMinDefectMaxVertices = 14;

// Empty string when `model` is a valid K_k model in g, otherwise the reason
// it is not.
inline std::string check_minor_model(const Graph& g, const MinorModel& model, std::size_t k) {
  if (model.branch_sets.size() != k) {
    return "expected " + std::to_string(k) + " branch sets, found " +
           std::to_string(model.branch_sets.size());
  }
  std::vector<long long> owner(g.id_bound(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& set = model.branch_sets[i];
    if (set.empty()) return "branch set " + std::to_string(i) + " is empty";
    for (VertexId v : set) {
      if (!g.is_live(v)) return "branch set " + std::to_string(i) + " holds non-vertex " + std::to_string(v);
      if (owner[v] >= 0) return "vertex " + std::to_string(v) + " is in two branch sets";
      owner[v] = static_cast<long long>(i);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& set = model.branch_sets[i];
    std::vector<VertexId> stack{set.front()};
    std::vector<char> seen(g.id_bound(), 0);
    seen[set.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++reached;
      for (VertexId w : g.neighbors(v)) {
        if (owner[w] == static_cast<long long>(i) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != set.size()) return "branch set " + std::to_string(i) + " is not connected";
  }
  std::vector<char> linked(k * k, 0);
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      linked[static_cast<std::size_t>(owner[u]) * k + static_cast<std::size_t>(owner[v])] = 1;
      linked[static_cast<std::size_t>(owner[v]) * k + static_cast<std::size_t>(owner[u])] = 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!linked[i * k + j]) {
        return "branch sets " + std::to_string(i) + " and " + std::to_string(j) + " are not adjacent";
      }
    }
  }
  return {};
}

namespace detail {

// Backtracking over "vertex -> branch set or unused", on one connected
// component relabelled to 0..n-1. Vertices are decided in descending degree
// order; branch-set labels are opened in increasing order to break symmetry.
class CliqueMinorSearch {
 public:
  CliqueMinorSearch(std::vector<std::vector<int>> adj, std::size_t k, std::uint64_t budget,
                    std::uint64_t spent)
      : adj_(std::move(adj)), n_(adj_.size()), k_(static_cast<int>(k)), budget_(budget),
        expansions_(spent), label_(n_, kUndecided) {
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = static_cast<int>(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return adj_[a].size() > adj_[b].size(); });
  }

  // 1 found, 0 exhausted, -1 budget ran out.
  int run() { return search(0, 0); }

  const std::vector<int>& labels() const { return label_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  static constexpr int kUndecided = -2;
  static constexpr int kUnused = -1;

  int search(std::size_t pos, int used) {
    if (++expansions_ > budget_) return -1;
    if (used == k_ && complete()) return 1;
    if (pos == n_) return 0;
    if (static_cast<std::size_t>(k_ - used) > n_ - pos) return 0;

    const int v = order_[pos];
    const int top = std::min(used + 1, k_);
    for (int lab = 0; lab < top; ++lab) {
      label_[v] = lab;
      if (feasible()) {
        int r = search(pos + 1, std::max(used, lab + 1));
        if (r != 0) return r;
      }
    }
    label_[v] = kUnused;
    if (feasible()) {
      int r = search(pos + 1, used);
      if (r != 0) return r;
    }
    label_[v] = kUndecided;
    return 0;
  }

  // Every opened branch set can still be made connected through undecided
  // vertices, and every pair of opened sets can still be linked.
  bool feasible() {
    std::vector<int> firsts(static_cast<std::size_t>(k_), -1);
    std::vector<int> counts(static_cast<std::size_t>(k_), 0);
    for (std::size_t v = 0; v < n_; ++v) {
      if (label_[v] >= 0) {
        if (firsts[label_[v]] < 0) firsts[label_[v]] = static_cast<int>(v);
        ++counts[label_[v]];
      }
    }
    for (int lab = 0; lab < k_; ++lab) {
      if (firsts[lab] < 0) continue;
      if (reach(firsts[lab], lab, true) < counts[lab]) return false;
    }
    for (int a = 0; a < k_; ++a) {
      if (firsts[a] < 0) continue;
      for (int b = a + 1; b < k_; ++b) {
        if (firsts[b] < 0) continue;
        if (!may_link(a, b)) return false;
      }
    }
    return true;
  }

  // Members of `lab` reachable from `start` through `lab` vertices and,
  // when `through_undecided`, undecided ones.
  int reach(int start, int lab, bool through_undecided) {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int members = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (label_[v] == lab) ++members;
      for (int w : adj_[v]) {
        if (seen[w]) continue;
        if (label_[w] == lab || (through_undecided && label_[w] == kUndecided)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return members;
  }

  bool may_link(int a, int b) const {
    auto open = [&](int v, int lab) { return label_[v] == lab || label_[v] == kUndecided; };
    for (std::size_t v = 0; v < n_; ++v) {
      if (!open(static_cast<int>(v), a)) continue;
      for (int w : adj_[v]) {
        if (open(w, b)) return true;
      }
    }
    return false;
  }

  bool complete() {
    for (int lab = 0; lab < k_; ++lab) {
      int first = -1;
      int count = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (label_[v] == lab) {
          if (first < 0) first = static_cast<int>(v);
          ++count;
        }
      }
      if (first < 0 || reach(first, lab, false) < count) return false;
    }
    std::vector<char> linked(static_cast<std::size_t>(k_ * k_), 0);
    for (std::size_t v = 0; v < n_; ++v) {
      if (label_[v] < 0) continue;
      for (int w : adj_[v]) {
        if (label_[w] >= 0 && label_[w] != label_[v]) linked[label_[v] * k_ + label_[w]] = 1;
      }
    }
    for (int a = 0; a < k_; ++a) {
      for (int b = a + 1; b < k_; ++b) {
        if (!linked[a * k_ + b]) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<int>> adj_;
  std::size_t n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t expansions_;
  std::vector<int> order_;
  std::vector<int> label_;
};

struct Simplified {
  Graph core;
  std::vector<std::array<VertexId, 3>> suppressed;  // {v, a, b}: v contracted into a
  std::optional<MinorModel> clique;                  // a K_k found in `core`
};

// Reductions that keep the answer for K_k (k >= 3). A simplicial vertex of
// degree < k-1 is never needed by a model; one of degree >= k-1 closes a
// K_k outright. For k >= 4 a degree-2 vertex cannot be a branch set on its
// own, so contracting one of its edges is safe.
inline Simplified simplify_for_clique_minor(const Graph& g, std::size_t k) {
  Simplified out{g, {}, std::nullopt};
  Graph& core = out.core;
  std::vector<VertexId> queue = core.vertices();
  std::reverse(queue.begin(), queue.end());
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (!core.is_live(v)) continue;
    const std::vector<VertexId> nb(core.neighbors(v).begin(), core.neighbors(v).end());
    bool simplicial = true;
    for (std::size_t i = 0; i < nb.size() && simplicial; ++i) {
      for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j) {
        simplicial = core.has_edge(nb[i], nb[j]);
      }
    }
    if (simplicial && nb.size() + 1 >= k) {
      MinorModel model;
      model.branch_sets.push_back({v});
      for (std::size_t i = 0; i + 1 < k; ++i) model.branch_sets.push_back({nb[i]});
      out.clique = std::move(model);
      return out;
    }
    if (simplicial) {
      core.delete_vertex(v);
    } else if (k >= 4 && nb.size() == 2) {
      core.delete_vertex(v);
      core.add_edge(nb[0], nb[1]);
      out.suppressed.push_back({v, nb[0], nb[1]});
    } else {
      continue;
    }
    queue.insert(queue.end(), nb.begin(), nb.end());
  }
  return out;
}

// Lifts a model of the simplified graph back to the original one.
inline MinorModel expand_model(MinorModel model, const Simplified& simplified, std::size_t id_bound) {
  std::vector<int> owner(id_bound, -1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    for (VertexId v : model.branch_sets[i]) owner[v] = static_cast<int>(i);
  }
  for (auto it = simplified.suppressed.rbegin(); it != simplified.suppressed.rend(); ++it) {
    const auto [v, a, b] = *it;
    if (owner[a] >= 0) {
      owner[v] = owner[a];
      model.branch_sets[static_cast<std::size_t>(owner[a])].push_back(v);
    }
  }
  for (auto& set : model.branch_sets) std::sort(set.begin(), set.end());
  return model;
}

}  // namespace detail

// Exact test for a K_k minor. Safe reductions shrink the graph first, then a
// backtracking search runs per connected component. `budget` caps the number
// of search-node expansions.
inline MinorSearchResult has_clique_minor(const Graph& g, std::size_t k,
                                          std::uint64_t budget = kDefaultMinorBudget) {
  if (k < 1) throw std::invalid_argument("has_clique_minor: k must be at least 1");
  if (budget == 0) throw std::invalid_argument("has_clique_minor: budget must be positive");

  if (k == 1) {
    if (g.empty()) return {MinorStatus::no, std::nullopt, 0};
    return {MinorStatus::yes, MinorModel{{{g.vertices().front()}}}, 0};
  }
  if (k == 2) {
    if (g.edge_count() == 0) return {MinorStatus::no, std::nullopt, 0};
    auto [u, v] = g.edges().front();
    return {MinorStatus::yes, MinorModel{{{u}, {v}}}, 0};
  }

  const detail::Simplified simplified = detail::simplify_for_clique_minor(g, k);
  if (simplified.clique) {
    return {MinorStatus::yes, detail::expand_model(*simplified.clique, simplified, g.id_bound()), 0};
  }
  const Graph& core = simplified.core;

  std::vector<char> seen(core.id_bound(), 0);
  std::uint64_t spent = 0;
  bool timed_out = false;
  for (VertexId root : core.vertices()) {
    if (seen[root]) continue;
    std::vector<VertexId> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : core.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    if (comp.size() < k) continue;
    std::sort(comp.begin(), comp.end());
    std::vector<int> local(core.id_bound(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    std::size_t m = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : core.neighbors(comp[i])) adj[i].push_back(local[w]);
      m += adj[i].size();
    }
    // A K_k minor needs at least k(k-1)/2 edges.
    if (m / 2 < k * (k - 1) / 2) continue;

    detail::CliqueMinorSearch search(std::move(adj), k, budget, spent);
    int r = search.run();
    spent = search.expansions();
    if (r == 1) {
      MinorModel model;
      model.branch_sets.resize(k);
      const auto& labels = search.labels();
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (labels[i] >= 0) model.branch_sets[static_cast<std::size_t>(labels[i])].push_back(comp[i]);
      }
      return {MinorStatus::yes, detail::expand_model(std::move(model), simplified, g.id_bound()),
              spent};
    }
    if (r < 0) {
      timed_out = true;
      break;
    }
  }
  return {timed_out ? MinorStatus::timeout : MinorStatus::no, std::nullopt, spent};
}

class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

class MinDefectSearch {
 public:
  MinDefectSearch(std::vector<std::vector<int>> adj, std::size_t parts, std::size_t incumbent)
      : adj_(std::move(adj)), n_(adj_.size()), parts_(parts), best_(incumbent),
        part_of_(n_, -1), inside_(n_, 0) {}

  std::size_t run() {
    if (n_ > 0) search(0, 0, 0);
    return best_;
  }

 private:
  // Vertices are decided in index order; a vertex may open at most one new
  // part, so part labels are canonical.
  void search(std::size_t v, std::size_t opened, std::size_t current) {
    if (current >= best_) return;
    if (v == n_) {
      best_ = current;
      return;
    }
    const std::size_t top = std::min(opened + 1, parts_);
    for (std::size_t p = 0; p < top; ++p) {
      std::size_t worst = current;
      std::size_t own = 0;
      for (int w : adj_[v]) {
        if (part_of_[w] == static_cast<int>(p)) {
          ++own;
          worst = std::max(worst, inside_[w] + 1);
        }
      }
      worst = std::max(worst, own);
      if (worst >= best_) continue;
      part_of_[v] = static_cast<int>(p);
      inside_[v] = own;
      for (int w : adj_[v]) {
        if (part_of_[w] == static_cast<int>(p)) ++inside_[w];
      }
      search(v + 1, std::max(opened, p + 1), worst);
      for (int w : adj_[v]) {
        if (part_of_[w] == static_cast<int>(p)) --inside_[w];
      }
      part_of_[v] = -1;
      inside_[v] = 0;
      if (best_ == 0) return;
    }
  }

  std::vector<std::vector<int>> adj_;
  std::size_t n_;
  std::size_t parts_;
  std::size_t best_;
  std::vector<int> part_of_;
  std::vector<std::size_t> inside_;
};

}  // namespace detail

// Minimum, over all partitions of V(G) into `parts` (possibly empty) sets,
// of the largest induced degree. min_defect(G, 1) is the maximum degree.
inline std::size_t min_defect(const Graph& g, std::size_t parts,
                              std::size_t max_vertices = kMinDefectMaxVertices) {
  if (parts < 1) throw std::invalid_argument("min_defect: need at least one part");
  if (g.vertex_count() > max_vertices) {
    throw GuardExceeded("min_defect: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the exhaustive-search cap of " +
                        std::to_string(max_vertices));
  }
  const auto verts = g.vertices();
  std::vector<int> local(g.id_bound(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (VertexId w : g.neighbors(verts[i])) adj[i].push_back(local[w]);
  }
  const std::size_t delta = g.max_degree();
  // The one-part partition achieves delta; the search looks for anything
  // strictly better.
  detail::MinDefectSearch search(std::move(adj), parts, delta);
  return search.run();
}

}  // namespace defcol
