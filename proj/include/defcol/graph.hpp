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

// Simple undirected graph with stable vertex ids, plus the edge-list text
// format.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace defcol {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Vertices are numbered 0..id_bound()-1 for the lifetime of the value.
// Deleting a vertex tombstones it; no id is ever reused or shifted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n), live_(n, true), live_count_(n) {
    if (n > std::numeric_limits<VertexId>::max()) {
      throw GraphError("vertex count exceeds id range");
    }
  }

  std::size_t id_bound() const noexcept { return adj_.size(); }
  std::size_t vertex_count() const noexcept { return live_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return live_count_ == 0; }

  bool is_live(VertexId v) const noexcept { return v < adj_.size() && live_[v]; }

  bool has_edge(VertexId u, VertexId v) const noexcept {
    return is_live(u) && is_live(v) && adj_[u].contains(v);
  }

  std::size_t degree(VertexId v) const {
    require_live(v);
    return adj_[v].size();
  }

  const std::set<VertexId>& neighbors(VertexId v) const {
    require_live(v);
    return adj_[v];
  }

  void add_edge(VertexId u, VertexId v) {
    require_live(u);
    require_live(v);
    if (u == v) {
      throw GraphError("self-loop on vertex " + std::to_string(u));
    }
    if (!adj_[u].insert(v).second) {
      throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj_[v].insert(u);
    ++edge_count_;
  }

  void delete_edge(VertexId u, VertexId v) {
    if (!has_edge(u, v)) {
      throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) + " absent");
    }
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edge_count_;
  }

  void delete_vertex(VertexId v) {
    require_live(v);
    for (VertexId w : adj_[v]) {
      adj_[w].erase(v);
    }
    edge_count_ -= adj_[v].size();
    adj_[v].clear();
    live_[v] = false;
    --live_count_;
  }

  // Brings a tombstoned id back as an isolated vertex.
  void restore_vertex(VertexId v) {
    if (v >= adj_.size()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    if (live_[v]) {
      throw GraphError("vertex " + std::to_string(v) + " is already live");
    }
    live_[v] = true;
    ++live_count_;
  }

  // Live vertices in increasing id order.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_count_);
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (live_[v]) out.push_back(v);
    }
    return out;
  }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
      for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) {
        out.emplace_back(u, *it);
      }
    }
    return out;
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nb : adj_) best = std::max(best, nb.size());
    return best;
  }

  // Same id space; every vertex outside `keep` is tombstoned.
  Graph induced_subgraph(const std::vector<VertexId>& keep) const {
    Graph g(adj_.size());
    std::vector<bool> in(adj_.size(), false);
    for (VertexId v : keep) {
      require_live(v);
      in[v] = true;
    }
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (!in[v]) {
        g.live_[v] = false;
        --g.live_count_;
      }
    }
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (!in[v]) continue;
      for (VertexId w : adj_[v]) {
        if (in[w] && v < w) {
          g.adj_[v].insert(w);
          g.adj_[w].insert(v);
          ++g.edge_count_;
        }
      }
    }
    return g;
  }

  // Full scan of the structural invariants: symmetry, no loops, cached m,
  // tombstoned vertices isolated.
  bool check_invariants() const {
    std::size_t half_sum = 0;
    std::size_t live = 0;
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (live_[v]) ++live;
      if (!live_[v] && !adj_[v].empty()) return false;
      for (VertexId w : adj_[v]) {
        if (w == v || w >= adj_.size() || !live_[w]) return false;
        if (!adj_[w].contains(v)) return false;
      }
      half_sum += adj_[v].size();
    }
    return half_sum % 2 == 0 && half_sum / 2 == edge_count_ && live == live_count_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.live_ == b.live_ && a.adj_ == b.adj_;
  }

 private:
  void require_live(VertexId v) const {
    if (v >= adj_.size()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    if (!live_[v]) {
      throw GraphError("vertex " + std::to_string(v) + " was deleted");
    }
  }

  std::vector<std::set<VertexId>> adj_;
  std::vector<bool> live_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

namespace detail {

// Largest id accepted from text input.
inline constexpr std::uint64_t kMaxParsedId = std::uint64_t{1} << 28;

struct DataLine {
  std::size_t number;
  std::vector<std::uint64_t> values;
};

inline std::vector<std::uint64_t> parse_integers(std::string_view text, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    std::string_view tok = text.substr(i, j - i);
    std::uint64_t value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') {
        throw ParseError(line_no, "non-integer token '" + std::string(tok) + "'");
      }
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > kMaxParsedId) {
        throw ParseError(line_no, "integer '" + std::string(tok) + "' too large");
      }
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

// Reads the edge-list format: an optional "n m" header followed by "u v"
// lines. '#' lines and blank lines are ignored. The first data line is taken
// as a header exactly when the number of data lines after it equals its
// second value; otherwise every line is an edge and n = 1 + max id.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<detail::DataLine> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view sv(raw);
    std::size_t first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || sv[first] == '#') continue;
    auto values = detail::parse_integers(sv, line_no);
    if (values.size() != 2) {
      throw ParseError(line_no, "expected two integers, found " + std::to_string(values.size()));
    }
    lines.push_back({line_no, std::move(values)});
  }

  std::size_t begin = 0;
  std::size_t n = 0;
  bool has_header = !lines.empty() && lines.front().values[1] == lines.size() - 1;
  if (has_header) {
    n = lines.front().values[0];
    begin = 1;
  } else {
    for (const auto& l : lines) {
      n = std::max<std::size_t>(n, std::max(l.values[0], l.values[1]) + 1);
    }
  }

  Graph g(n);
  for (std::size_t i = begin; i < lines.size(); ++i) {
    const auto& l = lines[i];
    std::uint64_t u = l.values[0];
    std::uint64_t v = l.values[1];
    if (u >= n || v >= n) {
      throw ParseError(l.number, "vertex id " + std::to_string(std::max(u, v)) +
                                     " not below vertex count " + std::to_string(n));
    }
    if (u == v) {
      throw ParseError(l.number, "self-loop on vertex " + std::to_string(u));
    }
    if (g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
      throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

// Header "id_bound m" followed by the live edges in lexicographic order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.id_bound() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace defcol
