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

#include "defcol/graph.hpp"

#include <gtest/gtest.h>

#include <string>

#include "defcol/generators.hpp"

namespace defcol {
namespace {

Graph path3() { return parse_edge_list("3 2\n0 1\n1 2\n"); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

TEST(ParseEdgeList, HeaderAndEdges) {
  Graph g = parse_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_TRUE(g.check_invariants());
}

TEST(ParseEdgeList, EmptyAndNullHeader) {
  EXPECT_EQ(parse_edge_list("").vertex_count(), 0u);
  Graph g = parse_edge_list("0 0\n");
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseEdgeList, HeaderWithIsolatedVertices) {
  Graph g = parse_edge_list("5 1\n0 1\n");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.degree(4), 0u);
}

TEST(ParseEdgeList, HeaderlessUsesMaxId) {
  Graph g = parse_edge_list("# comment\n0 1\n\n1 4\n2 3\n");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 3u);
}

// "0 1" followed by exactly one line matches the header shape.
TEST(ParseEdgeList, HeaderShapeWins) {
  EXPECT_THROW(parse_edge_list("0 1\n1 4\n"), ParseError);
  Graph g = parse_edge_list("5 1\n1 4\n");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, SelfLoopNamesLine) {
  try {
    parse_edge_list("2 1\n0 0");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(ParseEdgeList, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 0\n"), 3u);      // duplicate
  EXPECT_EQ(line_of("3 2\n0 1\n# x\n1 a\n"), 4u);  // non-integer
  EXPECT_EQ(line_of("2 1\n0 5\n"), 2u);           // id >= n
  EXPECT_EQ(line_of("0 1 2\n"), 1u);              // wrong arity
  EXPECT_EQ(line_of("-1 2\n"), 1u);
}

TEST(Graph, Degree) {
  Graph p = path3();
  EXPECT_EQ(degree(p, 1), 2u);
  EXPECT_EQ(degree(p, 0), 1u);
  Graph k4 = complete(4);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3u);
  Graph empty(3);
  EXPECT_EQ(empty.degree(2), 0u);
  EXPECT_THROW(empty.degree(3), GraphError);
}

TEST(Graph, DeleteVertexKeepsIds) {
  Graph k3 = complete(3);
  k3.delete_vertex(0);
  EXPECT_EQ(k3.edge_count(), 1u);
  EXPECT_TRUE(k3.has_edge(1, 2));
  EXPECT_EQ(k3.vertex_count(), 2u);
  EXPECT_EQ(k3.id_bound(), 3u);
  EXPECT_FALSE(k3.is_live(0));
  EXPECT_THROW(k3.degree(0), GraphError);
  EXPECT_THROW(k3.delete_vertex(0), GraphError);
  EXPECT_TRUE(k3.check_invariants());
}

TEST(Graph, DeleteEdge) {
  Graph p = path3();
  p.delete_edge(0, 1);
  EXPECT_EQ(p.edge_count(), 1u);
  EXPECT_TRUE(p.has_edge(1, 2));
  EXPECT_EQ(p.degree(0), 0u);
  EXPECT_TRUE(p.is_live(0));

  Graph q = path3();
  EXPECT_THROW(q.delete_edge(0, 2), GraphError);
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), GraphError);
}

TEST(Graph, RestoreVertex) {
  Graph g = path3();
  g.delete_vertex(1);
  EXPECT_THROW(g.restore_vertex(0), GraphError);
  g.restore_vertex(1);
  EXPECT_EQ(g.degree(1), 0u);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_TRUE(g.check_invariants());
}

TEST(Graph, InducedSubgraph) {
  Graph k4 = complete(4);
  Graph h = k4.induced_subgraph({0, 2, 3});
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_FALSE(h.is_live(1));
  EXPECT_TRUE(h.check_invariants());
}

TEST(EdgeListFormat, SortedOutput) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  EXPECT_EQ(to_edge_list(g), "4 3\n0 1\n0 2\n1 3\n");
}

// Any generated graph survives serialisation unchanged, and parsing keeps
// the structural invariants.
TEST(EdgeListFormat, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::size_t n = seed % 23;
    Graph g = gen_random(n, 0.05 * static_cast<double>(seed % 11), seed);
    Graph back = parse_edge_list(to_edge_list(g));
    ASSERT_TRUE(back.check_invariants());
    EXPECT_EQ(back, g) << "seed " << seed;
  }
}

}  // namespace
}  // namespace defcol
