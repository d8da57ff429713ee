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

#include "defcol/engine.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "defcol/generators.hpp"
#include "defcol/json_io.hpp"

namespace defcol {
namespace {

using Parts = std::vector<std::vector<VertexId>>;

Graph path3() { return parse_edge_list("3 2\n0 1\n1 2\n"); }
Graph triangle() { return parse_edge_list("3 3\n0 1\n0 2\n1 2\n"); }
Graph cycle(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

// Reference peel: call find_reduction on a working copy until it returns
// nothing.
std::pair<std::vector<ReductionStep>, Graph> naive_reduce(const Graph& g, std::size_t t,
                                                          std::uint64_t s) {
  Graph work = g;
  std::vector<ReductionStep> steps;
  while (auto step = find_reduction(work, t, s)) {
    apply_step(work, *step);
    steps.push_back(*step);
  }
  return {steps, work};
}

TEST(FindReduction, PathPrefersLowestVertex) {
  auto step = find_reduction(path3(), 2, 5);
  ASSERT_TRUE(step.has_value());
  ASSERT_TRUE(std::holds_alternative<VertexDeletion>(*step));
  EXPECT_EQ(std::get<VertexDeletion>(*step), (VertexDeletion{0, {1}}));
}

TEST(FindReduction, TriangleWithForcedSmallS) {
  EXPECT_FALSE(find_reduction(triangle(), 2, 1).has_value());
}

TEST(FindReduction, NullGraph) {
  EXPECT_FALSE(find_reduction(Graph{}, 0, 2).has_value());
  EXPECT_FALSE(find_reduction(Graph{}, 5, 100).has_value());
}

TEST(FindReduction, EdgeStepOnCycle) {
  auto step = find_reduction(cycle(5), 2, 3);
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(std::get<EdgeDeletion>(*step), (EdgeDeletion{0, 1}));
  // Both ends need degree < s; with s = 2 nothing qualifies.
  EXPECT_FALSE(find_reduction(cycle(5), 2, 2).has_value());
}

TEST(Reduce, PathPeelsInIdOrder) {
  auto result = reduce(path3(), 2, 5);
  ASSERT_TRUE(std::holds_alternative<ReductionTrace>(result));
  const auto& trace = std::get<ReductionTrace>(result);
  std::vector<ReductionStep> expect{VertexDeletion{0, {1}}, VertexDeletion{1, {2}},
                                    VertexDeletion{2, {}}};
  EXPECT_EQ(trace.steps, expect);
  EXPECT_EQ(trace.id_bound, 3u);
}

TEST(Reduce, TriangleGetsStuck) {
  auto result = reduce(triangle(), 2, 1);
  ASSERT_TRUE(std::holds_alternative<Stuck>(result));
  const auto& stuck = std::get<Stuck>(result);
  EXPECT_EQ(stuck.remaining, triangle());
  EXPECT_EQ(stuck.steps_taken, 0u);
}

TEST(Reduce, NullGraphEmptyTrace) {
  auto result = reduce(Graph{}, 0, 2);
  ASSERT_TRUE(std::holds_alternative<ReductionTrace>(result));
  EXPECT_TRUE(std::get<ReductionTrace>(result).steps.empty());
}

// The incremental peel must agree step for step with the naive definition.
TEST(Reduce, MatchesNaivePeel) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = seed % 17;
    const double p = 0.1 + 0.05 * static_cast<double>(seed % 13);
    Graph g = gen_random(n, p, seed);
    const std::size_t t = seed % 5;
    const std::uint64_t s = 1 + seed % 7;
    auto [naive_steps, naive_rest] = naive_reduce(g, t, s);
    auto result = reduce(g, t, s);
    if (naive_rest.empty()) {
      ASSERT_TRUE(std::holds_alternative<ReductionTrace>(result)) << "seed " << seed;
      EXPECT_EQ(std::get<ReductionTrace>(result).steps, naive_steps) << "seed " << seed;
      EXPECT_LE(naive_steps.size(), g.vertex_count() + g.edge_count());
    } else {
      ASSERT_TRUE(std::holds_alternative<Stuck>(result)) << "seed " << seed;
      EXPECT_EQ(std::get<Stuck>(result).remaining, naive_rest) << "seed " << seed;
      EXPECT_EQ(std::get<Stuck>(result).steps_taken, naive_steps.size());
    }
  }
}

TEST(Reduce, StepsRespectThresholds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_ktree(40, 3, seed);
    auto result = reduce(g, 4, 12);
    ASSERT_TRUE(std::holds_alternative<ReductionTrace>(result));
    Graph work = g;
    for (const auto& step : std::get<ReductionTrace>(result).steps) {
      if (const auto* vd = std::get_if<VertexDeletion>(&step)) {
        EXPECT_LT(vd->neighbors.size(), 4u);
        EXPECT_EQ(work.degree(vd->v), vd->neighbors.size());
      } else {
        const auto& ed = std::get<EdgeDeletion>(step);
        EXPECT_LT(work.degree(ed.u), 12u);
        EXPECT_LT(work.degree(ed.v), 12u);
      }
      const std::size_t before = work.vertex_count() + work.edge_count();
      apply_step(work, step);
      EXPECT_LT(work.vertex_count() + work.edge_count(), before);
    }
    EXPECT_TRUE(work.empty());
  }
}

TEST(Replay, PathExample) {
  auto trace = std::get<ReductionTrace>(reduce(path3(), 2, 5));
  Partition p = replay(trace, 2, 5);
  EXPECT_EQ(p.parts, (Parts{{0, 2}, {1}}));
  EXPECT_EQ(p.defect_bound, 5u);
  EXPECT_TRUE(verify_partition(path3(), p, 1).ok);
}

TEST(Replay, NullGraphGivesEmptyParts) {
  ReductionTrace empty{0, {}};
  Partition p = replay(empty, 3, 2);
  EXPECT_EQ(p.parts, (Parts{{}, {}, {}}));
}

TEST(Replay, StarSeparatesCentre) {
  Graph star = construct_sharp(2, 2);
  auto trace = std::get<ReductionTrace>(reduce(star, 2, 5));
  Partition p = replay(trace, 2, 5);
  EXPECT_EQ(p.parts, (Parts{{3}, {0, 1, 2}}));
  EXPECT_EQ(max_part_degree(star, p), 0u);
}

TEST(Replay, RejectsCorruptTraces) {
  // Vertex 1 restored with a neighbour that is never restored.
  ReductionTrace dangling{3, {VertexDeletion{1, {2}}}};
  EXPECT_THROW(replay(dangling, 2, 5), CorruptTraceError);

  // Three mutually adjacent vertices restored with t = 2: no part fits.
  ReductionTrace crowded{3, {VertexDeletion{0, {1, 2}}, VertexDeletion{1, {2}},
                             VertexDeletion{2, {}}}};
  EXPECT_THROW(replay(crowded, 2, 5), CorruptTraceError);

  // An edge restored inside a part whose ends already sit at the bound.
  ReductionTrace heavy{3, {EdgeDeletion{0, 1}, VertexDeletion{0, {}}, VertexDeletion{1, {}}}};
  EXPECT_THROW(replay(heavy, 1, 1), CorruptTraceError);

  EXPECT_THROW(replay(ReductionTrace{1, {VertexDeletion{0, {}}}}, 0, 2), std::invalid_argument);
}

// After every restored step, each part restricted to the restored vertices
// induces degree at most s - 1 in the graph at that depth.
TEST(Replay, IncrementalBoundHoldsAtEveryStep) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = seed % 2 ? gen_ktree(30, 2, seed) : gen_random(25, 0.2, seed);
    const std::size_t t = 3;
    const std::uint64_t s = 4;
    auto result = reduce(g, t, s);
    if (!std::holds_alternative<ReductionTrace>(result)) continue;
    std::size_t calls = 0;
    auto observer = [&](const ReplayState& st) {
      ++calls;
      ASSERT_TRUE(st.graph.check_invariants());
      for (VertexId v : st.graph.vertices()) {
        ASSERT_GE(st.part_of[v], 0);
        std::size_t inside = 0;
        for (VertexId w : st.graph.neighbors(v)) {
          if (st.part_of[w] == st.part_of[v]) ++inside;
        }
        ASSERT_LE(inside, s - 1);
      }
    };
    const auto& trace = std::get<ReductionTrace>(result);
    replay(trace, t, s, observer);
    EXPECT_EQ(calls, trace.steps.size());
  }
}

TEST(DefectiveColoring, ForestWithDefaults) {
  Graph g = gen_forest(50, 11);
  auto outcome = defective_coloring(g, 2);
  ASSERT_TRUE(std::holds_alternative<Colored>(outcome));
  const auto& c = std::get<Colored>(outcome);
  EXPECT_EQ(c.params.s, 317u);
  EXPECT_EQ(c.partition.parts.size(), 2u);
  EXPECT_TRUE(verify_partition(g, c.partition, c.params.s).ok);
  EXPECT_LE(max_part_degree(g, c.partition), 316u);
}

TEST(DefectiveColoring, TZero) {
  auto stuck = defective_coloring(construct_sharp(1, 1), 0);
  ASSERT_TRUE(std::holds_alternative<StuckOutcome>(stuck));
  EXPECT_EQ(std::get<StuckOutcome>(stuck).stuck.remaining.vertex_count(), 1u);

  auto ok = defective_coloring(Graph{}, 0);
  ASSERT_TRUE(std::holds_alternative<Colored>(ok));
  EXPECT_TRUE(std::get<Colored>(ok).partition.parts.empty());

  // Edges can be peeled, but isolated vertices cannot.
  auto edge = defective_coloring(parse_edge_list("2 1\n0 1\n"), 0);
  ASSERT_TRUE(std::holds_alternative<StuckOutcome>(edge));
  EXPECT_EQ(std::get<StuckOutcome>(edge).stuck.remaining.vertex_count(), 2u);
}

TEST(DefectiveColoring, SharpPath) {
  auto outcome = defective_coloring(construct_sharp(1, 2), 2);
  ASSERT_TRUE(std::holds_alternative<Colored>(outcome));
  EXPECT_EQ(std::get<Colored>(outcome).partition.parts.size(), 2u);
}

TEST(DefectiveColoring, OverrideExposesStuck) {
  auto outcome = defective_coloring(triangle(), 2, ColoringConfig{4.0, std::nullopt, 1});
  ASSERT_TRUE(std::holds_alternative<StuckOutcome>(outcome));
  auto j = outcome_to_json(outcome);
  EXPECT_EQ(j.dump(),
            R"({"stuck":true,"remaining_vertices":[0,1,2],"hint":"K_{3} minor present if parameters valid"})");
}

// Whatever the input, a returned partition verifies: only totality depends
// on the excluded-minor hypothesis.
TEST(DefectiveColoring, SoundOnArbitraryInputs) {
  std::size_t colored = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = gen_random(5 + seed % 20, 0.1 + 0.07 * static_cast<double>(seed % 12), seed);
    const std::size_t t = 1 + seed % 4;
    ColoringConfig cfg;
    if (seed % 3 == 0) cfg.s_override = 1 + seed % 5;
    auto outcome = defective_coloring(g, t, cfg);
    if (const auto* c = std::get_if<Colored>(&outcome)) {
      ++colored;
      auto report = verify_partition(g, c->partition, c->params.s);
      EXPECT_TRUE(report.ok) << "seed " << seed;
      EXPECT_EQ(c->partition.parts.size(), t);
    }
  }
  EXPECT_GT(colored, 100u);
}

TEST(DefectiveColoring, Deterministic) {
  Graph g = gen_ktree(60, 3, 5);
  auto a = outcome_to_json(defective_coloring(g, 4)).dump();
  auto b = outcome_to_json(defective_coloring(g, 4)).dump();
  EXPECT_EQ(a, b);
}

TEST(VerifyPartition, Examples) {
  Graph p = path3();
  EXPECT_TRUE(verify_partition(p, Partition{{{0, 2}, {1}}, 1}, 1).ok);

  auto whole = verify_partition(p, Partition{{{0, 1, 2}, {}}, 2}, 2);
  EXPECT_FALSE(whole.ok);
  ASSERT_EQ(whole.violations.size(), 1u);
  EXPECT_EQ(whole.violations[0].kind, Violation::Kind::over_degree);
  EXPECT_EQ(whole.violations[0].vertex, 1u);
  EXPECT_EQ(whole.violations[0].induced_degree, 2u);

  auto missing = verify_partition(p, Partition{{{0}, {1}}, 5}, 5);
  EXPECT_FALSE(missing.ok);
  ASSERT_EQ(missing.violations.size(), 1u);
  EXPECT_EQ(missing.violations[0].kind, Violation::Kind::uncovered);
  EXPECT_EQ(missing.violations[0].vertex, 2u);
}

TEST(VerifyPartition, MalformedInputs) {
  Graph p = path3();
  auto dup = verify_partition(p, Partition{{{0, 2}, {1, 2}}, 5}, 5);
  EXPECT_FALSE(dup.ok);
  EXPECT_EQ(dup.violations[0].kind, Violation::Kind::duplicated);

  auto stray = verify_partition(p, Partition{{{0, 2, 9}, {1}}, 5}, 5);
  EXPECT_FALSE(stray.ok);
  EXPECT_EQ(stray.violations[0].kind, Violation::Kind::not_a_vertex);
  EXPECT_FALSE(stray.violations[0].describe().empty());
}

TEST(PartitionJson, Shape) {
  auto outcome = defective_coloring(path3(), 2, ColoringConfig{4.0, 1.5, std::nullopt});
  auto j = outcome_to_json(outcome);
  EXPECT_EQ(j.dump(), R"({"t":2,"s":5,"r":1.5,"parts":[[0,2],[1]],"trace_len":3})");
  Partition back = partition_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.parts, (Parts{{0, 2}, {1}}));
  EXPECT_EQ(back.defect_bound, 5u);
  EXPECT_THROW(partition_from_json(nlohmann::json::parse(R"({"parts":[[-1]]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace defcol
