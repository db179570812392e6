// Copyright 2026 The efl-color Authors
//
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


#include <gtest/gtest.h>

#include "efl/efl.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace efl {
namespace {

int brute(const Instance& inst) {
  auto raw = testing::raw_core(testing::raw(inst));
  return testing::brute_chromatic(raw.vertices.size(), raw.edges);
}

CoreGraph graph_of(std::size_t size,
                   std::vector<std::pair<std::size_t, std::size_t>> edges) {
  CoreGraph g;
  for (std::size_t v = 0; v < size; ++v) {
    g.vertices.emplace_back("g" + std::to_string(v));
  }
  g.adjacency.resize(size);
  for (auto [a, b] : edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  g.edges = std::move(edges);
  return g;
}

TEST(ChromaticTest, FixtureCore) {
  Instance inst = reference_example();
  EXPECT_EQ(brute(inst), 4);
  EXPECT_EQ(chromatic_number_exact(core_subgraph(inst)), 4);
  EXPECT_TRUE(is_n_colorable(inst));
}

TEST(ChromaticTest, DenseCoresMatchChromaticIndexOfComplete) {
  // Frozen from the brute-force oracle: 3 for K4, 5 for K5.
  EXPECT_EQ(brute(gen_dense(4)), 3);
  EXPECT_EQ(brute(gen_dense(5)), 5);
  for (int n = 2; n <= 9; ++n) {
    int want = n % 2 == 0 ? n - 1 : n;
    if (n == 2) want = 1;
    EXPECT_EQ(chromatic_number_exact(core_subgraph(gen_dense(n))), want) << n;
  }
  EXPECT_TRUE(is_n_colorable(gen_dense(7)));
}

TEST(ChromaticTest, SmallGraphs) {
  EXPECT_EQ(chromatic_number_exact(graph_of(0, {})), 0);
  EXPECT_EQ(chromatic_number_exact(graph_of(3, {})), 1);
  // Odd cycle.
  EXPECT_EQ(chromatic_number_exact(graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})), 3);
  // Petersen graph.
  EXPECT_EQ(chromatic_number_exact(graph_of(
                10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                     {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}})),
            3);
}

TEST(ChromaticTest, MatchesBruteForceOnSmallCores) {
  std::size_t checked = 0;
  for (const auto& e : testing::random_corpus(200, 3, 8, 31)) {
    auto core = core_subgraph(e.inst);
    if (core.size() > 12) continue;
    EXPECT_EQ(chromatic_number_exact(core), brute(e.inst)) << e.label;
    ++checked;
  }
  EXPECT_GT(checked, 50u);
}

TEST(ChromaticTest, LimitIsEnforced) {
  auto core = core_subgraph(gen_dense(10));  // 45 vertices
  EXPECT_THROW(chromatic_number_exact(core), ResourceLimitError);
  EXPECT_EQ(chromatic_number_exact(core, 45), 9);
}

TEST(IdentityTest, FixtureAndDense) {
  auto fixture = theorem_identity(reference_example());
  EXPECT_EQ(fixture.lhs, 13);
  EXPECT_EQ(fixture.rhs, 13);
  EXPECT_TRUE(fixture.holds());
  EXPECT_FALSE(fixture.all_pairs_intersect);
  auto dense = theorem_identity(gen_dense(8));
  EXPECT_EQ(dense.rhs, 28);
  EXPECT_TRUE(dense.all_pairs_intersect);
  auto disjoint = theorem_identity(gen_disjoint(4));
  EXPECT_EQ(disjoint.lhs, 0);
  EXPECT_TRUE(disjoint.holds());
}

TEST(CorollaryBoundTest, FixtureRows) {
  auto report = corollary_bound_check(reference_example());
  EXPECT_TRUE(report.holds);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].m, 2);
  EXPECT_EQ(report.rows[0].weighted, 4);
  EXPECT_EQ(report.rows[1].weighted, 3);
  EXPECT_EQ(report.rows[2].weighted, 6);
  EXPECT_EQ(report.rows[2].limit, 15);
}

TEST(CorollaryBoundTest, DenseIsTightAtTwo) {
  auto report = corollary_bound_check(gen_dense(6));
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].weighted, report.rows[0].limit);
}

}  // namespace
}  // namespace efl
