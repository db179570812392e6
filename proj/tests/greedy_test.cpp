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

std::vector<int> counts_at(const HypothesisReport& r, int d) {
  std::vector<int> out;
  for (const auto& row : r.per_clique) {
    if (row.d == d) out.push_back(row.count);
  }
  return out;
}

TEST(GreedyTest, FixtureOrderAndColors) {
  Instance inst = reference_example();
  auto result = run_greedy(inst);
  ASSERT_TRUE(result.ok());
  // Degree order v1, v16, then v6 v7 v9 v19 by incidence.
  EXPECT_EQ(result.coloring.at(VertexId("v1")), 1);
  EXPECT_EQ(result.coloring.at(VertexId("v16")), 2);
  EXPECT_EQ(result.coloring.at(VertexId("v6")), 3);
  EXPECT_EQ(result.coloring.at(VertexId("v7")), 4);
  EXPECT_EQ(result.coloring.at(VertexId("v9")), 3);
  EXPECT_EQ(result.coloring.at(VertexId("v19")), 4);
  EXPECT_EQ(result.final_matrix, run_matrix_method(inst).final_matrix);
  EXPECT_TRUE(verify_proper(inst, result.coloring).proper);
}

TEST(GreedyTest, SuccessIsAlwaysProperWithinN) {
  for (const auto& e : testing::random_corpus(150, 3, 10, 21)) {
    auto result = run_greedy(e.inst);
    if (!result.ok()) {
      EXPECT_EQ(result.reason, FailureReason::NoColorAvailable) << e.label;
      continue;
    }
    EXPECT_EQ(testing::raw_conflicts(testing::raw(e.inst), testing::raw(result.coloring)),
              0u) << e.label;
    EXPECT_LE(verify_proper(e.inst, result.coloring).max_color, e.inst.n());
  }
}

TEST(GreedyTest, RejectsInvalidInstance) {
  Instance bad({{VertexId("a"), VertexId("b")}, {VertexId("a"), VertexId("b")}});
  EXPECT_THROW(run_greedy(bad), InstanceError);
}

TEST(HypothesisTest, SharedSqrtBoundOnFixture) {
  auto report = check_shared_sqrt_bound(reference_example());
  EXPECT_FALSE(report.holds);
  EXPECT_EQ(counts_at(report, 2), (std::vector<int>{2, 3, 2, 2, 3, 3}));
  for (const auto& row : report.per_clique) EXPECT_EQ(row.bound, 2);
}

TEST(HypothesisTest, SharedSqrtBoundHoldsOnDisjoint) {
  EXPECT_TRUE(check_shared_sqrt_bound(gen_disjoint(5)).holds);
  EXPECT_FALSE(check_shared_sqrt_bound(gen_dense(5)).holds);
}

TEST(HypothesisTest, DegreeBoundValues) {
  EXPECT_EQ(degree_bound(6, 2, Hypothesis::HighDegreeBounded), 4);
  EXPECT_EQ(degree_bound(6, 3, Hypothesis::HighDegreeBounded), 3);
  EXPECT_EQ(degree_bound(6, 2, Hypothesis::HighDegreeBoundedTight), 3);
  EXPECT_EQ(degree_bound(7, 3, Hypothesis::HighDegreeBoundedTight), 3);
}

TEST(HypothesisTest, DegreeBoundOnFixture) {
  Instance inst = reference_example();
  auto d4 = check_degree_bound(inst, 4);
  EXPECT_EQ(counts_at(d4, 4), (std::vector<int>{1, 1, 1, 1, 0, 0}));
  EXPECT_TRUE(d4.holds);
  auto all = check_degree_bound_all(inst);
  EXPECT_TRUE(all.holds);
  EXPECT_EQ(all.d_values, (std::vector<int>{2, 3, 4, 5, 6}));
  EXPECT_EQ(counts_at(all, 2), (std::vector<int>{2, 3, 2, 2, 3, 3}));
  EXPECT_EQ(counts_at(all, 3), (std::vector<int>{1, 1, 2, 1, 1, 1}));
  EXPECT_TRUE(check_degree_bound_all(inst, Hypothesis::HighDegreeBoundedTight).holds);
}

TEST(HypothesisTest, DegreeBoundArgumentChecks) {
  Instance inst = reference_example();
  EXPECT_THROW(check_degree_bound(inst, 1), InstanceError);
  EXPECT_THROW(check_degree_bound(inst, 7), InstanceError);
  EXPECT_THROW(check_degree_bound(inst, 2, Hypothesis::SharedAtMostSqrtN),
               InstanceError);
}

TEST(HypothesisTest, DenseFailsDegreeBoundAtTwo) {
  auto report = check_degree_bound_all(gen_dense(5));
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.first_failing_d.has_value());
  EXPECT_EQ(*report.first_failing_d, 2);
}

}  // namespace
}  // namespace efl
