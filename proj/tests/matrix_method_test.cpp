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

#include <set>

#include "efl/efl.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace efl {
namespace {

ColoringResult traced(const Instance& inst) {
  EngineConfig cfg;
  cfg.trace_enabled = true;
  return run_matrix_method(inst, cfg);
}

TEST(MatrixMethodTest, FixtureAssignmentOrder) {
  auto result = traced(reference_example());
  ASSERT_TRUE(result.ok());
  ASSERT_TRUE(result.trace.has_value());
  EXPECT_EQ(result.trace->render(),
            "ASSIGN v1 1\nASSIGN v16 2\nASSIGN v6 3\n"
            "ASSIGN v7 4\nASSIGN v9 3\nASSIGN v19 4\n");
  EXPECT_EQ(result.repairs, 0u);
}

TEST(MatrixMethodTest, FixtureIntermediateMatrices) {
  auto result = traced(reference_example());
  const char* want[] = {testing::kSixC1, testing::kSixC2, testing::kSixC3,
                        testing::kSixC4, testing::kSixC5, testing::kSixC6};
  ASSERT_EQ(result.trace->events.size(), 6u);
  for (std::size_t s = 0; s < 6; ++s) {
    ASSERT_TRUE(result.trace->events[s].snapshot.has_value());
    EXPECT_EQ(result.trace->events[s].snapshot->render(), want[s]) << "step " << s + 1;
  }
  EXPECT_EQ(result.final_matrix, parse_matrix(testing::kSixC6));
}

TEST(MatrixMethodTest, FixtureColoringIsTotalAndProper) {
  Instance inst = reference_example();
  auto result = run_matrix_method(inst);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.coloring.size(), 27u);
  auto report = verify_proper(inst, result.coloring);
  EXPECT_TRUE(report.proper);
  EXPECT_EQ(report.max_color, 6);
  EXPECT_EQ(testing::raw_conflicts(testing::raw(inst), testing::raw(result.coloring)), 0u);
}

TEST(MatrixMethodTest, TraceOffLeavesNoTrace) {
  auto result = run_matrix_method(reference_example());
  EXPECT_FALSE(result.trace.has_value());
}

TEST(MatrixMethodTest, RejectsInvalidInstance) {
  Instance bad = parse_instance_relaxed(testing::read_data("overlap.efl"));
  EXPECT_THROW(run_matrix_method(bad), InstanceError);
}

TEST(MatrixMethodTest, RejectsZeroBudget) {
  EngineConfig cfg;
  cfg.repair_budget = 0;
  EXPECT_THROW(run_matrix_method(reference_example(), cfg), InstanceError);
}

TEST(MatrixMethodTest, SmallDenseInstancesSucceed) {
  for (int n = 2; n <= 8; ++n) {
    auto inst = gen_dense(n);
    auto result = run_matrix_method(inst);
    ASSERT_TRUE(result.ok()) << "n=" << n << " " << to_string(result.reason);
    EXPECT_TRUE(verify_proper(inst, result.coloring).proper);
  }
}

TEST(MatrixMethodTest, DisjointNeedsNoCore) {
  auto inst = gen_disjoint(4);
  auto result = traced(inst);
  ASSERT_TRUE(result.ok());
  EXPECT_TRUE(result.trace->events.empty());
  EXPECT_EQ(verify_proper(inst, result.coloring).max_color, 4);
}

TEST(MatrixMethodTest, TinyBudgetStopsWithBudgetEvent) {
  // gen_dense(9) needs repairs under the fixed choice rules.
  EngineConfig cfg;
  cfg.trace_enabled = true;
  cfg.repair_budget = 1;
  auto result = run_matrix_method(gen_dense(9), cfg);
  ASSERT_FALSE(result.ok());
  EXPECT_LE(result.repairs, 1u);
  if (result.reason == FailureReason::BudgetExhausted) {
    EXPECT_EQ(result.trace->events.back().line(), "BUDGET");
  } else {
    EXPECT_EQ(result.reason, FailureReason::StuckNoRepair);
  }
}

TEST(MatrixMethodTest, ReplayReproducesFinalMatrix) {
  auto check = [](const Instance& inst, const std::string& label) {
    auto result = traced(inst);
    EXPECT_EQ(replay(inst, *result.trace), result.final_matrix) << label;
  };
  check(reference_example(), "fixture");
  for (int n = 2; n <= 12; ++n) check(gen_dense(n), "dense " + std::to_string(n));
  for (const auto& e : testing::random_corpus(60, 3, 9, 11)) check(e.inst, e.label);
}

TEST(MatrixMethodTest, RunsAreDeterministic) {
  for (const auto& e : testing::random_corpus(40, 3, 9, 12)) {
    auto a = traced(e.inst);
    auto b = traced(e.inst);
    EXPECT_EQ(a.trace->render(), b.trace->render()) << e.label;
    EXPECT_EQ(a.final_matrix, b.final_matrix) << e.label;
    EXPECT_EQ(a.coloring, b.coloring) << e.label;
  }
}

// Blocked colors at threshold k-1 are exactly the colors already present in
// the row's clique, because every colored vertex has degree >= k.
TEST(MatrixMethodTest, ThresholdBlockedSetMatchesCliqueColors) {
  auto probe_instance = [](const Instance& inst, const std::string& label) {
    std::size_t calls = 0;
    EngineConfig cfg;
    cfg.step3_probe = [&](const ColorMatrix& m, std::span<const CliqueIndex> rows,
                          int k) {
      ++calls;
      for (auto i : rows) {
        std::set<Color> present;
        for (auto idx : inst.members(i)) {
          auto inc = inst.incidence_at(idx);
          if (inc.size() < 2) continue;
          CliqueIndex other = inc[0] == i ? inc[1] : inc[0];
          auto e = m.at(i, other);
          if (e.is_color()) present.insert(e.color());
        }
        EXPECT_EQ(blocked_colors(m, i, k - 1), present)
            << label << " row " << i << " k " << k;
      }
    };
    run_matrix_method(inst, cfg);
    return calls;
  };
  EXPECT_EQ(probe_instance(reference_example(), "fixture"), 6u);
  for (int n = 2; n <= 10; ++n) probe_instance(gen_dense(n), "dense");
  for (const auto& e : testing::random_corpus(80, 3, 10, 13)) {
    probe_instance(e.inst, e.label);
  }
}

TEST(MatrixMethodTest, FailurePartialColoringIsConsistent) {
  Instance inst = gen_dense(9);
  auto result = run_matrix_method(inst);
  if (result.ok()) GTEST_SKIP() << "no failure to inspect";
  EXPECT_EQ(matrix_to_coloring(inst, result.final_matrix), result.coloring);
}

}  // namespace
}  // namespace efl
