// Copyright 2026 The TaskWeb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "taskweb/fixture.hpp"
#include "taskweb/structure.hpp"

namespace taskweb {
namespace {

using testing::error_code_of;
using testing::graph_from_edges;

TEST(CommutativityTest, SmallGraphs) {
  const auto opp = graph_from_edges({"a", "b"}, {{{"a", "b"}, 0.1}, {{"b", "a"}, -0.05}});
  const auto r1 = commutativity(AveragedView(opp));
  EXPECT_EQ(r1.pairs_total, 1u);
  EXPECT_EQ(r1.opposite_sign, 1u);
  EXPECT_EQ(r1.pairs[0].task_a, "a");
  EXPECT_EQ(r1.pairs[0].score_ba, -0.05);
  EXPECT_EQ(r1.pairs[0].verdict, Verdict::kOppositeSign);

  const auto same = graph_from_edges({"a", "b"}, {{{"a", "b"}, 0.1}, {{"b", "a"}, 0.2}});
  EXPECT_EQ(commutativity(AveragedView(same)).same_sign, 1u);

  const auto zero = graph_from_edges({"a", "b"}, {{{"a", "b"}, 0.0}, {{"b", "a"}, 0.2}});
  EXPECT_EQ(commutativity(AveragedView(zero)).zero, 1u);

  const auto one_way = graph_from_edges({"a", "b"}, {{{"a", "b"}, 0.1}});
  EXPECT_EQ(commutativity(AveragedView(one_way)).pairs_total, 0u);

  const auto empty = graph_from_edges({"a", "b"}, {});
  EXPECT_EQ(error_code_of([&] { commutativity(AveragedView(empty)); }),
            ErrorCode::kEmptyGraph);
}

TEST(CommutativityTest, MatchesOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ids = testing::task_ids(2 + trial % 7);
    auto edges = testing::random_edges(ids, 0.8, -0.2, 0.2, rng);
    if (trial % 3 == 0 && !edges.empty()) edges.begin()->second = 0.0;
    if (edges.empty()) continue;
    const auto r = commutativity(AveragedView(graph_from_edges(ids, edges)));
    const auto o = oracle::commutativity(ids, edges);
    EXPECT_EQ(r.pairs_total, static_cast<std::size_t>(o.pairs));
    EXPECT_EQ(r.same_sign, static_cast<std::size_t>(o.same));
    EXPECT_EQ(r.opposite_sign, static_cast<std::size_t>(o.opposite));
    EXPECT_EQ(r.zero, static_cast<std::size_t>(o.zero));
    EXPECT_EQ(r.same_sign + r.opposite_sign + r.zero, r.pairs_total);
  }
}

TEST(TransitivityTest, TinyGraph) {
  const auto g = graph_from_edges(
      {"a", "b", "c"},
      {{{"a", "b"}, 0.05}, {{"b", "c"}, 0.05}, {{"a", "c"}, 0.02}});
  const std::vector<double> th{0.01, 0.06};
  const auto curve = transitivity_curve(AveragedView(g), th);
  EXPECT_EQ(curve.points[0].eligible_triples, 1u);
  EXPECT_EQ(*curve.points[0].positive_fraction, 1.0);
  EXPECT_EQ(curve.points[1].eligible_triples, 0u);
  EXPECT_FALSE(curve.points[1].positive_fraction);
}

TEST(TransitivityTest, Errors) {
  const auto g = graph_from_edges({"a", "b"}, {{{"a", "b"}, 0.05}});
  EXPECT_EQ(error_code_of([&] { transitivity_curve(AveragedView(g), {}); }),
            ErrorCode::kEmptyThresholds);
  const std::vector<double> desc{0.02, 0.01};
  EXPECT_EQ(error_code_of([&] { transitivity_curve(AveragedView(g), desc); }),
            ErrorCode::kInvalidArgument);
}

TEST(TransitivityTest, MatchesOracleAndIsMonotone) {
  std::mt19937_64 rng(31);
  const auto grid = parse_threshold_range("-0.05:0.1:0.01");
  for (int trial = 0; trial < 100; ++trial) {
    const auto ids = testing::task_ids(3 + trial % 6);
    const auto edges = testing::random_edges(ids, 0.75, -0.1, 0.12, rng);
    const auto g = graph_from_edges(ids, edges);
    const auto curve = transitivity_curve(AveragedView(g), grid, 1 + trial % 3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto o = oracle::transitivity(ids, edges, grid[i]);
      EXPECT_EQ(curve.points[i].eligible_triples, static_cast<std::uint64_t>(o.eligible));
      EXPECT_EQ(curve.points[i].positive_triples, static_cast<std::uint64_t>(o.positive));
      if (i > 0) {
        EXPECT_LE(curve.points[i].eligible_triples, curve.points[i - 1].eligible_triples);
      }
    }
  }
}

TEST(TransitivityTest, JobCountDoesNotChangeResult) {
  const auto g = published_fixture();
  const auto grid = parse_threshold_range("0:0.1:0.01");
  const auto a = to_json(transitivity_curve(AveragedView(g), grid, 1));
  const auto b = to_json(transitivity_curve(AveragedView(g), grid, 4));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(ThresholdRangeTest, Parsing) {
  const auto r = parse_threshold_range("0:0.05:0.01");
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r[4], 0.04);
  EXPECT_EQ(r.back(), 0.05);
  EXPECT_EQ(parse_threshold_range("0.03"), std::vector<double>{0.03});
  EXPECT_EQ(error_code_of([] { parse_threshold_range("a:b"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of([] { parse_threshold_range("0:1:0"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of([] { parse_threshold_range("1:0:0.1"); }),
            ErrorCode::kInvalidArgument);
}

TEST(StructureTest, PublishedFixture) {
  const auto g = published_fixture();
  const AveragedView v(g);
  const auto c = commutativity(v);
  EXPECT_EQ(c.pairs_total, 210u);
  EXPECT_EQ(c.same_sign, 97u);
  EXPECT_EQ(c.opposite_sign, 113u);
  const std::vector<double> th{0.01, 0.04};
  const auto curve = transitivity_curve(v, th);
  EXPECT_NEAR(*curve.points[0].positive_fraction, 0.88, 0.02);
  EXPECT_NEAR(*curve.points[1].positive_fraction, 0.97, 0.02);
}

}  // namespace
}  // namespace taskweb
