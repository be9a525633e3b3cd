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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "taskweb/evaluation.hpp"
#include "taskweb/fixture.hpp"
#include "taskweb/taskshop.hpp"

namespace taskweb {
namespace {

using testing::error_code_of;
using testing::graph_from_edges;

const TargetExamples kC("C", {"an example"});

FileProvider two_source_f() {
  FileProvider f;
  f.add("A", "C", 0.1);
  f.add("B", "C", 0.4);
  return f;
}

TEST(TaskShopScoreTest, TwoSourceExample) {
  const auto g = graph_from_edges({"A", "B"}, {{{"A", "B"}, 0.2}});
  const AveragedView web(g);
  const FileProvider f = two_source_f();
  EXPECT_NEAR(taskshop_score("A", kC, web, f, {0.5, {}}), 0.2, 1e-15);
  EXPECT_EQ(taskshop_score("A", kC, web, f, {0.0, {}}), 0.1);
  EXPECT_NEAR(taskshop_score("A", kC, web, f, {1.0, {}}), 0.3, 1e-15);
}

TEST(TaskShopScoreTest, Errors) {
  const auto g = graph_from_edges({"A", "B"}, {{{"A", "B"}, 0.2}});
  const AveragedView web(g);
  const FileProvider f = two_source_f();
  EXPECT_EQ(error_code_of([&] { taskshop_score("B", kC, web, f); }),
            ErrorCode::kNoPivots);
  EXPECT_EQ(error_code_of([&] { taskshop_score("Z", kC, web, f); }),
            ErrorCode::kUnknownSource);
  EXPECT_EQ(error_code_of([&] { taskshop_score("A", kC, web, f, {1.5, {}}); }),
            ErrorCode::kInvalidArgument);
  const TargetExamples seen("A", {"x"});
  EXPECT_EQ(error_code_of([&] { taskshop_score("B", seen, web, f); }),
            ErrorCode::kLeakDetected);
  FileProvider partial;
  partial.add("A", "C", 0.1);
  EXPECT_EQ(error_code_of([&] { taskshop_score("A", kC, web, partial); }),
            ErrorCode::kUnknownSource);
}

TEST(TaskShopScoreTest, Directionality) {
  const auto g = graph_from_edges({"A", "B", "C"},
                                  {{{"A", "B"}, 0.5}, {{"C", "B"}, -0.5}});
  const AveragedView web(g);
  FileProvider f;
  for (const char* s : {"A", "B", "C"}) f.add(s, "D", 0.2);
  const TargetExamples d("D", {"x"});
  EXPECT_NE(taskshop_score("A", d, web, f), taskshop_score("C", d, web, f));
}

TEST(RankSourcesTest, SingleCandidate) {
  const auto g = graph_from_edges({"A", "B"}, {{{"A", "B"}, 0.2}});
  const AveragedView base(g);
  const MaskedView only_a(base, "B");
  const FileProvider f = two_source_f();
  // With B hidden A has no pivots left.
  EXPECT_EQ(error_code_of([&] { rank_sources(kC, only_a, f); }), ErrorCode::kNoPivots);
  const auto both = graph_from_edges({"A", "B"}, {{{"A", "B"}, 0.2}, {{"B", "A"}, 0.0}});
  const auto r = rank_sources(kC, AveragedView(both), f);
  EXPECT_EQ(r.method, "taskshop_file");
  EXPECT_EQ(r.ranked[0].source, "B");
  const auto a_only = rank_by_provider(kC, only_a, f);
  ASSERT_EQ(a_only.ranked.size(), 1u);
  EXPECT_EQ(a_only.ranked[0], (RankedSource{"A", 0.1}));
}

FileProvider random_f(const std::vector<std::string>& ids, const std::string& target,
                      std::mt19937_64& rng, oracle::Scores& table) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FileProvider f;
  for (const auto& s : ids) {
    const double v = u(rng);
    f.add(s, target, v);
    table[{s, target}] = v;
  }
  return f;
}

TEST(RankSourcesTest, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ids = testing::task_ids(2 + trial % 5);
    // Full out-edges from every source guarantee a pivot.
    const auto edges = testing::random_edges(ids, 1.0, -0.3, 0.3, rng);
    const auto g = graph_from_edges(ids, edges);
    oracle::Scores ftab;
    const FileProvider f = random_f(ids, "target", rng, ftab);
    const TargetExamples t("target", {"x"});
    const TaskShopConfig cfg{lam(rng), {}};
    const auto r = rank_sources(t, AveragedView(g), f, cfg, 1 + trial % 3);
    ASSERT_EQ(r.ranked.size(), ids.size());
    for (const auto& x : r.ranked) {
      EXPECT_NEAR(x.score, *oracle::taskshop(x.source, "target", ids, edges, ftab,
                                             cfg.lambda),
                  1e-12);
    }
    for (std::size_t i = 1; i < r.ranked.size(); ++i) {
      EXPECT_GE(r.ranked[i - 1].score, r.ranked[i].score);
    }
  }
}

TEST(RankSourcesTest, JobsDoNotChangeRanking) {
  const auto g = published_fixture();
  const AveragedView base(g);
  const MaskedView web(base, "rte");
  const EmbeddingProvider f(fixture_embeddings());
  const auto t = fixture_target_examples("rte");
  const auto a = rank_sources(t, web, f, {}, 1);
  const auto b = rank_sources(t, web, f, {}, 4);
  EXPECT_EQ(a.ranked, b.ranked);
}

TEST(RankSourcesTest, FixtureCopaTopFive) {
  const auto g = published_fixture();
  const AveragedView base(g);
  const MaskedView web(base, "copa");
  const EmbeddingProvider f(fixture_embeddings());
  const auto r = rank_sources(fixture_target_examples("copa"), web, f);
  const auto top = select_top_k(r, 5);
  EXPECT_EQ(std::set<std::string>(top.begin(), top.end()),
            (std::set<std::string>{"cosmosqa", "socialiqa", "winogrande", "hellaswag",
                                   "piqa"}));
}

TEST(SelectTest, TopBottomAndTies) {
  SelectionResult r{"t", {{"A", 0.3}, {"B", 0.1}, {"C", -0.1}}, "m"};
  EXPECT_EQ(select_top_k(r, 2), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(select_bottom_k(r, 1), (std::vector<std::string>{"C"}));
  EXPECT_EQ(select_bottom_k(r, 2), (std::vector<std::string>{"C", "B"}));
  EXPECT_EQ(error_code_of([&] { select_top_k(r, 4); }), ErrorCode::kKTooLarge);
  EXPECT_EQ(error_code_of([&] { select_top_k(r, 0); }), ErrorCode::kInvalidArgument);

  std::vector<RankedSource> tie{{"b", 0.3}, {"a", 0.3}};
  detail::sort_ranking(tie);
  SelectionResult t{"t", tie, "m"};
  EXPECT_EQ(select_top_k(t, 1), (std::vector<std::string>{"a"}));
}

}  // namespace
}  // namespace taskweb
