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

#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "taskweb/fixture.hpp"
#include "taskweb/similarity.hpp"

namespace taskweb {
namespace {

using testing::error_code_of;

TargetExamples target(const std::string& id) { return TargetExamples(id, {"x"}); }

TEST(TargetExamplesTest, Limits) {
  EXPECT_EQ(error_code_of([] { TargetExamples("t", {}); }), ErrorCode::kEmpty);
  EXPECT_EQ(error_code_of([] { TargetExamples("t", std::vector<std::string>(33, "x")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(TargetExamples("t", std::vector<std::string>(32, "x")));
}

TEST(FileProviderTest, Lookup) {
  std::istringstream in("source,target,score\ns,t,0.4\nu,t,-0.2\n");
  const FileProvider f = FileProvider::from_csv(in);
  EXPECT_EQ(f.score("s", target("t")), 0.4);
  EXPECT_EQ(f_score(f, "u", target("t")), -0.2);
  EXPECT_EQ(error_code_of([&] { f.score("v", target("t")); }), ErrorCode::kUnknownSource);
  EXPECT_EQ(error_code_of([&] { f.score("s", target("w")); }), ErrorCode::kUnknownSource);
  FileProvider g;
  g.add("s", "t", 0.1);
  EXPECT_EQ(error_code_of([&] { g.add("s", "t", 0.2); }), ErrorCode::kInvalidArgument);
}

TEST(RoePoolTest, Means) {
  EXPECT_EQ(roe_pool({{1, 0}, {0, 1}}), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(roe_pool({{3, -1}}), (std::vector<double>{3, -1}));
  EXPECT_EQ(roe_pool({{2, 2}, {0, 0}, {1, 1}}), (std::vector<double>{1, 1}));
  EXPECT_EQ(roe_pool({{0.3, 0.7}, {0.3, 0.7}}), (std::vector<double>{0.3, 0.7}));
  EXPECT_EQ(error_code_of([] { roe_pool({}); }), ErrorCode::kEmpty);
  EXPECT_EQ(error_code_of([] { roe_pool({{1, 2}, {1}}); }), ErrorCode::kDimensionMismatch);
}

TEST(EmbeddingProviderTest, Cosine) {
  EmbeddingStore store;
  store.add({"s", {1, 0}, 100});
  store.add({"t", {1, 1}, 32});
  store.add({"u", {1, 0}, 100});
  const EmbeddingProvider p(store);
  EXPECT_NEAR(p.score("s", target("t")), 0.70710678118, 1e-9);
  EXPECT_NEAR(p.score("s", target("u")), 1.0, 1e-15);
  EXPECT_EQ(error_code_of([&] { p.score("zz", target("t")); }), ErrorCode::kUnknownSource);
  EXPECT_EQ(error_code_of([&] { p.score("s", target("zz")); }), ErrorCode::kUnknownSource);
  EXPECT_EQ(error_code_of([] { cosine({1, 0}, {1, 0, 0}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(error_code_of([] { cosine({0, 0}, {1, 0}); }), ErrorCode::kInvalidArgument);
}

TEST(EmbeddingProviderTest, SeparateTargetStore) {
  EmbeddingStore sources, targets;
  sources.add({"s", {1, 0}, 100});
  targets.add({"new", {0, 1}, 32});
  const EmbeddingProvider p(sources, targets);
  EXPECT_NEAR(p.score("s", target("new")), 0.0, 1e-15);
  EmbeddingStore wide;
  wide.add({"w", {1, 0, 0}, 1});
  EXPECT_EQ(error_code_of([&] { EmbeddingProvider(sources, wide); }),
            ErrorCode::kDimensionMismatch);
}

TEST(EmbeddingStoreTest, JsonlRoundTrip) {
  const EmbeddingStore store = fixture_embeddings();
  const std::string text = store.to_jsonl();
  std::istringstream in(text);
  const EmbeddingStore back = EmbeddingStore::from_jsonl(in);
  EXPECT_EQ(back.size(), 22u);
  EXPECT_EQ(back.dim(), 16u);
  EXPECT_EQ(back.to_jsonl(), text);
  EXPECT_EQ(back.find("copa")->n_pooled, kDefaultSourceExamples);
}

std::string jsonl_error_path(const std::string& text, ErrorCode expected) {
  std::istringstream in(text);
  try {
    EmbeddingStore::from_jsonl(in);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.details().value("path", std::string());
  }
  return "<none>";
}

TEST(EmbeddingStoreTest, SchemaErrors) {
  EXPECT_EQ(jsonl_error_path("{\"dim\":1,\"vector\":[1]}\n", ErrorCode::kSchemaViolation),
            "/0/task");
  EXPECT_EQ(jsonl_error_path("{\"task\":\"a\",\"dim\":1,\"vector\":[1]}\n"
                             "{\"task\":\"b\",\"dim\":1,\"vector\":[\"x\"]}\n",
                             ErrorCode::kSchemaViolation),
            "/1/vector/0");
  EXPECT_EQ(jsonl_error_path("{\"task\":\"a\",\"dim\":1,\"vector\":[1],\"x\":0}\n",
                             ErrorCode::kSchemaViolation),
            "/0/x");
  EXPECT_EQ(jsonl_error_path("{\"task\":\"a\",\"dim\":2,\"vector\":[1]}\n",
                             ErrorCode::kDimensionMismatch),
            "/0");
  jsonl_error_path("{\"task\":\"a\",\"dim\":1,\"vector\":[1]}\n"
                   "{\"task\":\"b\",\"dim\":2,\"vector\":[1,2]}\n",
                   ErrorCode::kDimensionMismatch);
  jsonl_error_path("{\"task\":\"a\",\"dim\":1,\"vector\":[1]}\n"
                   "{\"task\":\"a\",\"dim\":1,\"vector\":[2]}\n",
                   ErrorCode::kDuplicateTask);
}

TEST(JudgeNormalizeTest, Examples) {
  EXPECT_NEAR(judge_normalize({0.9, 0.1}), 0.9, 1e-15);
  EXPECT_EQ(judge_normalize({0.3, 0.3}), 0.5);
  EXPECT_EQ(judge_normalize({0.2, 0.0}), 1.0);
  EXPECT_EQ(error_code_of([] { judge_normalize({0.0, 0.0}); }), ErrorCode::kBothZero);
  EXPECT_EQ(error_code_of([] { judge_normalize({-0.1, 0.5}); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace taskweb
