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

#include <atomic>
#include <cmath>
#include <filesystem>
#include <memory>
#include <thread>

#include <gtest/gtest.h>

#include "support.hpp"
#include "taskweb/judge.hpp"
#include "taskweb/taskshop.hpp"

namespace taskweb {
namespace {

using testing::error_code_of;

std::map<std::string, std::vector<std::string>, std::less<>> sources() {
  return {{"s1", {"first s1 prompt", "second"}}, {"s2", {"s2 prompt"}},
          {"s3", {"s3 prompt"}}};
}

class CountingBackend final : public JudgeBackend {
 public:
  JudgeScore query(const JudgeRequest& request) override {
    ++calls;
    last_prompt = request.prompt;
    return {0.6, 0.2};
  }
  std::string name() const override { return "counting"; }
  std::atomic<int> calls{0};
  std::string last_prompt;
};

TEST(JudgeProviderTest, CachesByExampleDigest) {
  auto backend = std::make_shared<CountingBackend>();
  const JudgeProvider judge(backend, sources());
  const TargetExamples t("tgt", {"target prompt"});
  EXPECT_DOUBLE_EQ(judge.score("s1", t), 0.75);
  EXPECT_DOUBLE_EQ(judge.score("s1", t), 0.75);
  EXPECT_EQ(backend->calls, 1);
  EXPECT_EQ(judge.wire_calls(), 1u);
  EXPECT_NE(backend->last_prompt.find("first s1 prompt"), std::string::npos);
  EXPECT_NE(backend->last_prompt.find("target prompt"), std::string::npos);
  EXPECT_EQ(backend->last_prompt.find("second"), std::string::npos);
  judge.score("s1", TargetExamples("tgt", {"other prompt"}));
  EXPECT_EQ(backend->calls, 2);
  EXPECT_EQ(error_code_of([&] { judge.score("nope", t); }), ErrorCode::kUnknownSource);
  EXPECT_EQ(judge.cache()->size(), 2u);
}

TEST(JudgeProviderTest, StubIsDeterministicAndBounded) {
  const JudgeProvider a(std::make_shared<StubJudgeBackend>(), sources());
  const JudgeProvider b(std::make_shared<StubJudgeBackend>(), sources());
  const TargetExamples t("tgt", {"x"});
  for (const char* s : {"s1", "s2", "s3"}) {
    const double v = a.score(s, t);
    EXPECT_EQ(v, b.score(s, t));
    EXPECT_GE(v, 0.02);
    EXPECT_LE(v, 0.98);
  }
}

TEST(JudgeCacheTest, SaveLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "taskweb_judge_cache_test";
  std::filesystem::remove_all(dir);
  JudgeCache c;
  c.put("a|b|1", 0.25);
  c.save(dir / "judge_cache.json");
  JudgeCache d;
  d.load(dir / "judge_cache.json");
  EXPECT_EQ(d.get("a|b|1"), 0.25);
  EXPECT_FALSE(d.get("zzz"));
  JudgeCache missing;
  missing.load(dir / "absent.json");
  EXPECT_EQ(missing.size(), 0u);
  std::filesystem::remove_all(dir);
}

TEST(JudgeProviderTest, ParallelScoringHitsEachPairOnce) {
  auto backend = std::make_shared<CountingBackend>();
  const JudgeProvider judge(backend, sources(), JudgeOptions{.max_in_flight = 2});
  const TargetExamples t("tgt", {"x"});
  const std::vector<std::string> ids{"s1", "s2", "s3"};
  const TargetScores a(judge, t, ids, 3);
  const TargetScores b(judge, t, ids, 3);
  EXPECT_EQ(backend->calls, 3);
  EXPECT_EQ(a.at("s2"), b.at("s2"));
}

TEST(HttpJudgeTest, ParsesResponses) {
  const auto p = HttpJudgeBackend::parse_response(
      R"({"probabilities": {"yes": 0.3, "no": 0.1}})");
  EXPECT_EQ(p.p_yes, 0.3);
  const auto l = HttpJudgeBackend::parse_response(
      R"({"logprobs": {"yes": -0.5, "no": -2.0}})");
  EXPECT_DOUBLE_EQ(l.p_yes, std::exp(-0.5));
  EXPECT_EQ(error_code_of([] { HttpJudgeBackend::parse_response("[]"); }),
            ErrorCode::kProviderUnavailable);
  EXPECT_EQ(error_code_of([] { HttpJudgeBackend::parse_response("nope"); }),
            ErrorCode::kProviderUnavailable);
  EXPECT_EQ(error_code_of([] {
              HttpJudgeBackend::parse_response(R"({"probabilities": {"yes": 1}})");
            }),
            ErrorCode::kProviderUnavailable);
}

TEST(HttpJudgeTest, RejectsNonHttpEndpoints) {
  EXPECT_EQ(error_code_of([] { HttpJudgeBackend({"https://x/y"}); }),
            ErrorCode::kProviderUnavailable);
  EXPECT_EQ(error_code_of([] { HttpJudgeBackend({""}); }),
            ErrorCode::kProviderUnavailable);
}

class LocalJudgeServer {
 public:
  LocalJudgeServer() {
    server_.Post("/judge", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      last_auth = req.get_header_value("Authorization");
      if (fail_first > 0) {
        --fail_first;
        res.status = 503;
        return;
      }
      if (reject) {
        res.status = 401;
        return;
      }
      const auto body = nlohmann::json::parse(req.body);
      const bool similar = body["prompt"].get<std::string>().find("alpha") !=
                           std::string::npos;
      res.set_content(nlohmann::json{{"probabilities",
                                      {{"yes", similar ? 0.8 : 0.1},
                                       {"no", similar ? 0.2 : 0.9}}}}
                          .dump(),
                      "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalJudgeServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/judge";
  }

  std::atomic<int> hits{0};
  std::atomic<int> fail_first{0};
  std::atomic<bool> reject{false};
  std::string last_auth;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpJudgeTest, TalksToLocalServer) {
  LocalJudgeServer server;
  server.fail_first = 1;
  auto backend = std::make_shared<HttpJudgeBackend>(
      HttpJudgeConfig{server.endpoint(), "secret", 5.0, 2});
  const JudgeProvider judge(backend, {{"a", {"alpha task"}}, {"b", {"beta task"}}});
  const TargetExamples t("t", {"target"});
  EXPECT_DOUBLE_EQ(judge.score("a", t), 0.8);
  EXPECT_DOUBLE_EQ(judge.score("b", t), 0.1);
  EXPECT_EQ(server.hits, 3);
  EXPECT_EQ(server.last_auth, "Bearer secret");
  server.reject = true;
  EXPECT_EQ(error_code_of([&] { judge.score("a", TargetExamples("t2", {"x"})); }),
            ErrorCode::kProviderUnavailable);
}

TEST(HttpJudgeTest, UnreachableEndpoint) {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  HttpJudgeBackend backend(
      {"http://127.0.0.1:" + std::to_string(port) + "/judge", "", 1.0, 1});
  EXPECT_EQ(error_code_of([&] { backend.query({"p"}); }),
            ErrorCode::kProviderUnavailable);
}

}  // namespace
}  // namespace taskweb
