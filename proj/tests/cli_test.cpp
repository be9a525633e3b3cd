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

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "taskshop_cli.hpp"

namespace taskweb {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

using Env = std::map<std::string, std::string>;

Result run(std::vector<std::string> args, const Env& env = {}) {
  args.insert(args.begin(), "taskshop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err,
                         [&](const char* name) -> std::optional<std::string> {
                           auto it = env.find(name);
                           if (it == env.end()) return std::nullopt;
                           return it->second;
                         });
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    std::random_device rd;
    dir_ = new fs::path(fs::temp_directory_path() /
                        ("taskshop-cli-" + std::to_string(rd())));
    fs::create_directories(*dir_);
    const Result r = run({"fixtures", "--out", path("web.json"), "--runs-out",
                          path("runs.csv"), "--similarity-out", path("sim.csv"),
                          "--embeddings-out", path("emb.jsonl"), "--pools-out",
                          path("pools"), "--pool-size", "40"});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  static void TearDownTestSuite() {
    fs::remove_all(*dir_);
    delete dir_;
  }
  static std::string path(const std::string& name) { return (*dir_ / name).string(); }

  static fs::path* dir_;
};

fs::path* CliTest::dir_ = nullptr;

TEST_F(CliTest, IngestWritesAWeb) {
  const Result r = run({"ingest", "--runs", path("runs.csv"), "--out", path("ingested.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json web = json::parse(slurp(path("ingested.json")));
  EXPECT_EQ(web["cells"].size(), 441u);
}

TEST_F(CliTest, ConfigAlphaAndFlagPrecedence) {
  std::ofstream(path("alpha.toml")) << "# pure PC\nalpha = 1.0\n";
  ASSERT_EQ(run({"--config", path("alpha.toml"), "ingest", "--runs", path("runs.csv"),
                 "--out", path("a1.json")})
                .code,
            0);
  ASSERT_EQ(run({"--config", path("alpha.toml"), "ingest", "--runs", path("runs.csv"),
                 "--alpha", "0", "--out", path("a0.json")})
                .code,
            0);
  const json a1 = json::parse(slurp(path("a1.json")));
  const json a0 = json::parse(slurp(path("a0.json")));
  EXPECT_EQ(a1["alpha"], 1.0);
  EXPECT_EQ(a0["alpha"], 0.0);
  const json& c = a1["cells"][0];
  EXPECT_EQ(c["score"].get<double>(), c["pc"].get<double>());
}

TEST_F(CliTest, UnknownFlagExitsTwo) {
  const Result r = run({"ingest", "--runs", path("runs.csv"), "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--runs"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, MissingFileIsAnIoError) {
  const Result r = run({"analyze", "commute", "--web", path("nope.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "IoError");
}

TEST_F(CliTest, Version) {
  const Result r = run({"--version"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["taskshop"], cli::kVersion);
  EXPECT_EQ(j["schemas"]["web_json"], kWebSchemaVersion);
}

TEST_F(CliTest, AnalyzeOutputs) {
  Result r = run({"analyze", "commute", "--web", path("web.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json c = json::parse(r.out);
  EXPECT_EQ(c["pairs_total"], 210);
  EXPECT_EQ(c["same_sign"], 97);
  EXPECT_EQ(c["opposite_sign"], 113);
  r = run({"analyze", "transitive", "--web", path("web.json"), "--thresholds",
           "0.01:0.04:0.03", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "threshold,eligible_triples,positive_triples,positive_fraction");
  EXPECT_NE(r.out.find("\n0.04,227,"), std::string::npos) << r.out;
  r = run({"analyze", "positivity", "--web", path("web.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["positive"], 246);
}

TEST_F(CliTest, ScoreRefusesSeenTarget) {
  Result r = run({"score", "--web", path("web.json"), "--target-task", "copa"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "LeakDetected");
  r = run({"score", "--web", path("web.json"), "--target-task", "copa", "--allow-seen",
           "--out", path("rank.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rank = json::parse(slurp(path("rank.json")));
  EXPECT_EQ(rank["ranked"].size(), 21u);
  r = run({"select", "--ranking", path("rank.json"), "--k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["selected"][0], "cosmosqa");
}

TEST_F(CliTest, FileProviderScore) {
  const Result r = run({"score", "--web", path("web.json"), "--target-task", "copa",
                        "--allow-seen", "--provider", "file", "--similarity",
                        path("sim.csv"), "--provider-only"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["method"], "file");
}

TEST_F(CliTest, JudgeStubAndCacheDirPrecedence) {
  for (const char* d : {"env", "flag", "conf"}) fs::create_directories(path(d));
  std::ofstream(path("cache.toml")) << "[cache]\ndir = \"" << path("conf") << "\"\n";
  const std::vector<std::string> base = {
      "--config", path("cache.toml"), "score",        "--web",       path("web.json"),
      "--target-task", "copa",        "--allow-seen", "--provider",  "judge",
      "--judge-stub",  "--pools",     path("pools")};
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--cache-dir", path("flag")});

  Result r = run(with_flag, {{"TASKWEB_CACHE_DIR", path("env")}});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(fs::path(path("env")) / "judge_cache.json"));
  EXPECT_FALSE(fs::exists(fs::path(path("flag")) / "judge_cache.json"));

  ASSERT_EQ(run(with_flag).code, 0);
  EXPECT_TRUE(fs::exists(fs::path(path("flag")) / "judge_cache.json"));
  EXPECT_FALSE(fs::exists(fs::path(path("conf")) / "judge_cache.json"));

  const Result again = run(base);
  ASSERT_EQ(again.code, 0);
  EXPECT_TRUE(fs::exists(fs::path(path("conf")) / "judge_cache.json"));
  EXPECT_EQ(json::parse(again.out), json::parse(r.out));
}

TEST_F(CliTest, JudgeEndpointFromEnvironment) {
  // Nothing listens on port 9, so the env endpoint must be the one tried.
  const Result r = run({"score", "--web", path("web.json"), "--target-task", "copa",
                        "--allow-seen", "--provider", "judge", "--pools", path("pools"),
                        "--judge-endpoint", "not a url"},
                       {{"TASKWEB_JUDGE_ENDPOINT", "http://127.0.0.1:9/judge"}});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("127.0.0.1:9"), std::string::npos) << r.err;
}

TEST_F(CliTest, JobsDoNotChangeOutputs) {
  const std::vector<std::string> eval = {"evaluate", "--web", path("web.json"), "--k", "1,5"};
  const std::vector<std::string> trans = {"analyze", "transitive", "--web", path("web.json")};
  const std::vector<std::string> build = {"build-trainset", "--web", path("web.json"),
                                          "--target-task", "copa", "--k", "3",
                                          "--per-task", "20", "--pools", path("pools")};
  for (const auto& args : {eval, trans, build}) {
    auto one = args, four = args;
    one.insert(one.begin(), {"--jobs", "1"});
    four.insert(four.begin(), {"--jobs", "4"});
    const Result a = run(one), b = run(four);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

TEST_F(CliTest, BuildTrainsetModes) {
  const std::vector<std::string> base = {"build-trainset", "--web", path("web.json"),
                                         "--target-task", "copa", "--k", "5",
                                         "--per-task", "30", "--pools", path("pools")};
  auto meta = [](const std::string& jsonl) { return json::parse(jsonl.substr(0, jsonl.find('\n'))); };
  Result r;
  for (const auto& [extra, method] :
       std::vector<std::pair<std::vector<std::string>, std::string>>{
           {{}, "top"},
           {{"--bottom"}, "bottom"},
           {{"--random"}, "random"},
           {{"--mix-replace", "2"}, "mix"},
           {{"--selection", "taskweb"}, "top"}}) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const json m = meta(r.out);
    EXPECT_EQ(m["recipe"]["method"], method);
    EXPECT_EQ(m["n_rows"], 150);
  }
  auto both = base;
  both.insert(both.end(), {"--bottom", "--random"});
  EXPECT_EQ(run(both).code, 2);
  auto too_many = base;
  too_many[8] = "100";
  r = run(too_many);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "PoolTooSmall");
}

TEST(ConfigFileTest, ParsesSectionsAndRejectsJunk) {
  std::istringstream in("alpha = 0.25  # trailing\n[judge]\nendpoint = \"http://x/y\"\n");
  const ConfigFile c = ConfigFile::parse(in);
  EXPECT_EQ(c.get("alpha"), "0.25");
  EXPECT_EQ(c.get("judge.endpoint"), "http://x/y");
  EXPECT_FALSE(c.get("endpoint"));
  std::istringstream dup("a = 1\na = 2\n");
  EXPECT_THROW(ConfigFile::parse(dup), Error);
  std::istringstream bad("just words\n");
  EXPECT_THROW(ConfigFile::parse(bad), Error);
}

TEST(ResolveSettingTest, Precedence) {
  std::istringstream in("key = conf\n");
  const ConfigFile c = ConfigFile::parse(in);
  const EnvLookup env = [](const char*) { return std::optional<std::string>("env"); };
  const EnvLookup none = [](const char*) { return std::optional<std::string>(); };
  EXPECT_EQ(resolve_setting("X", std::string("flag"), c, "key", "dflt", env), "env");
  EXPECT_EQ(resolve_setting("X", std::string("flag"), c, "key", "dflt", none), "flag");
  EXPECT_EQ(resolve_setting("X", std::nullopt, c, "key", "dflt", none), "conf");
  EXPECT_EQ(resolve_setting("X", std::nullopt, ConfigFile{}, "key", "dflt", none), "dflt");
}

}  // namespace
}  // namespace taskweb
