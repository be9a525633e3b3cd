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

// LLM-judge similarity: a few-shot prompt asks whether two tasks are
// similar and the yes/no answer probabilities are normalized into a score.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/hash.hpp"
#include "taskweb/similarity.hpp"

namespace taskweb {

inline constexpr std::string_view kJudgePromptVersion = "judge-prompt-v1";

// Demonstrations use task pairs that are not part of the bundled web.
inline constexpr std::string_view kJudgePromptV1 =
    R"(Decide whether two tasks are similar, given one example of each.

Task 1 example: Translate to French: "The cat sleeps."
Task 2 example: Translate to German: "The dog runs."
Similar: yes

Task 1 example: Summarize the article in one sentence: "City council votes to expand bike lanes downtown..."
Task 2 example: Is this number prime? 91
Similar: no

Task 1 example: Which word is the antonym of "ancient"? (a) old (b) modern
Task 2 example: Pick the synonym of "rapid": (a) slow (b) quick
Similar: yes

Task 1 example: Write a haiku about autumn.
Task 2 example: Extract all dates mentioned: "The meeting moved from May 3 to June 7."
Similar: no

Task 1 example: {{source_examples}}
Task 2 example: {{target_examples}}
Similar:)";

struct JudgeRequest {
  std::string prompt;
  std::vector<std::string> candidates{"yes", "no"};
};

// Implementations must be safe to call from several threads.
class JudgeBackend {
 public:
  virtual ~JudgeBackend() = default;
  virtual JudgeScore query(const JudgeRequest& request) = 0;
  virtual std::string name() const = 0;
};

// Offline stand-in: pseudo-probabilities derived from a hash of the prompt.
class StubJudgeBackend final : public JudgeBackend {
 public:
  JudgeScore query(const JudgeRequest& request) override {
    const std::uint64_t h = fnv1a64(request.prompt);
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    const double p_yes = 0.02 + 0.96 * u;
    return {p_yes, 1.0 - p_yes};
  }
  std::string name() const override { return "stub"; }
};

struct HttpJudgeConfig {
  std::string endpoint;  // http://host[:port]/path
  std::string token;
  double timeout_seconds = 30.0;
  int retries = 2;
};

class HttpJudgeBackend final : public JudgeBackend {
 public:
  explicit HttpJudgeBackend(HttpJudgeConfig cfg) : cfg_(std::move(cfg)) {
    const std::string_view url = cfg_.endpoint;
    const auto scheme_end = url.find("://");
    if (cfg_.endpoint.empty() || scheme_end == std::string_view::npos) {
      throw Error(ErrorCode::kProviderUnavailable,
                  "judge endpoint must be an http:// URL",
                  {{"endpoint", cfg_.endpoint}});
    }
    if (url.substr(0, scheme_end) != "http") {
      throw Error(ErrorCode::kProviderUnavailable,
                  "only http:// judge endpoints are supported",
                  {{"endpoint", cfg_.endpoint}});
    }
    const auto path_start = url.find('/', scheme_end + 3);
    host_ = std::string(url.substr(0, path_start));
    path_ = path_start == std::string_view::npos
                ? "/"
                : std::string(url.substr(path_start));
  }

  JudgeScore query(const JudgeRequest& request) override {
    const nlohmann::json body = {{"prompt", request.prompt},
                                 {"candidate_answers", request.candidates}};
    const std::string payload = body.dump();
    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
      httplib::Client client(host_);
      const auto timeout = std::chrono::duration<double>(cfg_.timeout_seconds);
      client.set_connection_timeout(
          std::chrono::duration_cast<std::chrono::microseconds>(timeout));
      client.set_read_timeout(
          std::chrono::duration_cast<std::chrono::microseconds>(timeout));
      if (!cfg_.token.empty()) client.set_bearer_token_auth(cfg_.token);
      auto res = client.Post(path_, payload, "application/json");
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        throw Error(ErrorCode::kProviderUnavailable,
                    "judge endpoint returned HTTP " + std::to_string(res->status),
                    {{"status", res->status}});
      }
      return parse_response(res->body);
    }
    throw Error(ErrorCode::kProviderUnavailable,
                "judge endpoint unreachable: " + last_error,
                {{"endpoint", cfg_.endpoint}, {"attempts", cfg_.retries + 1}});
  }

  std::string name() const override { return "http"; }

  // Accepts {"probabilities": {"yes": p, "no": q}} or the same under
  // "logprobs" (natural-log probabilities).
  static JudgeScore parse_response(const std::string& body) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::kProviderUnavailable,
                  "judge response is not JSON");
    }
    auto pick = [&](const char* key, bool log_space) -> std::optional<JudgeScore> {
      if (!j.is_object() || !j.contains(key) || !j[key].is_object()) {
        return std::nullopt;
      }
      const auto& m = j[key];
      if (!m.contains("yes") || !m.contains("no") || !m["yes"].is_number() ||
          !m["no"].is_number()) {
        throw Error(ErrorCode::kProviderUnavailable,
                    std::string("judge response lacks yes/no under ") + key);
      }
      double y = m["yes"].get<double>(), n = m["no"].get<double>();
      if (log_space) {
        y = std::exp(y);
        n = std::exp(n);
      }
      return JudgeScore{y, n};
    };
    if (auto s = pick("probabilities", false)) return *s;
    if (auto s = pick("logprobs", true)) return *s;
    throw Error(ErrorCode::kProviderUnavailable,
                "judge response lacks per-answer probabilities");
  }

 private:
  HttpJudgeConfig cfg_;
  std::string host_;
  std::string path_;
};

// Normalized judge scores keyed by (source, target task, example digest).
// Readers take a shared lock; inserts take the exclusive one.
class JudgeCache {
 public:
  std::optional<double> get(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, double value) {
    std::unique_lock lock(mu_);
    values_.emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return values_.size();
  }

  void load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return;
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::kParseError,
                  "corrupt judge cache " + file.string());
    }
    std::unique_lock lock(mu_);
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_number()) values_[it.key()] = it.value().get<double>();
    }
  }

  void save(const std::filesystem::path& file) const {
    nlohmann::json j = nlohmann::json::object();
    {
      std::shared_lock lock(mu_);
      for (const auto& [k, v] : values_) j[k] = v;
    }
    std::filesystem::create_directories(file.parent_path());
    const auto tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp);
      out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file);
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, double> values_;
};

struct JudgeOptions {
  std::string prompt_template = std::string(kJudgePromptV1);
  std::size_t examples_per_side = 1;
  std::ptrdiff_t max_in_flight = 4;
};

class JudgeProvider final : public SimilarityProvider {
 public:
  // `source_examples` maps each source task to its prompted examples.
  JudgeProvider(std::shared_ptr<JudgeBackend> backend,
                std::map<std::string, std::vector<std::string>, std::less<>>
                    source_examples,
                JudgeOptions options = {},
                std::shared_ptr<JudgeCache> cache = nullptr)
      : backend_(std::move(backend)),
        sources_(std::move(source_examples)),
        options_(std::move(options)),
        cache_(cache ? std::move(cache) : std::make_shared<JudgeCache>()),
        in_flight_(std::max<std::ptrdiff_t>(1, options_.max_in_flight)) {
    if (options_.max_in_flight > kMaxInFlight) {
      throw Error(ErrorCode::kInvalidArgument, "max_in_flight too large");
    }
  }

  double score(std::string_view source,
               const TargetExamples& target) const override {
    auto src = sources_.find(source);
    if (src == sources_.end() || src->second.empty()) {
      throw Error(ErrorCode::kUnknownSource,
                  "no examples for source " + std::string(source),
                  {{"source", std::string(source)}});
    }
    const std::string key = cache_key(source, target);
    if (auto hit = cache_->get(key)) return *hit;

    JudgeRequest request{render(src->second, target.examples)};
    JudgeScore raw;
    {
      in_flight_.acquire();
      struct Release {
        std::counting_semaphore<kMaxInFlight>& s;
        ~Release() { s.release(); }
      } release{in_flight_};
      wire_calls_.fetch_add(1, std::memory_order_relaxed);
      raw = backend_->query(request);
    }
    const double value = judge_normalize(raw);
    cache_->put(key, value);
    return value;
  }

  std::string name() const override { return "judge"; }

  std::size_t wire_calls() const { return wire_calls_.load(); }
  const std::shared_ptr<JudgeCache>& cache() const { return cache_; }

  static std::string cache_key(std::string_view source,
                               const TargetExamples& target) {
    return std::string(source) + "|" + target.task + "|" +
           hex64(digest(target.examples));
  }

 private:
  static constexpr std::ptrdiff_t kMaxInFlight = 256;

  std::string render(const std::vector<std::string>& source_examples,
                     const std::vector<std::string>& target_examples) const {
    auto join = [&](const std::vector<std::string>& xs) {
      std::string out;
      const std::size_t n = std::min(options_.examples_per_side, xs.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (i) out += "\n";
        out += xs[i];
      }
      return out;
    };
    std::string prompt = options_.prompt_template;
    replace_all(prompt, "{{source_examples}}", join(source_examples));
    replace_all(prompt, "{{target_examples}}", join(target_examples));
    return prompt;
  }

  static void replace_all(std::string& s, std::string_view from,
                          const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos;
         pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  }

  std::shared_ptr<JudgeBackend> backend_;
  std::map<std::string, std::vector<std::string>, std::less<>> sources_;
  JudgeOptions options_;
  std::shared_ptr<JudgeCache> cache_;
  mutable std::counting_semaphore<kMaxInFlight> in_flight_;
  mutable std::atomic<std::size_t> wire_calls_{0};
};

}  // namespace taskweb
