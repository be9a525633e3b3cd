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

// Few-example task selection scorers F(source -> target). Every provider
// answers "how transferable is `source` to the task these examples come
// from"; higher is better.

#pragma once

#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taskweb/csv.hpp"
#include "taskweb/error.hpp"

namespace taskweb {

inline constexpr std::size_t kMaxTargetExamples = 32;
inline constexpr std::size_t kDefaultSourceExamples = 100;
inline constexpr int kEmbeddingSchemaVersion = 1;

// A handful of prompted examples standing in for an unseen target task.
struct TargetExamples {
  std::string task;
  std::vector<std::string> examples;

  TargetExamples() = default;
  TargetExamples(std::string task_id, std::vector<std::string> texts)
      : task(std::move(task_id)), examples(std::move(texts)) {
    validate();
  }

  void validate() const {
    if (task.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "target task id is empty");
    }
    if (examples.empty()) {
      throw Error(ErrorCode::kEmpty, "target " + task + " has no examples",
                  {{"task", task}});
    }
    if (examples.size() > kMaxTargetExamples) {
      throw Error(ErrorCode::kInvalidArgument,
                  "target " + task + " has more than 32 examples",
                  {{"task", task}, {"n", examples.size()}});
    }
  }
};

class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;

  // Throws UnknownSource when the provider has no representation of
  // `source` (or of the target task, for lookup-based providers).
  virtual double score(std::string_view source,
                       const TargetExamples& target) const = 0;

  virtual std::string name() const = 0;
};

inline double f_score(const SimilarityProvider& provider,
                      std::string_view source, const TargetExamples& target) {
  return provider.score(source, target);
}

// Exact lookup in a precomputed (source, target) -> score table.
class FileProvider final : public SimilarityProvider {
 public:
  FileProvider() = default;
  explicit FileProvider(const std::vector<csv::SimilarityEntry>& entries) {
    for (const auto& e : entries) add(e.source, e.target, e.score);
  }

  static FileProvider from_csv(std::istream& in) {
    return FileProvider(csv::read_similarity(in));
  }

  void add(const std::string& source, const std::string& target, double score) {
    if (!table_.emplace(std::pair{source, target}, score).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate similarity entry " + source + " -> " + target,
                  {{"source", source}, {"target", target}});
    }
  }

  double score(std::string_view source,
               const TargetExamples& target) const override {
    auto it = table_.find(std::pair{std::string(source), target.task});
    if (it == table_.end()) {
      throw Error(ErrorCode::kUnknownSource,
                  "no similarity entry for " + std::string(source) + " -> " +
                      target.task,
                  {{"source", std::string(source)}, {"target", target.task}});
    }
    return it->second;
  }

  std::string name() const override { return "file"; }

 private:
  std::map<std::pair<std::string, std::string>, double> table_;
};

// Componentwise mean of example embeddings.
inline std::vector<double> roe_pool(
    const std::vector<std::vector<double>>& example_vectors) {
  if (example_vectors.empty()) {
    throw Error(ErrorCode::kEmpty, "no vectors to pool");
  }
  const std::size_t d = example_vectors.front().size();
  std::vector<double> mean(d, 0.0);
  for (const auto& v : example_vectors) {
    if (v.size() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "pooled vectors differ in size",
                  {{"expected", d}, {"got", v.size()}});
    }
    for (std::size_t i = 0; i < d; ++i) mean[i] += v[i];
  }
  for (double& x : mean) x /= static_cast<double>(example_vectors.size());
  return mean;
}

inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cosine of unequal dimensions",
                {{"left", a.size()}, {"right", b.size()}});
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "cosine of a zero vector");
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

struct TaskEmbedding {
  std::string task;
  std::vector<double> vector;
  std::size_t n_pooled = 1;
};

// One pooled vector per task, all of the same dimension.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  void add(TaskEmbedding e) {
    if (e.vector.empty()) {
      throw Error(ErrorCode::kEmpty, "embedding for " + e.task + " is empty");
    }
    if (dim_ != 0 && e.vector.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embedding for " + e.task + " has dimension " +
                      std::to_string(e.vector.size()) + ", store uses " +
                      std::to_string(dim_),
                  {{"task", e.task}});
    }
    dim_ = e.vector.size();
    const std::string key = e.task;
    if (!by_task_.emplace(key, std::move(e)).second) {
      throw Error(ErrorCode::kDuplicateTask, "duplicate embedding for " + key,
                  {{"task", key}});
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return by_task_.size(); }

  const TaskEmbedding* find(std::string_view task) const {
    auto it = by_task_.find(task);
    return it == by_task_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, TaskEmbedding, std::less<>>& entries() const {
    return by_task_;
  }

  // JSON Lines: {"task": id, "dim": d, "n_pooled": n, "vector": [...]}
  static EmbeddingStore from_jsonl(std::istream& in) {
    EmbeddingStore store;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string path = "/" + std::to_string(line_no - 1);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        throw schema_violation(path, "invalid JSON");
      }
      if (!j.is_object()) throw schema_violation(path, "expected an object");
      for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (k != "task" && k != "dim" && k != "n_pooled" && k != "vector") {
          throw schema_violation(path + "/" + k, "unknown key");
        }
      }
      if (!j.contains("task") || !j["task"].is_string()) {
        throw schema_violation(path + "/task", "expected a string");
      }
      if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
        throw schema_violation(path + "/dim", "expected a positive integer");
      }
      if (!j.contains("vector") || !j["vector"].is_array()) {
        throw schema_violation(path + "/vector", "expected an array");
      }
      TaskEmbedding e;
      e.task = j["task"].get<std::string>();
      if (j.contains("n_pooled")) {
        if (!j["n_pooled"].is_number_unsigned()) {
          throw schema_violation(path + "/n_pooled", "expected an integer");
        }
        e.n_pooled = j["n_pooled"].get<std::size_t>();
      }
      for (std::size_t i = 0; i < j["vector"].size(); ++i) {
        const auto& x = j["vector"][i];
        if (!x.is_number()) {
          throw schema_violation(path + "/vector/" + std::to_string(i),
                                 "expected a number");
        }
        e.vector.push_back(x.get<double>());
      }
      const auto dim = j["dim"].get<std::size_t>();
      if (dim != e.vector.size()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "dim field disagrees with vector length for " + e.task,
                    {{"task", e.task}, {"path", path}});
      }
      store.add(std::move(e));
    }
    return store;
  }

  std::string to_jsonl() const {
    std::ostringstream out;
    for (const auto& [task, e] : by_task_) {
      nlohmann::json j = {{"task", task},
                          {"dim", e.vector.size()},
                          {"n_pooled", e.n_pooled},
                          {"vector", e.vector}};
      out << j.dump() << '\n';
    }
    return out.str();
  }

 private:
  std::size_t dim_ = 0;
  std::map<std::string, TaskEmbedding, std::less<>> by_task_;
};

// Retrieval-of-Experts style scorer: cosine between mean-pooled source and
// target example embeddings. Target vectors come from `targets` when given,
// otherwise from the source store.
class EmbeddingProvider final : public SimilarityProvider {
 public:
  explicit EmbeddingProvider(EmbeddingStore sources, EmbeddingStore targets = {})
      : sources_(std::move(sources)), targets_(std::move(targets)) {
    if (targets_.size() > 0 && sources_.size() > 0 &&
        targets_.dim() != sources_.dim()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "source and target embeddings differ in dimension");
    }
  }

  double score(std::string_view source,
               const TargetExamples& target) const override {
    const TaskEmbedding* s = sources_.find(source);
    if (!s) {
      throw Error(ErrorCode::kUnknownSource,
                  "no embedding for source " + std::string(source),
                  {{"source", std::string(source)}});
    }
    const TaskEmbedding* t = targets_.find(target.task);
    if (!t) t = sources_.find(target.task);
    if (!t) {
      throw Error(ErrorCode::kUnknownSource,
                  "no embedding for target " + target.task,
                  {{"target", target.task}});
    }
    return cosine(s->vector, t->vector);
  }

  std::string name() const override { return "roe"; }

 private:
  EmbeddingStore sources_;
  EmbeddingStore targets_;
};

struct JudgeScore {
  double p_yes = 0.0;
  double p_no = 0.0;
};

inline double judge_normalize(const JudgeScore& j) {
  if (!(j.p_yes >= 0.0) || !(j.p_no >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "judge probabilities must be >= 0",
                {{"p_yes", j.p_yes}, {"p_no", j.p_no}});
  }
  if (j.p_yes + j.p_no == 0.0) {
    throw Error(ErrorCode::kBothZero, "judge returned zero for yes and no");
  }
  return j.p_yes / (j.p_yes + j.p_no);
}

}  // namespace taskweb
