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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/hash.hpp"
#include "taskweb/parallel.hpp"

namespace taskweb {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr int kPoolSchemaVersion = 1;

struct Example {
  std::string id;
  std::string prompt;
  std::string answer;
};

struct ExamplePool {
  std::string task;
  std::vector<Example> examples;
};

using PoolMap = std::map<std::string, ExamplePool, std::less<>>;

// One {"id", "prompt", "answer"} object per line.
inline ExamplePool read_pool(std::istream& in, std::string task) {
  ExamplePool pool{std::move(task), {}};
  std::set<std::string> ids;
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
    for (const char* key : {"id", "prompt", "answer"}) {
      if (!j.contains(key) || !j[key].is_string()) {
        throw schema_violation(path + "/" + key, "expected a string");
      }
    }
    Example e{j["id"].get<std::string>(), j["prompt"].get<std::string>(),
              j["answer"].get<std::string>()};
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::kSchemaViolation,
                  "duplicate example id " + e.id + " in pool " + pool.task,
                  {{"path", path + "/id"}, {"task", pool.task}});
    }
    pool.examples.push_back(std::move(e));
  }
  return pool;
}

// Every <task>.jsonl file in `dir`, keyed by file stem.
inline PoolMap read_pool_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + dir.string());
  }
  PoolMap pools;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    if (!in) throw Error(ErrorCode::kIoError, "cannot read " + entry.path().string());
    const std::string task = entry.path().stem().string();
    pools.emplace(task, read_pool(in, task));
  }
  return pools;
}

inline std::string write_pool(const ExamplePool& pool) {
  std::ostringstream out;
  for (const Example& e : pool.examples) {
    out << nlohmann::json{{"id", e.id}, {"prompt", e.prompt}, {"answer", e.answer}}
               .dump()
        << '\n';
  }
  return out.str();
}

struct Recipe {
  std::string method = "explicit";
  std::size_t k = 0;
  std::size_t per_task = 0;
  std::uint64_t seed = 0;
  std::size_t replaced = 0;
  std::vector<std::string> tasks;
};

struct ManifestRow {
  std::string task;
  std::string example_id;
  std::string prompt;
  std::string answer;

  friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

struct TrainingManifest {
  std::string target;
  Recipe recipe;
  std::vector<ManifestRow> rows;

  std::string to_jsonl() const {
    std::ostringstream out;
    const nlohmann::json meta = {
        {"schema_version", kManifestSchemaVersion},
        {"target", target},
        {"recipe",
         {{"method", recipe.method},
          {"k", recipe.k},
          {"per_task", recipe.per_task},
          {"seed", recipe.seed},
          {"replaced", recipe.replaced},
          {"tasks", recipe.tasks}}},
        {"n_rows", rows.size()}};
    out << meta.dump() << '\n';
    for (const ManifestRow& r : rows) {
      out << nlohmann::json{{"task", r.task},
                            {"example_id", r.example_id},
                            {"prompt", r.prompt},
                            {"answer", r.answer}}
                 .dump()
          << '\n';
    }
    return out.str();
  }
};

// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

inline std::mt19937_64 task_rng(std::uint64_t seed, std::string_view task) {
  return std::mt19937_64(splitmix64(seed ^ fnv1a64(task)));
}

// First `m` positions of a Fisher-Yates shuffle of [0, n).
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t m,
                                               std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(m);
  return idx;
}

inline TrainingManifest build_manifest(const std::string& target,
                                       const std::vector<std::string>& selected,
                                       const PoolMap& pools, std::size_t per_task,
                                       std::uint64_t seed, int jobs = 1) {
  if (per_task == 0) {
    throw Error(ErrorCode::kInvalidArgument, "per_task must be positive");
  }
  if (selected.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no tasks selected");
  }
  std::set<std::string_view> seen;
  for (const std::string& t : selected) {
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::kDuplicateTask, "task " + t + " selected twice",
                  {{"task", t}});
    }
    if (t == target) {
      throw Error(ErrorCode::kLeakDetected,
                  "target " + t + " cannot be a training task", {{"target", t}});
    }
    auto it = pools.find(t);
    const std::size_t have = it == pools.end() ? 0 : it->second.examples.size();
    if (have < per_task) {
      throw Error(ErrorCode::kPoolTooSmall,
                  "pool for " + t + " has " + std::to_string(have) +
                      " examples, need " + std::to_string(per_task),
                  {{"task", t}, {"have", have}, {"need", per_task}});
    }
  }

  std::vector<std::vector<ManifestRow>> parts(selected.size());
  parallel_for(selected.size(), jobs, [&](std::size_t i) {
    const ExamplePool& pool = pools.find(selected[i])->second;
    auto rng = task_rng(seed, selected[i]);
    for (std::size_t j : sample_indices(pool.examples.size(), per_task, rng)) {
      const Example& e = pool.examples[j];
      parts[i].push_back({selected[i], e.id, e.prompt, e.answer});
    }
  });

  TrainingManifest m;
  m.target = target;
  m.recipe.k = selected.size();
  m.recipe.per_task = per_task;
  m.recipe.seed = seed;
  m.recipe.tasks = selected;
  m.rows.reserve(selected.size() * per_task);
  for (auto& p : parts) {
    for (auto& r : p) m.rows.push_back(std::move(r));
  }
  return m;
}

// Replaces the tail of `top` with the head of `bottom`, keeping the task
// count and so the row count fixed.
inline TrainingManifest mix_manifest(const std::string& target,
                                     const std::vector<std::string>& top,
                                     const std::vector<std::string>& bottom,
                                     std::size_t replace_count,
                                     const PoolMap& pools, std::size_t per_task,
                                     std::uint64_t seed, int jobs = 1) {
  if (top.size() != bottom.size()) {
    throw Error(ErrorCode::kInvalidArgument, "top and bottom differ in size",
                {{"top", top.size()}, {"bottom", bottom.size()}});
  }
  if (replace_count > top.size()) {
    throw Error(ErrorCode::kBadReplaceCount,
                "replace count " + std::to_string(replace_count) + " exceeds " +
                    std::to_string(top.size()),
                {{"replace_count", replace_count}, {"max", top.size()}});
  }
  const std::set<std::string> top_set(top.begin(), top.end());
  for (const std::string& t : bottom) {
    if (top_set.contains(t)) {
      throw Error(ErrorCode::kOverlap, "task " + t + " is in both top and bottom",
                  {{"task", t}});
    }
  }
  std::vector<std::string> tasks(top.begin(),
                                 top.end() - static_cast<std::ptrdiff_t>(replace_count));
  tasks.insert(tasks.end(), bottom.begin(),
               bottom.begin() + static_cast<std::ptrdiff_t>(replace_count));
  TrainingManifest m = build_manifest(target, tasks, pools, per_task, seed, jobs);
  m.recipe.method = "mix";
  m.recipe.replaced = replace_count;
  return m;
}

// k distinct candidates drawn with the manifest sampler.
inline std::vector<std::string> random_tasks(
    const std::vector<std::string>& candidates, std::size_t k,
    std::uint64_t seed) {
  if (k > candidates.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds " +
                    std::to_string(candidates.size()) + " candidates",
                {{"k", k}, {"available", candidates.size()}});
  }
  auto rng = task_rng(seed, "random-selection");
  std::vector<std::string> out;
  for (std::size_t j : sample_indices(candidates.size(), k, rng)) {
    out.push_back(candidates[j]);
  }
  return out;
}

}  // namespace taskweb
