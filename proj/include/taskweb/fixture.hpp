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

// The bundled 22-task web averaged over seven setups, plus matching mock
// embeddings and example pools for offline runs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "taskweb/fixture_data.hpp"
#include "taskweb/graph.hpp"
#include "taskweb/similarity.hpp"
#include "taskweb/trainset.hpp"
#include "taskweb/types.hpp"

namespace taskweb {

inline constexpr const char* kFixtureSetup = "avg7";
inline constexpr int kFixtureDisplayDecimals = 2;

inline std::vector<Task> fixture_tasks() {
  std::vector<Task> tasks;
  for (const auto& row : fixture_data::kTasks) {
    tasks.push_back(Task{std::string(row.id),
                         parse_category(row.category).value_or(Category::kOther),
                         Roles{true, row.target}});
  }
  return tasks;
}

inline TaskWebGraph published_fixture() {
  const MetricConfig cfg{};
  const auto tasks = fixture_tasks();
  std::vector<TransferCell> cells;
  cells.reserve(fixture_data::kCells.size());
  for (const auto& c : fixture_data::kCells) {
    TransferCell cell;
    cell.source = tasks[c.source].id;
    cell.target = tasks[c.target].id;
    cell.setup = kFixtureSetup;
    cell.pc = c.pc;
    cell.pm = static_cast<double>(c.pm_count) / fixture_data::kSeedsPerCell;
    cell.score = combine(cell.pc, cell.pm, cfg);
    cell.n_seeds = fixture_data::kSeedsPerCell;
    cells.push_back(std::move(cell));
  }
  nlohmann::json provenance = {
      {"display_decimals", kFixtureDisplayDecimals},
      {"generator", "tools/gen_fixture.py"},
      {"generator_seed", fixture_data::kGeneratorSeed},
      {"note",
       "synthetic reconstruction matching the reference sign, commutativity "
       "and transitivity aggregates"}};
  return TaskWebGraph(tasks, {Catalog::builtin().setup_for(kFixtureSetup)},
                      std::move(cells), cfg, std::move(provenance));
}

// A seed-level log whose ingestion reproduces every fixture cell: per cell,
// pm_count seeds improve on the baseline and the rest do not, with relative
// changes averaging to the cell's pc.
inline std::vector<SeedRun> fixture_runs() {
  constexpr int n = fixture_data::kSeedsPerCell;
  const auto tasks = fixture_tasks();
  std::vector<SeedRun> runs;
  runs.reserve(fixture_data::kCells.size() * n);
  for (const auto& c : fixture_data::kCells) {
    const int k = c.pm_count;
    const double total = c.pc * n;
    // Positive seeds gain `up`, the others lose `down` >= 0.
    double up = 0.0, down = 0.0;
    if (k == 0) {
      down = -c.pc;
    } else if (k == n) {
      up = c.pc;
    } else {
      up = std::max(0.01, total / k + 0.01);
      down = (k * up - total) / (n - k);
    }
    for (int i = 0; i < n; ++i) {
      const double baseline = 0.55 + 0.005 * static_cast<double>(i % 7);
      const double rel = i < k ? up : -down;
      runs.push_back({tasks[c.source].id, tasks[c.target].id, kFixtureSetup, i,
                      baseline, baseline * (1.0 + rel)});
    }
  }
  return runs;
}

inline EmbeddingStore fixture_embeddings() {
  EmbeddingStore store;
  for (std::size_t i = 0; i < fixture_data::kTasks.size(); ++i) {
    const auto& v = fixture_data::kEmbeddings[i];
    store.add({std::string(fixture_data::kTasks[i].id),
               std::vector<double>(v.begin(), v.end()), kDefaultSourceExamples});
  }
  return store;
}

// Deterministic placeholder pools: `size` examples per fixture task.
inline PoolMap fixture_pools(std::size_t size) {
  PoolMap pools;
  for (const auto& row : fixture_data::kTasks) {
    ExamplePool pool{std::string(row.id), {}};
    pool.examples.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      const std::string n = std::to_string(i);
      pool.examples.push_back({pool.task + "-" + n,
                               "[" + pool.task + "] example " + n,
                               "answer " + std::to_string(i % 4)});
    }
    pools.emplace(pool.task, std::move(pool));
  }
  return pools;
}

inline TargetExamples fixture_target_examples(const std::string& task,
                                              std::size_t n = 32) {
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < n; ++i) {
    texts.push_back("[" + task + "] example " + std::to_string(i));
  }
  return TargetExamples(task, std::move(texts));
}

}  // namespace taskweb
