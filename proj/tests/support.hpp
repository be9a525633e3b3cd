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

// Graph builders and random generators shared by the test binaries.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "taskweb/error.hpp"
#include "taskweb/graph.hpp"

namespace taskweb::testing {

using EdgeMap = std::map<std::pair<std::string, std::string>, double>;

// alpha = 1 makes every cell's score equal to its pc, so edge values can be
// written directly.
inline MetricConfig identity_config() { return MetricConfig{1.0, PmScaling::kSigned}; }

inline TaskWebGraph graph_from_edges(const std::vector<std::string>& ids,
                                     const EdgeMap& edges,
                                     const std::string& setup = "s1") {
  std::vector<Task> tasks;
  for (const auto& id : ids) tasks.push_back(Task{id, Category::kOther, {}});
  std::vector<TransferCell> cells;
  for (const auto& [key, v] : edges) {
    cells.push_back({key.first, key.second, setup, v, 0.5, v, 1});
  }
  return TaskWebGraph(tasks, {Setup{setup, "test", "", Adaptation::kFinetune}},
                      cells, identity_config());
}

inline std::vector<std::string> task_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("t" + std::string(i < 10 ? "0" : "") + std::to_string(i));
  }
  return ids;
}

// Distinct-pair edges present with probability `density`, values uniform in
// [lo, hi].
inline EdgeMap random_edges(const std::vector<std::string>& ids, double density,
                            double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0), v(lo, hi);
  EdgeMap edges;
  for (const auto& s : ids) {
    for (const auto& t : ids) {
      if (s != t && u(rng) < density) edges[{s, t}] = v(rng);
    }
  }
  return edges;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

}  // namespace taskweb::testing
