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

// TaskShop: estimates transfer from a seen source s to an unseen target t by
// averaging pivot paths s -> p -> t,
//
//   pivot(s) = mean over p in S \ {s} with T(s->p) known of
//              (T(s->p) + F(p->t)) / 2
//   score(s) = lambda * pivot(s) + (1 - lambda) * F(s->t)
//
// where T are TaskWeb transfer scores and F is any few-example scorer.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taskweb/error.hpp"
#include "taskweb/graph.hpp"
#include "taskweb/parallel.hpp"
#include "taskweb/similarity.hpp"

namespace taskweb {

struct TaskShopConfig {
  double lambda = 0.5;  // weight on the pivot-path mean
  // Explicit pivot set; empty means every source task other than s.
  std::vector<std::string> pivots;

  void validate() const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lambda must lie in [0, 1], got " + std::to_string(lambda),
                  {{"lambda", lambda}});
    }
  }
};

struct RankedSource {
  std::string source;
  double score = 0.0;

  friend bool operator==(const RankedSource&, const RankedSource&) = default;
};

struct SelectionResult {
  std::string target;
  std::vector<RankedSource> ranked;  // score descending, ties by id
  std::string method;
};

inline std::vector<std::string> source_tasks(const ScoreView& web) {
  std::vector<std::string> out;
  for (const Task& t : web.tasks()) {
    if (t.roles.source) out.push_back(t.id);
  }
  return out;
}

// F(task -> target) for a fixed target, each computed once.
class TargetScores {
 public:
  TargetScores(const SimilarityProvider& f, const TargetExamples& target,
               const std::vector<std::string>& tasks, int jobs = 1) {
    std::vector<double> values(tasks.size());
    parallel_for(tasks.size(), jobs,
                 [&](std::size_t i) { values[i] = f.score(tasks[i], target); });
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      values_.emplace(tasks[i], values[i]);
    }
  }

  double at(std::string_view task) const {
    auto it = values_.find(task);
    if (it == values_.end()) {
      throw Error(ErrorCode::kUnknownSource,
                  "no F score for " + std::string(task),
                  {{"source", std::string(task)}});
    }
    return it->second;
  }

 private:
  std::map<std::string, double, std::less<>> values_;
};

namespace detail {

inline void check_unseen(const ScoreView& web, const TargetExamples& target) {
  if (web.contains(target.task)) {
    throw Error(ErrorCode::kLeakDetected,
                "target " + target.task +
                    " is present in the web; mask it before scoring",
                {{"target", target.task}});
  }
}

inline double taskshop_score_cached(std::string_view source,
                                    const ScoreView& web,
                                    const std::vector<std::string>& pivots,
                                    const TargetScores& f,
                                    const TaskShopConfig& cfg) {
  double acc = 0.0;
  std::size_t used = 0;
  for (const std::string& p : pivots) {
    if (p == source) continue;
    const auto t_sp = web.score(source, p);
    if (!t_sp) continue;
    acc += 0.5 * (*t_sp + f.at(p));
    ++used;
  }
  if (used == 0) {
    throw Error(ErrorCode::kNoPivots,
                "no pivot has a known transfer score from " +
                    std::string(source),
                {{"source", std::string(source)}});
  }
  const double pivot_mean = acc / static_cast<double>(used);
  return cfg.lambda * pivot_mean + (1.0 - cfg.lambda) * f.at(source);
}

inline std::vector<std::string> pivot_set(const ScoreView& web,
                                          const TaskShopConfig& cfg) {
  return cfg.pivots.empty() ? source_tasks(web) : cfg.pivots;
}

inline void sort_ranking(std::vector<RankedSource>& ranked) {
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedSource& a, const RankedSource& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.source < b.source;
            });
}

}  // namespace detail

inline double taskshop_score(std::string_view source,
                             const TargetExamples& target, const ScoreView& web,
                             const SimilarityProvider& f,
                             const TaskShopConfig& cfg = {}) {
  cfg.validate();
  target.validate();
  detail::check_unseen(web, target);
  const auto sources = source_tasks(web);
  if (std::find(sources.begin(), sources.end(), source) == sources.end()) {
    throw Error(ErrorCode::kUnknownSource,
                "source " + std::string(source) + " is not a web source task",
                {{"source", std::string(source)}});
  }
  auto pivots = detail::pivot_set(web, cfg);
  std::vector<std::string> needed = pivots;
  needed.emplace_back(source);
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  const TargetScores f_cache(f, target, needed);
  return detail::taskshop_score_cached(source, web, pivots, f_cache, cfg);
}

// Scores every source task of `web` for the target and sorts descending.
// F(p -> t) is evaluated once per task and shared across sources.
inline SelectionResult rank_sources(const TargetExamples& target,
                                    const ScoreView& web,
                                    const SimilarityProvider& f,
                                    const TaskShopConfig& cfg = {},
                                    int jobs = 1) {
  cfg.validate();
  target.validate();
  detail::check_unseen(web, target);
  const auto sources = source_tasks(web);
  if (sources.empty()) {
    throw Error(ErrorCode::kNoSources, "web has no source tasks");
  }
  const auto pivots = detail::pivot_set(web, cfg);
  std::vector<std::string> needed = sources;
  needed.insert(needed.end(), pivots.begin(), pivots.end());
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  const TargetScores f_cache(f, target, needed, jobs);

  SelectionResult out;
  out.target = target.task;
  out.method = "taskshop_" + f.name();
  out.ranked.resize(sources.size());
  parallel_for(sources.size(), jobs, [&](std::size_t i) {
    out.ranked[i] = {sources[i], detail::taskshop_score_cached(
                                     sources[i], web, pivots, f_cache, cfg)};
  });
  detail::sort_ranking(out.ranked);
  return out;
}

// Baseline ranking by F(s -> t) alone.
inline SelectionResult rank_by_provider(const TargetExamples& target,
                                        const ScoreView& web,
                                        const SimilarityProvider& f,
                                        int jobs = 1) {
  target.validate();
  detail::check_unseen(web, target);
  const auto sources = source_tasks(web);
  if (sources.empty()) {
    throw Error(ErrorCode::kNoSources, "web has no source tasks");
  }
  SelectionResult out;
  out.target = target.task;
  out.method = f.name();
  out.ranked.resize(sources.size());
  parallel_for(sources.size(), jobs, [&](std::size_t i) {
    out.ranked[i] = {sources[i], f.score(sources[i], target)};
  });
  detail::sort_ranking(out.ranked);
  return out;
}

inline std::vector<std::string> select_top_k(const SelectionResult& result,
                                             std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (k > result.ranked.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds " +
                    std::to_string(result.ranked.size()) + " ranked sources",
                {{"k", k}, {"available", result.ranked.size()}});
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(result.ranked[i].source);
  return out;
}

// The k lowest-scoring sources, worst first.
inline std::vector<std::string> select_bottom_k(const SelectionResult& result,
                                                std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (k > result.ranked.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds " +
                    std::to_string(result.ranked.size()) + " ranked sources",
                {{"k", k}, {"available", result.ranked.size()}});
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(result.ranked[result.ranked.size() - 1 - i].source);
  }
  return out;
}

}  // namespace taskweb
