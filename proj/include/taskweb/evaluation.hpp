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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/graph.hpp"
#include "taskweb/parallel.hpp"
#include "taskweb/similarity.hpp"
#include "taskweb/taskshop.hpp"
#include "taskweb/types.hpp"

namespace taskweb {

inline constexpr int kReportSchemaVersion = 1;

using Truth = std::map<std::string, double, std::less<>>;

namespace detail {

inline void check_permutation(std::span<const std::string> predicted,
                              const Truth& truth) {
  std::set<std::string_view> seen;
  for (const std::string& id : predicted) {
    if (!truth.contains(id) || !seen.insert(id).second) {
      throw Error(ErrorCode::kNotAPermutation,
                  "predicted order is not a permutation of the truth keys",
                  {{"offending", id}});
    }
  }
  if (seen.size() != truth.size()) {
    throw Error(ErrorCode::kNotAPermutation,
                "predicted order covers " + std::to_string(seen.size()) +
                    " of " + std::to_string(truth.size()) + " tasks");
  }
}

// Relevance shifted so the smallest truth value maps to zero.
inline std::vector<double> shifted_relevance(std::span<const std::string> order,
                                             const Truth& truth) {
  double lo = truth.begin()->second;
  for (const auto& [id, v] : truth) lo = std::min(lo, v);
  std::vector<double> rel;
  rel.reserve(order.size());
  for (const std::string& id : order) rel.push_back(truth.find(id)->second - lo);
  return rel;
}

inline double dcg(std::span<const double> rel) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    acc += rel[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return acc;
}

}  // namespace detail

// Linear-gain NDCG of `predicted` against `truth`.
inline double ndcg(std::span<const std::string> predicted, const Truth& truth) {
  if (truth.empty()) throw Error(ErrorCode::kEmpty, "truth is empty");
  detail::check_permutation(predicted, truth);
  std::vector<double> rel = detail::shifted_relevance(predicted, truth);
  const double actual = detail::dcg(rel);
  std::sort(rel.begin(), rel.end(), std::greater<>());
  const double ideal = detail::dcg(rel);
  if (ideal == 0.0) return 1.0;
  return actual / ideal;
}

// Percent drop from the best shifted relevance to the best one in the
// predicted top-k.
inline double regret_at_k(std::span<const std::string> predicted,
                          const Truth& truth, std::size_t k) {
  if (truth.empty()) throw Error(ErrorCode::kEmpty, "truth is empty");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (k > truth.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds " +
                    std::to_string(truth.size()) + " tasks",
                {{"k", k}, {"available", truth.size()}});
  }
  detail::check_permutation(predicted, truth);
  const std::vector<double> rel = detail::shifted_relevance(predicted, truth);
  const double best = *std::max_element(rel.begin(), rel.end());
  if (best == 0.0) return 0.0;
  const double best_k = *std::max_element(rel.begin(), rel.begin() + k);
  return 100.0 * (best - best_k) / best;
}

// A view of a graph with one task removed. Any read of an edge touching the
// masked task is counted and raises LeakDetected.
class MaskedView final : public ScoreView {
 public:
  MaskedView(const ScoreView& base, std::string masked)
      : base_(&base), masked_(std::move(masked)) {
    for (const Task& t : base.tasks()) {
      if (t.id != masked_) tasks_.push_back(t);
    }
  }

  const std::vector<Task>& tasks() const override { return tasks_; }

  std::optional<double> score(std::string_view source,
                              std::string_view target) const override {
    reads_.fetch_add(1, std::memory_order_relaxed);
    if (source == masked_ || target == masked_) {
      leaks_.fetch_add(1, std::memory_order_relaxed);
      throw Error(ErrorCode::kLeakDetected,
                  "read of masked edge " + std::string(source) + " -> " +
                      std::string(target),
                  {{"source", std::string(source)},
                   {"target", std::string(target)},
                   {"masked", masked_}});
    }
    return base_->score(source, target);
  }

  const std::string& masked() const { return masked_; }
  std::uint64_t reads() const { return reads_.load(); }
  std::uint64_t target_incident_reads() const { return leaks_.load(); }

 private:
  const ScoreView* base_;
  std::string masked_;
  std::vector<Task> tasks_;
  mutable std::atomic<std::uint64_t> reads_{0};
  mutable std::atomic<std::uint64_t> leaks_{0};
};

// Produces a best-first order over the source tasks of `web`.
using RankingMethod = std::function<std::vector<std::string>(
    const ScoreView& web, const TargetExamples& target)>;

inline std::vector<std::string> ranked_ids(const SelectionResult& r) {
  std::vector<std::string> out;
  out.reserve(r.ranked.size());
  for (const auto& x : r.ranked) out.push_back(x.source);
  return out;
}

inline RankingMethod taskshop_method(const SimilarityProvider& f,
                                     TaskShopConfig cfg = {}) {
  return [&f, cfg](const ScoreView& web, const TargetExamples& target) {
    return ranked_ids(rank_sources(target, web, f, cfg));
  };
}

inline RankingMethod provider_method(const SimilarityProvider& f) {
  return [&f](const ScoreView& web, const TargetExamples& target) {
    return ranked_ids(rank_by_provider(target, web, f));
  };
}

struct RankingEvaluation {
  std::string target;
  Category category = Category::kOther;
  double ndcg = 0.0;
  std::map<std::size_t, double> regret_at_k;
};

struct MetricSummary {
  std::size_t n_targets = 0;
  double ndcg = 0.0;
  std::map<std::size_t, double> regret_at_k;
};

struct LooReport {
  std::string method;
  std::vector<std::size_t> k_values;
  std::vector<RankingEvaluation> per_target;
  std::map<Category, MetricSummary> per_category;
  MetricSummary mean;
  std::uint64_t reads = 0;
  std::uint64_t target_incident_reads = 0;
};

struct LooOptions {
  // Empty evaluates every task with the target role.
  std::vector<std::string> targets;
  int jobs = 1;
};

// Incoming averaged scores T(s -> target) over every other source task.
inline Truth incoming_truth(const TaskWebGraph& web, std::string_view target) {
  Truth truth;
  for (const Task& s : web.tasks()) {
    if (s.id == target || !s.roles.source) continue;
    if (auto v = avg_score(web, s.id, target)) truth.emplace(s.id, *v);
  }
  return truth;
}

namespace detail {

inline MetricSummary summarize(const std::vector<const RankingEvaluation*>& xs,
                               std::span<const std::size_t> k_values) {
  MetricSummary m;
  m.n_targets = xs.size();
  for (std::size_t k : k_values) m.regret_at_k[k] = 0.0;
  for (const auto* e : xs) {
    m.ndcg += e->ndcg;
    for (std::size_t k : k_values) m.regret_at_k[k] += e->regret_at_k.at(k);
  }
  const double n = static_cast<double>(xs.size());
  m.ndcg /= n;
  for (auto& [k, v] : m.regret_at_k) v /= n;
  return m;
}

}  // namespace detail

// Leave-one-out: each target is hidden from the web handed to `method`, and
// the returned order is scored against the unmasked incoming scores.
inline LooReport loo_evaluate(
    const TaskWebGraph& web, const RankingMethod& method,
    std::vector<std::size_t> k_values,
    const std::map<std::string, TargetExamples, std::less<>>& examples,
    const LooOptions& options = {}, std::string method_name = "method") {
  if (k_values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no k values given");
  }
  std::sort(k_values.begin(), k_values.end());
  k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());

  std::vector<std::string> targets = options.targets;
  if (targets.empty()) {
    for (const Task& t : web.tasks()) {
      if (t.roles.target) targets.push_back(t.id);
    }
  }
  if (targets.empty()) throw Error(ErrorCode::kEmpty, "no targets to evaluate");

  std::vector<Truth> truths(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string& t = targets[i];
    if (!web.find_task(t)) {
      throw Error(ErrorCode::kMissingTruth, "target " + t + " is not in the web",
                  {{"target", t}});
    }
    truths[i] = incoming_truth(web, t);
    if (truths[i].empty()) {
      throw Error(ErrorCode::kMissingTruth,
                  "target " + t + " has no incoming scores", {{"target", t}});
    }
    if (!examples.contains(t)) {
      throw Error(ErrorCode::kMissingTruth,
                  "target " + t + " has no example asset", {{"target", t}});
    }
    for (std::size_t k : k_values) {
      if (k == 0 || k > truths[i].size()) {
        throw Error(ErrorCode::kKTooLarge,
                    "k = " + std::to_string(k) + " invalid for target " + t,
                    {{"k", k}, {"available", truths[i].size()}, {"target", t}});
      }
    }
  }

  const AveragedView base(web);
  LooReport report;
  report.method = std::move(method_name);
  report.k_values = k_values;
  report.per_target.resize(targets.size());
  std::vector<std::uint64_t> reads(targets.size(), 0), leaks(targets.size(), 0);

  parallel_for(targets.size(), options.jobs, [&](std::size_t i) {
    const std::string& t = targets[i];
    const MaskedView masked(base, t);
    std::vector<std::string> order = method(masked, examples.find(t)->second);
    reads[i] = masked.reads();
    leaks[i] = masked.target_incident_reads();
    if (leaks[i] != 0) {
      // The method swallowed the exception; still a leak.
      throw Error(ErrorCode::kLeakDetected,
                  "method read " + std::to_string(leaks[i]) +
                      " masked edges for target " + t,
                  {{"target", t}, {"reads", leaks[i]}});
    }
    std::erase_if(order, [&](const std::string& id) {
      return !truths[i].contains(id);
    });
    RankingEvaluation e;
    e.target = t;
    e.category = web.find_task(t)->category;
    e.ndcg = ndcg(order, truths[i]);
    for (std::size_t k : k_values) e.regret_at_k[k] = regret_at_k(order, truths[i], k);
    report.per_target[i] = std::move(e);
  });

  std::map<Category, std::vector<const RankingEvaluation*>> groups;
  std::vector<const RankingEvaluation*> all;
  for (const auto& e : report.per_target) {
    groups[e.category].push_back(&e);
    all.push_back(&e);
  }
  for (const auto& [c, xs] : groups) {
    report.per_category[c] = detail::summarize(xs, k_values);
  }
  report.mean = detail::summarize(all, k_values);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    report.reads += reads[i];
    report.target_incident_reads += leaks[i];
  }
  return report;
}

inline nlohmann::json to_json(const MetricSummary& m) {
  nlohmann::json regret = nlohmann::json::object();
  for (const auto& [k, v] : m.regret_at_k) regret[std::to_string(k)] = v;
  return {{"n_targets", m.n_targets}, {"ndcg", m.ndcg}, {"regret_at_k", regret}};
}

inline nlohmann::json method_json(const LooReport& r) {
  nlohmann::json per_target = nlohmann::json::array();
  for (const auto& e : r.per_target) {
    nlohmann::json regret = nlohmann::json::object();
    for (const auto& [k, v] : e.regret_at_k) regret[std::to_string(k)] = v;
    per_target.push_back({{"target", e.target},
                          {"category", std::string(to_string(e.category))},
                          {"ndcg", e.ndcg},
                          {"regret_at_k", regret}});
  }
  nlohmann::json per_category = nlohmann::json::object();
  for (const auto& [c, m] : r.per_category) {
    per_category[std::string(to_string(c))] = to_json(m);
  }
  return {{"per_category", per_category},
          {"mean", to_json(r.mean)},
          {"per_target", per_target},
          {"masked_reads", r.reads},
          {"target_incident_reads", r.target_incident_reads}};
}

// Report layout: one entry per method with per-category and mean metrics.
inline nlohmann::json report_json(const std::vector<LooReport>& reports) {
  nlohmann::json methods = nlohmann::json::object();
  std::vector<std::size_t> ks;
  for (const auto& r : reports) {
    methods[r.method] = method_json(r);
    if (ks.empty()) ks = r.k_values;
  }
  return {{"schema_version", kReportSchemaVersion},
          {"metadata",
           {{"protocol", "leave-one-out"},
            {"gain", "linear"},
            {"relevance_shift", "min"},
            {"aggregation", "unweighted_mean"},
            {"k_values", ks}}},
          {"methods", methods}};
}

}  // namespace taskweb
