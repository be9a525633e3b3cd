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
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/transfer_metrics.hpp"
#include "taskweb/types.hpp"

namespace taskweb {

struct TransferCell {
  std::string source;
  std::string target;
  std::string setup;
  double pc = 0.0;
  double pm = 0.0;
  double score = 0.0;
  int n_seeds = 1;

  CellKey key() const { return {source, target, setup}; }
  friend bool operator==(const TransferCell&, const TransferCell&) = default;
};

// Directed transfer graph over tasks and training setups. Immutable once
// constructed; tasks, setups and cells are kept sorted by id/key so equal
// content always compares (and serializes) equal.
class TaskWebGraph {
 public:
  TaskWebGraph(std::vector<Task> tasks, std::vector<Setup> setups,
               std::vector<TransferCell> cells, MetricConfig config,
               nlohmann::json provenance = nlohmann::json::object())
      : tasks_(std::move(tasks)),
        setups_(std::move(setups)),
        cells_(std::move(cells)),
        config_(config),
        provenance_(std::move(provenance)) {
    if (provenance_.is_null()) provenance_ = nlohmann::json::object();
    if (!provenance_.is_object()) {
      throw schema_violation("/provenance", "expected an object");
    }
    validate();
    std::sort(tasks_.begin(), tasks_.end(),
              [](const Task& a, const Task& b) { return a.id < b.id; });
    std::sort(setups_.begin(), setups_.end(),
              [](const Setup& a, const Setup& b) { return a.id < b.id; });
    std::sort(cells_.begin(), cells_.end(),
              [](const TransferCell& a, const TransferCell& b) {
                return a.key() < b.key();
              });
    for (std::size_t i = 0; i < tasks_.size(); ++i) index_[tasks_[i].id] = i;
    build_average();
  }

  const std::vector<Task>& tasks() const { return tasks_; }
  const std::vector<Setup>& setups() const { return setups_; }
  const std::vector<TransferCell>& cells() const { return cells_; }
  const MetricConfig& config() const { return config_; }
  double alpha() const { return config_.alpha; }
  const nlohmann::json& provenance() const { return provenance_; }
  std::size_t size() const { return tasks_.size(); }

  std::optional<std::size_t> task_index(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Task* find_task(std::string_view id) const {
    auto i = task_index(id);
    return i ? &tasks_[*i] : nullptr;
  }

  bool has_setup(std::string_view id) const {
    return std::any_of(setups_.begin(), setups_.end(),
                       [&](const Setup& s) { return s.id == id; });
  }

  const TransferCell* find_cell(std::string_view source,
                                std::string_view target,
                                std::string_view setup) const {
    CellKey key{std::string(source), std::string(target), std::string(setup)};
    auto it = std::lower_bound(cells_.begin(), cells_.end(), key,
                               [](const TransferCell& c, const CellKey& k) {
                                 return c.key() < k;
                               });
    if (it == cells_.end() || it->key() != key) return nullptr;
    return &*it;
  }

  // Mean of per-setup scores over the setups where the cell exists; absent
  // pairs stay absent.
  std::optional<double> avg_score(std::string_view source,
                                  std::string_view target) const {
    if (source == target) {
      throw Error(ErrorCode::kSelfTransfer,
                  "self transfer " + std::string(source),
                  {{"task", std::string(source)}});
    }
    auto s = task_index(source);
    auto t = task_index(target);
    if (!s || !t) return std::nullopt;
    double v = averaged_[*s * tasks_.size() + *t];
    if (std::isnan(v)) return std::nullopt;
    return v;
  }

  // Dense averaged matrix, row = source, NaN where absent.
  double averaged_at(std::size_t source, std::size_t target) const {
    return averaged_[source * tasks_.size() + target];
  }

  friend bool operator==(const TaskWebGraph& a, const TaskWebGraph& b) {
    return a.tasks_ == b.tasks_ && a.setups_ == b.setups_ &&
           a.cells_ == b.cells_ && a.config_ == b.config_ &&
           a.provenance_ == b.provenance_;
  }

 private:
  void validate() const {
    config_.validate();
    std::map<std::string, const Task*, std::less<>> by_id;
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      const Task& t = tasks_[i];
      const std::string path = "/tasks/" + std::to_string(i);
      if (t.id.empty()) throw schema_violation(path + "/id", "empty task id");
      if (!by_id.emplace(t.id, &t).second) {
        throw schema_violation(path + "/id", "duplicate task id " + t.id);
      }
    }
    std::set<std::string, std::less<>> setup_ids;
    for (std::size_t i = 0; i < setups_.size(); ++i) {
      const std::string path = "/setups/" + std::to_string(i);
      if (setups_[i].id.empty()) {
        throw schema_violation(path + "/id", "empty setup id");
      }
      if (!setup_ids.insert(setups_[i].id).second) {
        throw schema_violation(path + "/id",
                               "duplicate setup id " + setups_[i].id);
      }
    }
    std::set<CellKey> keys;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const TransferCell& c = cells_[i];
      const std::string path = "/cells/" + std::to_string(i);
      auto src = by_id.find(c.source);
      if (src == by_id.end()) {
        throw schema_violation(path + "/source", "unknown task " + c.source);
      }
      auto tgt = by_id.find(c.target);
      if (tgt == by_id.end()) {
        throw schema_violation(path + "/target", "unknown task " + c.target);
      }
      if (c.source == c.target) {
        throw schema_violation(path + "/target", "self transfer " + c.source);
      }
      if (!src->second->roles.source) {
        throw schema_violation(path + "/source",
                               c.source + " lacks the source role");
      }
      if (!tgt->second->roles.target) {
        throw schema_violation(path + "/target",
                               c.target + " lacks the target role");
      }
      if (!setup_ids.contains(c.setup)) {
        throw schema_violation(path + "/setup", "unknown setup " + c.setup);
      }
      if (!(c.pm >= 0.0 && c.pm <= 1.0)) {
        throw schema_violation(path + "/pm", "pm outside [0, 1]");
      }
      if (c.n_seeds < 1) {
        throw schema_violation(path + "/n_seeds", "n_seeds must be >= 1");
      }
      if (!std::isfinite(c.pc)) {
        throw schema_violation(path + "/pc", "pc must be finite");
      }
      if (combine(c.pc, c.pm, config_) != c.score) {
        throw schema_violation(path + "/score",
                               "score differs from combine(pc, pm)");
      }
      if (!keys.insert(c.key()).second) {
        throw schema_violation(path, "duplicate cell key");
      }
    }
  }

  void build_average() {
    const std::size_t n = tasks_.size();
    averaged_.assign(n * n, std::numeric_limits<double>::quiet_NaN());
    // cells_ is sorted by (source, target, setup): each run of equal
    // (source, target) is summed in setup-id order.
    for (std::size_t i = 0; i < cells_.size();) {
      std::size_t j = i;
      double sum = 0.0;
      while (j < cells_.size() && cells_[j].source == cells_[i].source &&
             cells_[j].target == cells_[i].target) {
        sum += cells_[j].score;
        ++j;
      }
      const std::size_t s = index_.find(cells_[i].source)->second;
      const std::size_t t = index_.find(cells_[i].target)->second;
      averaged_[s * n + t] = sum / static_cast<double>(j - i);
      i = j;
    }
  }

  std::vector<Task> tasks_;
  std::vector<Setup> setups_;
  std::vector<TransferCell> cells_;
  MetricConfig config_;
  nlohmann::json provenance_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<double> averaged_;
};

inline std::optional<double> avg_score(const TaskWebGraph& g,
                                       std::string_view source,
                                       std::string_view target) {
  return g.avg_score(source, target);
}

// Read access to one flavour of transfer scores (a single setup, the
// averaged view, or a masked view during leave-one-out evaluation).
class ScoreView {
 public:
  virtual ~ScoreView() = default;
  virtual const std::vector<Task>& tasks() const = 0;
  virtual std::optional<double> score(std::string_view source,
                                      std::string_view target) const = 0;

  bool contains(std::string_view task) const {
    const auto& ts = tasks();
    return std::any_of(ts.begin(), ts.end(),
                       [&](const Task& t) { return t.id == task; });
  }
};

class AveragedView final : public ScoreView {
 public:
  explicit AveragedView(const TaskWebGraph& g) : g_(&g) {}

  const std::vector<Task>& tasks() const override { return g_->tasks(); }

  std::optional<double> score(std::string_view source,
                              std::string_view target) const override {
    if (source == target) return std::nullopt;
    return g_->avg_score(source, target);
  }

 private:
  const TaskWebGraph* g_;
};

class SetupView final : public ScoreView {
 public:
  SetupView(const TaskWebGraph& g, std::string setup)
      : g_(&g), setup_(std::move(setup)) {
    if (!g.has_setup(setup_)) {
      throw Error(ErrorCode::kInvalidArgument, "unknown setup " + setup_,
                  {{"setup", setup_}});
    }
  }

  const std::vector<Task>& tasks() const override { return g_->tasks(); }

  std::optional<double> score(std::string_view source,
                              std::string_view target) const override {
    const TransferCell* c = g_->find_cell(source, target, setup_);
    if (!c) return std::nullopt;
    return c->score;
  }

 private:
  const TaskWebGraph* g_;
  std::string setup_;
};

// Averaged view when `setup` is empty, otherwise that setup's scores.
inline std::unique_ptr<ScoreView> make_view(
    const TaskWebGraph& g, const std::optional<std::string>& setup) {
  if (setup) return std::make_unique<SetupView>(g, *setup);
  return std::make_unique<AveragedView>(g);
}

// Dense snapshot of a view; NaN marks absent edges.
struct DenseScores {
  std::vector<std::string> ids;
  std::vector<double> values;  // row-major, row = source

  std::size_t size() const { return ids.size(); }
  double at(std::size_t s, std::size_t t) const {
    return values[s * ids.size() + t];
  }
  bool has(std::size_t s, std::size_t t) const { return !std::isnan(at(s, t)); }

  static DenseScores from(const ScoreView& view) {
    DenseScores d;
    for (const Task& t : view.tasks()) d.ids.push_back(t.id);
    const std::size_t n = d.ids.size();
    d.values.assign(n * n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        if (auto v = view.score(d.ids[s], d.ids[t])) d.values[s * n + t] = *v;
      }
    }
    return d;
  }
};

// Builds one cell per (source, target, setup) from raw seed runs. The result
// does not depend on the order of `log`.
inline TaskWebGraph ingest_runs(std::span<const SeedRun> log,
                                const MetricConfig& config,
                                const Catalog& catalog = Catalog::builtin()) {
  config.validate();
  if (log.empty()) throw Error(ErrorCode::kEmptyLog, "experiment log is empty");

  std::map<CellKey, std::vector<SeedRun>> groups;
  std::set<std::pair<CellKey, std::int64_t>> seen;
  for (const SeedRun& r : log) {
    if (r.source.empty() || r.target.empty() || r.setup.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "run with empty identifier",
                  {{"run", describe(r)}});
    }
    if (r.source == r.target) {
      throw Error(ErrorCode::kSelfTransfer, "self transfer in log",
                  {{"run", describe(r)}});
    }
    if (!(r.baseline_metric > 0.0)) {
      throw Error(ErrorCode::kNonPositiveBaseline,
                  "baseline_metric must be > 0", {{"run", describe(r)}});
    }
    if (!std::isfinite(r.transfer_metric) || !std::isfinite(r.baseline_metric)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite metric",
                  {{"run", describe(r)}});
    }
    if (r.seed < 0) {
      throw Error(ErrorCode::kInvalidArgument, "seed must be >= 0",
                  {{"run", describe(r)}});
    }
    CellKey key{r.source, r.target, r.setup};
    if (!seen.emplace(key, r.seed).second) {
      throw Error(ErrorCode::kDuplicateSeed, "duplicate seed in log",
                  {{"run", describe(r)}});
    }
    groups[key].push_back(r);
  }

  std::map<std::string, Roles> roles;
  std::set<std::string> setup_ids;
  std::vector<TransferCell> cells;
  cells.reserve(groups.size());
  for (auto& [key, runs] : groups) {
    std::sort(runs.begin(), runs.end(),
              [](const SeedRun& a, const SeedRun& b) { return a.seed < b.seed; });
    roles.try_emplace(key.source, Roles{false, false}).first->second.source = true;
    roles.try_emplace(key.target, Roles{false, false}).first->second.target = true;
    setup_ids.insert(key.setup);
    TransferCell c;
    c.source = key.source;
    c.target = key.target;
    c.setup = key.setup;
    c.pc = pc(runs);
    c.pm = pm(runs);
    c.score = combine(c.pc, c.pm, config);
    c.n_seeds = static_cast<int>(runs.size());
    cells.push_back(std::move(c));
  }

  std::vector<Task> tasks;
  for (const auto& [id, r] : roles) {
    Task t{id, Category::kOther, r};
    if (auto it = catalog.tasks.find(id); it != catalog.tasks.end()) {
      t.category = it->second.category;
      if (r.target && !it->second.roles.target) {
        throw Error(ErrorCode::kSourceOnlyTarget,
                    id + " is a source-only task but appears as a target",
                    {{"task", id}});
      }
    }
    tasks.push_back(std::move(t));
  }
  std::vector<Setup> setups;
  for (const auto& id : setup_ids) setups.push_back(catalog.setup_for(id));

  return TaskWebGraph(std::move(tasks), std::move(setups), std::move(cells),
                      config, {{"ingested_runs", log.size()}});
}

struct PositivityReport {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t total = 0;

  friend bool operator==(const PositivityReport&,
                         const PositivityReport&) = default;
};

// Zero band implied by the graph's recorded display precision (scores that
// print as 0.00 at two decimals count as zero), or 0 when none is recorded.
inline double display_zero_band(const TaskWebGraph& g) {
  const auto& p = g.provenance();
  if (p.is_object() && p.contains("display_decimals") &&
      p["display_decimals"].is_number_integer()) {
    return 0.5 * std::pow(10.0, -p["display_decimals"].get<int>());
  }
  return 0.0;
}

// Sign counts over the averaged view. |score| < zero_band counts as zero;
// with zero_band = 0 only exact zeros do.
inline PositivityReport positivity_report(const TaskWebGraph& g,
                                          double zero_band = 0.0) {
  if (g.cells().empty()) throw Error(ErrorCode::kEmptyGraph, "graph is empty");
  PositivityReport r;
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const double v = g.averaged_at(s, t);
      if (std::isnan(v)) continue;
      ++r.total;
      if (std::abs(v) < zero_band || v == 0.0) {
        ++r.zero;
      } else if (v > 0.0) {
        ++r.positive;
      } else {
        ++r.negative;
      }
    }
  }
  return r;
}

struct SetupSimilarity {
  std::vector<std::string> setups;
  std::vector<std::vector<double>> matrix;
  std::vector<std::vector<std::size_t>> overlap;  // shared edge counts
};

namespace detail {

inline double pearson(std::span<const double> x, std::span<const double> y) {
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
  };
  if (constant(x) || constant(y)) {
    throw Error(ErrorCode::kZeroVariance,
                "setup scores have zero variance over shared edges");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace detail

// Pearson correlation between every pair of setups' score matrices,
// flattened over the (source, target) keys both setups share.
inline SetupSimilarity setup_similarity(const TaskWebGraph& g) {
  if (g.setups().size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two setups");
  }
  SetupSimilarity out;
  for (const Setup& s : g.setups()) out.setups.push_back(s.id);
  const std::size_t k = out.setups.size();

  std::vector<std::map<std::pair<std::string, std::string>, double>> per(k);
  for (const TransferCell& c : g.cells()) {
    auto it = std::lower_bound(out.setups.begin(), out.setups.end(), c.setup);
    per[static_cast<std::size_t>(it - out.setups.begin())][{c.source, c.target}] =
        c.score;
  }

  out.matrix.assign(k, std::vector<double>(k, 1.0));
  out.overlap.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    out.overlap[a][a] = per[a].size();
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<double> x, y;
      for (const auto& [key, v] : per[a]) {
        if (auto it = per[b].find(key); it != per[b].end()) {
          x.push_back(v);
          y.push_back(it->second);
        }
      }
      if (x.size() < 3) {
        throw Error(ErrorCode::kInsufficientOverlap,
                    "setups " + out.setups[a] + " and " + out.setups[b] +
                        " share fewer than 3 edges",
                    {{"setups", {out.setups[a], out.setups[b]}},
                     {"shared", x.size()}});
      }
      const double r = detail::pearson(x, y);
      out.matrix[a][b] = out.matrix[b][a] = r;
      out.overlap[a][b] = out.overlap[b][a] = x.size();
    }
  }
  return out;
}

}  // namespace taskweb
