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

// Per-edge transfer metrics computed from seed runs:
//
//   pc  mean over seeds of (transfer - baseline) / baseline
//   pm  fraction of seeds with transfer > baseline (ties are not positive)
//
// and their linear interpolation into a single edge score.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "taskweb/error.hpp"
#include "taskweb/types.hpp"

namespace taskweb {

enum class PmScaling {
  kRaw,     // pm in [0, 1]
  kSigned,  // 2 * pm - 1 in [-1, 1]
};

constexpr std::string_view to_string(PmScaling s) {
  return s == PmScaling::kRaw ? "raw" : "signed";
}

inline std::optional<PmScaling> parse_pm_scaling(std::string_view s) {
  if (s == "raw") return PmScaling::kRaw;
  if (s == "signed") return PmScaling::kSigned;
  return std::nullopt;
}

struct MetricConfig {
  double alpha = 0.5;  // weight on pc
  PmScaling pm_scaling = PmScaling::kSigned;

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "alpha must lie in [0, 1], got " + std::to_string(alpha),
                  {{"alpha", alpha}});
    }
  }

  friend bool operator==(const MetricConfig&, const MetricConfig&) = default;
};

namespace detail {

inline void check_same_key(std::span<const SeedRun> runs) {
  if (runs.empty()) throw Error(ErrorCode::kEmpty, "no runs for metric");
  const SeedRun& first = runs.front();
  for (const SeedRun& r : runs) {
    if (r.source != first.source || r.target != first.target ||
        r.setup != first.setup) {
      throw Error(ErrorCode::kMixedKeys,
                  "runs mix (source, target, setup) keys",
                  {{"first", describe(first)}, {"offending", describe(r)}});
    }
  }
}

}  // namespace detail

inline double pc(std::span<const SeedRun> runs) {
  detail::check_same_key(runs);
  double sum = 0.0;
  for (const SeedRun& r : runs) {
    if (!(r.baseline_metric > 0.0)) {
      throw Error(ErrorCode::kNonPositiveBaseline,
                  "baseline_metric must be > 0", {{"run", describe(r)}});
    }
    sum += (r.transfer_metric - r.baseline_metric) / r.baseline_metric;
  }
  return sum / static_cast<double>(runs.size());
}

inline double pm(std::span<const SeedRun> runs) {
  detail::check_same_key(runs);
  std::size_t improved = 0;
  for (const SeedRun& r : runs) {
    if (r.transfer_metric > r.baseline_metric) ++improved;
  }
  return static_cast<double>(improved) / static_cast<double>(runs.size());
}

inline double scale_pm(double pm_val, PmScaling scaling) {
  return scaling == PmScaling::kSigned ? 2.0 * pm_val - 1.0 : pm_val;
}

inline double combine(double pc_val, double pm_val, const MetricConfig& cfg) {
  if (!(pm_val >= 0.0 && pm_val <= 1.0)) {
    throw Error(ErrorCode::kPmOutOfRange,
                "pm must lie in [0, 1], got " + std::to_string(pm_val),
                {{"pm", pm_val}});
  }
  return cfg.alpha * pc_val +
         (1.0 - cfg.alpha) * scale_pm(pm_val, cfg.pm_scaling);
}

}  // namespace taskweb
