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
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/graph.hpp"
#include "taskweb/parallel.hpp"

namespace taskweb {

enum class Verdict { kSameSign, kOppositeSign, kZero };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSameSign: return "same_sign";
    case Verdict::kOppositeSign: return "opposite_sign";
    case Verdict::kZero: return "zero";
  }
  return "zero";
}

struct UndirectedPair {
  std::string task_a;  // task_a < task_b
  std::string task_b;
  double score_ab = 0.0;
  double score_ba = 0.0;
  Verdict verdict = Verdict::kZero;
};

struct CommutativityReport {
  std::size_t pairs_total = 0;
  std::size_t same_sign = 0;
  std::size_t opposite_sign = 0;
  std::size_t zero = 0;
  std::vector<UndirectedPair> pairs;
};

// Sign agreement between A->B and B->A over every unordered pair present in
// both directions. A zero score in either direction gets its own verdict.
inline CommutativityReport commutativity(const ScoreView& view) {
  const DenseScores d = DenseScores::from(view);
  CommutativityReport r;
  bool any_edge = false;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      any_edge = any_edge || (a != b && d.has(a, b));
    }
  }
  if (!any_edge) throw Error(ErrorCode::kEmptyGraph, "graph has no edges");

  // DenseScores orders ids as the view does; pairs are reported with the
  // lexicographically smaller id first.
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (!d.has(a, b) || !d.has(b, a)) continue;
      std::size_t lo = a, hi = b;
      if (d.ids[hi] < d.ids[lo]) std::swap(lo, hi);
      UndirectedPair p{d.ids[lo], d.ids[hi], d.at(lo, hi), d.at(hi, lo),
                       Verdict::kZero};
      if (p.score_ab == 0.0 || p.score_ba == 0.0) {
        p.verdict = Verdict::kZero;
        ++r.zero;
      } else if ((p.score_ab > 0.0) == (p.score_ba > 0.0)) {
        p.verdict = Verdict::kSameSign;
        ++r.same_sign;
      } else {
        p.verdict = Verdict::kOppositeSign;
        ++r.opposite_sign;
      }
      r.pairs.push_back(std::move(p));
    }
  }
  r.pairs_total = r.pairs.size();
  std::sort(r.pairs.begin(), r.pairs.end(),
            [](const UndirectedPair& x, const UndirectedPair& y) {
              return std::tie(x.task_a, x.task_b) < std::tie(y.task_a, y.task_b);
            });
  return r;
}

struct TransitivityPoint {
  double threshold = 0.0;
  std::uint64_t eligible_triples = 0;
  std::uint64_t positive_triples = 0;
  // Undefined (nullopt) when no triple is eligible.
  std::optional<double> positive_fraction;
};

struct TransitivityCurve {
  std::vector<TransitivityPoint> points;
};

// For each threshold, counts ordered triples of distinct tasks (A, B, C)
// with T(A->B) >= theta, T(B->C) >= theta and T(A->C) present, and the
// fraction of those with T(A->C) > 0. Work is split by source task A over
// `jobs` threads; counts are merged in index order.
inline TransitivityCurve transitivity_curve(const ScoreView& view,
                                            std::span<const double> thresholds,
                                            int jobs = 1) {
  if (thresholds.empty()) {
    throw Error(ErrorCode::kEmptyThresholds, "no thresholds given");
  }
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "thresholds must be strictly ascending");
    }
  }
  const DenseScores d = DenseScores::from(view);
  const std::size_t n = d.size();
  const std::size_t k = thresholds.size();
  std::vector<std::uint64_t> eligible(n * k, 0), positive(n * k, 0);

  parallel_for(n, jobs, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !d.has(a, b)) continue;
      const double ab = d.at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !d.has(b, c) || !d.has(a, c)) continue;
        const double leg = std::min(ab, d.at(b, c));
        const bool closes_positive = d.at(a, c) > 0.0;
        for (std::size_t i = 0; i < k && leg >= thresholds[i]; ++i) {
          ++eligible[a * k + i];
          if (closes_positive) ++positive[a * k + i];
        }
      }
    }
  });

  TransitivityCurve curve;
  for (std::size_t i = 0; i < k; ++i) {
    TransitivityPoint p;
    p.threshold = thresholds[i];
    for (std::size_t a = 0; a < n; ++a) {
      p.eligible_triples += eligible[a * k + i];
      p.positive_triples += positive[a * k + i];
    }
    if (p.eligible_triples > 0) {
      p.positive_fraction = static_cast<double>(p.positive_triples) /
                            static_cast<double>(p.eligible_triples);
    }
    curve.points.push_back(p);
  }
  return curve;
}

// Parses "start:stop:step" into an inclusive ascending grid.
inline std::vector<double> parse_threshold_range(std::string_view range) {
  std::vector<double> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = range.find(':', pos);
    const auto token = range.substr(pos, colon == std::string_view::npos
                                            ? std::string_view::npos
                                            : colon - pos);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad threshold range '" + std::string(range) + "'");
    }
    parts.push_back(v);
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold range must be start:stop:step with step > 0");
  }
  std::vector<double> out;
  const auto steps = static_cast<std::int64_t>(
      std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (std::int64_t i = 0; i <= steps; ++i) {
    // Round to 12 decimals so 0.01 + 3 * 0.01 prints and compares as 0.04.
    const double v = parts[0] + static_cast<double>(i) * parts[2];
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

inline nlohmann::json to_json(const CommutativityReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"task_a", p.task_a},
                     {"task_b", p.task_b},
                     {"score_ab", p.score_ab},
                     {"score_ba", p.score_ba},
                     {"verdict", std::string(to_string(p.verdict))}});
  }
  return {{"pairs_total", r.pairs_total},
          {"same_sign", r.same_sign},
          {"opposite_sign", r.opposite_sign},
          {"zero", r.zero},
          {"pairs", pairs}};
}

inline nlohmann::json to_json(const TransitivityCurve& c) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : c.points) {
    points.push_back(
        {{"threshold", p.threshold},
         {"eligible_triples", p.eligible_triples},
         {"positive_triples", p.positive_triples},
         {"positive_fraction",
          p.positive_fraction ? nlohmann::json(*p.positive_fraction)
                              : nlohmann::json(nullptr)}});
  }
  return {{"points", points}};
}

}  // namespace taskweb
