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

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "taskweb/error.hpp"

namespace taskweb {

enum class Category {
  kNli,
  kParaphrase,
  kSentiment,
  kCommonsense,
  kSemantics,
  kQa,
  kOther,
};

inline constexpr std::array<Category, 7> kAllCategories = {
    Category::kNli,       Category::kParaphrase, Category::kSentiment,
    Category::kCommonsense, Category::kSemantics, Category::kQa,
    Category::kOther};

constexpr std::string_view to_string(Category c) {
  switch (c) {
    case Category::kNli: return "nli";
    case Category::kParaphrase: return "paraphrase";
    case Category::kSentiment: return "sentiment";
    case Category::kCommonsense: return "commonsense";
    case Category::kSemantics: return "semantics";
    case Category::kQa: return "qa";
    case Category::kOther: return "other";
  }
  return "other";
}

inline std::optional<Category> parse_category(std::string_view s) {
  for (Category c : kAllCategories) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

struct Roles {
  bool source = true;
  bool target = true;

  friend bool operator==(const Roles&, const Roles&) = default;
};

struct Task {
  std::string id;
  Category category = Category::kOther;
  Roles roles;

  friend bool operator==(const Task&, const Task&) = default;
};

enum class Adaptation { kFinetune, kAdapter, kBitfit };

constexpr std::string_view to_string(Adaptation a) {
  switch (a) {
    case Adaptation::kFinetune: return "finetune";
    case Adaptation::kAdapter: return "adapter";
    case Adaptation::kBitfit: return "bitfit";
  }
  return "finetune";
}

inline std::optional<Adaptation> parse_adaptation(std::string_view s) {
  if (s == "finetune") return Adaptation::kFinetune;
  if (s == "adapter") return Adaptation::kAdapter;
  if (s == "bitfit") return Adaptation::kBitfit;
  return std::nullopt;
}

struct Setup {
  std::string id;
  std::string model_family;
  std::string model_size;
  Adaptation adaptation = Adaptation::kFinetune;

  friend bool operator==(const Setup&, const Setup&) = default;
};

// One (source, target, setup, seed) experiment. `baseline_metric` is the
// target-only model's evaluation metric, `transfer_metric` the metric after
// training on source first.
struct SeedRun {
  std::string source;
  std::string target;
  std::string setup;
  std::int64_t seed = 0;
  double baseline_metric = 0.0;
  double transfer_metric = 0.0;
};

struct CellKey {
  std::string source;
  std::string target;
  std::string setup;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

inline nlohmann::json describe(const SeedRun& r) {
  return {{"source", r.source},       {"target", r.target},
          {"setup", r.setup},         {"seed", r.seed},
          {"baseline_metric", r.baseline_metric},
          {"transfer_metric", r.transfer_metric}};
}

// Known tasks and setups used to fill in categories, roles and setup
// metadata when ingesting bare experiment logs.
struct Catalog {
  std::map<std::string, Task, std::less<>> tasks;
  std::map<std::string, Setup, std::less<>> setups;

  static const Catalog& builtin() {
    static const Catalog catalog = [] {
      Catalog c;
      auto add = [&](std::string id, Category cat, bool target = true) {
        c.tasks.emplace(id, Task{id, cat, Roles{true, target}});
      };
      for (auto id : {"anli", "cb", "qnli", "rte", "scitail", "snli"})
        add(id, Category::kNli);
      for (auto id : {"mrpc", "qqp", "stsb"}) add(id, Category::kParaphrase);
      for (auto id : {"imdb", "rotten_tomatoes"}) add(id, Category::kSentiment);
      for (auto id : {"copa", "cosmosqa", "hellaswag", "piqa", "quartz",
                      "socialiqa", "winogrande"})
        add(id, Category::kCommonsense);
      for (auto id : {"wic", "wsc"}) add(id, Category::kSemantics);
      add("boolq", Category::kQa);
      add("squad2", Category::kQa, /*target=*/false);

      auto setup = [&](std::string id, std::string fam, std::string size,
                       Adaptation a) {
        c.setups.emplace(id, Setup{id, std::move(fam), std::move(size), a});
      };
      setup("t5s_ft", "t5", "small", Adaptation::kFinetune);
      setup("t5b_ft", "t5", "base", Adaptation::kFinetune);
      setup("t5l_ft", "t5", "large", Adaptation::kFinetune);
      setup("t5b_ad", "t5", "base", Adaptation::kAdapter);
      setup("t5b_bf", "t5", "base", Adaptation::kBitfit);
      setup("gpt2m_ft", "gpt2", "medium", Adaptation::kFinetune);
      setup("rob_ft", "roberta", "base", Adaptation::kFinetune);
      setup("avg7", "mixed", "mixed", Adaptation::kFinetune);
      return c;
    }();
    return catalog;
  }

  Setup setup_for(const std::string& id) const {
    if (auto it = setups.find(id); it != setups.end()) return it->second;
    auto ends_with = [&](std::string_view suffix) {
      return id.size() >= suffix.size() &&
             id.compare(id.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    Adaptation a = Adaptation::kFinetune;
    if (ends_with("_ad") || ends_with("adapter")) a = Adaptation::kAdapter;
    if (ends_with("_bf") || ends_with("bitfit")) a = Adaptation::kBitfit;
    return Setup{id, id, "", a};
  }
};

}  // namespace taskweb
