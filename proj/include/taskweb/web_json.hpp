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

// TaskWeb document (version 1):
//
//   {
//     "version": 1,
//     "alpha": 0.5,
//     "pm_scaling": "signed",            optional, defaults to "signed"
//     "provenance": {...},               optional
//     "tasks":  [{"id", "category", "roles": ["source", "target"]}],
//     "setups": [{"id", "model_family", "model_size", "adaptation"}],
//     "cells":  [{"source", "target", "setup", "pc", "pm", "score",
//                 "n_seeds"}]
//   }
//
// Field order is irrelevant; unknown keys are rejected.

#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taskweb/error.hpp"
#include "taskweb/graph.hpp"

namespace taskweb {

inline constexpr int kWebSchemaVersion = 1;

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& path,
                           std::initializer_list<std::string_view> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw schema_violation(path + "/" + it.key(), "unknown key");
  }
}

inline const json& require(const json& obj, const std::string& path,
                           const char* key) {
  if (!obj.is_object()) throw schema_violation(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw schema_violation(path + "/" + key, "missing");
  return *it;
}

inline std::string require_string(const json& obj, const std::string& path,
                                  const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_string()) {
    throw schema_violation(path + "/" + key, "expected a string");
  }
  return v.get<std::string>();
}

inline double require_number(const json& obj, const std::string& path,
                             const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_number()) {
    throw schema_violation(path + "/" + key, "expected a number");
  }
  return v.get<double>();
}

inline const json& require_array(const json& obj, const std::string& path,
                                 const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_array()) throw schema_violation(path + "/" + key, "expected an array");
  return v;
}

}  // namespace detail

inline nlohmann::json web_to_json(const TaskWebGraph& g) {
  using nlohmann::json;
  json doc = json::object();
  doc["version"] = kWebSchemaVersion;
  doc["alpha"] = g.alpha();
  doc["pm_scaling"] = std::string(to_string(g.config().pm_scaling));
  if (!g.provenance().empty()) doc["provenance"] = g.provenance();
  json tasks = json::array();
  for (const Task& t : g.tasks()) {
    json roles = json::array();
    if (t.roles.source) roles.push_back("source");
    if (t.roles.target) roles.push_back("target");
    tasks.push_back({{"id", t.id},
                     {"category", std::string(to_string(t.category))},
                     {"roles", roles}});
  }
  doc["tasks"] = std::move(tasks);
  json setups = json::array();
  for (const Setup& s : g.setups()) {
    setups.push_back({{"id", s.id},
                      {"model_family", s.model_family},
                      {"model_size", s.model_size},
                      {"adaptation", std::string(to_string(s.adaptation))}});
  }
  doc["setups"] = std::move(setups);
  json cells = json::array();
  for (const TransferCell& c : g.cells()) {
    cells.push_back({{"source", c.source},
                     {"target", c.target},
                     {"setup", c.setup},
                     {"pc", c.pc},
                     {"pm", c.pm},
                     {"score", c.score},
                     {"n_seeds", c.n_seeds}});
  }
  doc["cells"] = std::move(cells);
  return doc;
}

inline std::string save_web(const TaskWebGraph& g) {
  return web_to_json(g).dump(1) + "\n";
}

inline TaskWebGraph web_from_json(const nlohmann::json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw schema_violation("", "expected an object");
  reject_unknown(doc, "",
                 {"version", "alpha", "pm_scaling", "provenance", "tasks",
                  "setups", "cells"});
  const json& version = require(doc, "", "version");
  if (!version.is_number_integer()) {
    throw schema_violation("/version", "expected an integer");
  }
  if (version.get<int>() != kWebSchemaVersion) {
    throw schema_violation("/version", "unsupported version " + version.dump());
  }

  MetricConfig cfg;
  cfg.alpha = require_number(doc, "", "alpha");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw schema_violation("/alpha", "alpha outside [0, 1]");
  }
  if (auto it = doc.find("pm_scaling"); it != doc.end()) {
    auto s = it->is_string() ? parse_pm_scaling(it->get<std::string>())
                             : std::nullopt;
    if (!s) throw schema_violation("/pm_scaling", "expected raw or signed");
    cfg.pm_scaling = *s;
  }
  json provenance = json::object();
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_object()) {
      throw schema_violation("/provenance", "expected an object");
    }
    provenance = *it;
  }

  std::vector<Task> tasks;
  const json& jtasks = require_array(doc, "", "tasks");
  for (std::size_t i = 0; i < jtasks.size(); ++i) {
    const std::string path = "/tasks/" + std::to_string(i);
    const json& jt = jtasks[i];
    if (!jt.is_object()) throw schema_violation(path, "expected an object");
    reject_unknown(jt, path, {"id", "category", "roles"});
    Task t;
    t.id = require_string(jt, path, "id");
    auto cat = parse_category(require_string(jt, path, "category"));
    if (!cat) throw schema_violation(path + "/category", "unknown category");
    t.category = *cat;
    const json& roles = require_array(jt, path, "roles");
    t.roles = Roles{false, false};
    for (std::size_t r = 0; r < roles.size(); ++r) {
      const std::string rp = path + "/roles/" + std::to_string(r);
      if (!roles[r].is_string()) throw schema_violation(rp, "expected a string");
      const auto role = roles[r].get<std::string>();
      if (role == "source") {
        t.roles.source = true;
      } else if (role == "target") {
        t.roles.target = true;
      } else {
        throw schema_violation(rp, "unknown role " + role);
      }
    }
    if (!t.roles.source && !t.roles.target) {
      throw schema_violation(path + "/roles", "task needs at least one role");
    }
    tasks.push_back(std::move(t));
  }

  std::vector<Setup> setups;
  const json& jsetups = require_array(doc, "", "setups");
  for (std::size_t i = 0; i < jsetups.size(); ++i) {
    const std::string path = "/setups/" + std::to_string(i);
    const json& js = jsetups[i];
    if (!js.is_object()) throw schema_violation(path, "expected an object");
    reject_unknown(js, path, {"id", "model_family", "model_size", "adaptation"});
    Setup s;
    s.id = require_string(js, path, "id");
    s.model_family = require_string(js, path, "model_family");
    s.model_size = require_string(js, path, "model_size");
    auto a = parse_adaptation(require_string(js, path, "adaptation"));
    if (!a) throw schema_violation(path + "/adaptation", "unknown adaptation");
    s.adaptation = *a;
    setups.push_back(std::move(s));
  }

  std::vector<TransferCell> cells;
  const json& jcells = require_array(doc, "", "cells");
  for (std::size_t i = 0; i < jcells.size(); ++i) {
    const std::string path = "/cells/" + std::to_string(i);
    const json& jc = jcells[i];
    if (!jc.is_object()) throw schema_violation(path, "expected an object");
    reject_unknown(jc, path,
                   {"source", "target", "setup", "pc", "pm", "score", "n_seeds"});
    TransferCell c;
    c.source = require_string(jc, path, "source");
    c.target = require_string(jc, path, "target");
    c.setup = require_string(jc, path, "setup");
    c.pc = require_number(jc, path, "pc");
    c.pm = require_number(jc, path, "pm");
    c.score = require_number(jc, path, "score");
    const json& n = require(jc, path, "n_seeds");
    if (!n.is_number_integer()) {
      throw schema_violation(path + "/n_seeds", "expected an integer");
    }
    c.n_seeds = n.get<int>();
    cells.push_back(std::move(c));
  }

  // Referential checks (unknown tasks, roles, score consistency) run in the
  // graph constructor and report the same /cells/<i>/... paths.
  return TaskWebGraph(std::move(tasks), std::move(setups), std::move(cells),
                      cfg, std::move(provenance));
}

inline TaskWebGraph load_web(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation,
                std::string("invalid JSON: ") + e.what(), {{"path", ""}});
  }
  return web_from_json(doc);
}

}  // namespace taskweb
