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

// Run configuration: a small TOML-like key/value document overlaid by
// command-line flags and environment variables.
//
//   # comment
//   alpha = 0.5
//   [judge]
//   endpoint = "http://localhost:8080/v1/judge"
//
// Keys inside a [section] are addressed as "section.key".

#pragma once

#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "taskweb/error.hpp"

namespace taskweb {

class ConfigFile {
 public:
  ConfigFile() = default;

  static ConfigFile parse(std::istream& in) {
    ConfigFile cfg;
    std::string line, section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view s = trim(strip_comment(line));
      if (s.empty()) continue;
      auto fail = [&](const std::string& why) {
        return Error(ErrorCode::kParseError,
                     "config line " + std::to_string(line_no) + ": " + why,
                     {{"line", line_no}});
      };
      if (s.front() == '[') {
        if (s.back() != ']') throw fail("unterminated section header");
        section = std::string(trim(s.substr(1, s.size() - 2)));
        if (section.empty()) throw fail("empty section name");
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string_view::npos) throw fail("expected key = value");
      const std::string key(trim(s.substr(0, eq)));
      std::string_view value = trim(s.substr(eq + 1));
      if (key.empty()) throw fail("empty key");
      std::string parsed;
      if (!value.empty() && value.front() == '"') {
        if (value.size() < 2 || value.back() != '"') throw fail("unterminated string");
        parsed = unescape(value.substr(1, value.size() - 2));
      } else {
        parsed = std::string(value);
      }
      const std::string full = section.empty() ? key : section + "." + key;
      if (!cfg.values_.emplace(full, parsed).second) {
        throw fail("duplicate key " + full);
      }
    }
    return cfg;
  }

  std::optional<std::string> get(std::string_view key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, std::string, std::less<>>& values() const {
    return values_;
  }

 private:
  static std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
      if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
  }

  static std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static std::string unescape(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) {
        const char c = s[++i];
        out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
      } else {
        out += s[i];
      }
    }
    return out;
  }

  std::map<std::string, std::string, std::less<>> values_;
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

inline std::optional<std::string> process_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

// Resolves one setting: environment (when `env_var` is set) over the flag,
// over the config file, over `fallback`.
inline std::optional<std::string> resolve_setting(
    const char* env_var, const std::optional<std::string>& flag,
    const ConfigFile& file, std::string_view key,
    std::optional<std::string> fallback = std::nullopt,
    const EnvLookup& env = process_env) {
  if (env_var) {
    if (auto v = env(env_var)) return v;
  }
  if (flag) return flag;
  if (auto v = file.get(key)) return v;
  return fallback;
}

}  // namespace taskweb
