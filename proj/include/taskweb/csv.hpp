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

// Minimal RFC 4180 reader for the experiment-log and similarity files.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "taskweb/error.hpp"
#include "taskweb/types.hpp"

namespace taskweb::csv {

using Row = std::vector<std::string>;

// Splits one logical record; quoted fields may contain commas, doubled
// quotes and newlines (continuation lines are pulled from `in`).
inline bool read_row(std::istream& in, Row& row, std::size_t& line_no) {
  row.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++line_no;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0;; ++i) {
    if (i == line.size()) {
      if (quoted) {
        field.push_back('\n');
        if (!std::getline(in, line)) {
          throw Error(ErrorCode::kParseError, "unterminated quoted field",
                      {{"line", line_no}});
        }
        ++line_no;
        i = static_cast<std::size_t>(-1);
        continue;
      }
      break;
    }
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c != '\r' || i + 1 != line.size()) {
      field.push_back(c);
    }
  }
  row.push_back(std::move(field));
  return true;
}

inline double parse_double(std::string_view s, std::size_t line,
                           std::string_view column) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParseError,
                "bad number '" + std::string(s) + "' in column " +
                    std::string(column),
                {{"line", line}, {"column", std::string(column)}});
  }
  return v;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line,
                              std::string_view column) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParseError,
                "bad integer '" + std::string(s) + "' in column " +
                    std::string(column),
                {{"line", line}, {"column", std::string(column)}});
  }
  return v;
}

namespace detail {

inline std::map<std::string, std::size_t> header_index(
    std::istream& in, std::size_t& line_no,
    const std::vector<std::string>& required) {
  Row header;
  if (!read_row(in, header, line_no)) {
    throw Error(ErrorCode::kParseError, "missing CSV header");
  }
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header[0].erase(0, 3);
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) index[header[i]] = i;
  for (const auto& name : required) {
    if (!index.contains(name)) {
      throw Error(ErrorCode::kParseError, "CSV header lacks column " + name,
                  {{"column", name}});
    }
  }
  return index;
}

inline bool blank(const Row& row) {
  return row.size() == 1 && row[0].empty();
}

}  // namespace detail

// Header: source,target,setup,seed,baseline_metric,transfer_metric
inline std::vector<SeedRun> read_runs(std::istream& in) {
  std::size_t line_no = 0;
  const auto idx = detail::header_index(
      in, line_no,
      {"source", "target", "setup", "seed", "baseline_metric",
       "transfer_metric"});
  std::vector<SeedRun> runs;
  Row row;
  while (read_row(in, row, line_no)) {
    if (detail::blank(row)) continue;
    if (row.size() != idx.size()) {
      throw Error(ErrorCode::kParseError, "wrong field count",
                  {{"line", line_no}, {"fields", row.size()}});
    }
    SeedRun r;
    r.source = row[idx.at("source")];
    r.target = row[idx.at("target")];
    r.setup = row[idx.at("setup")];
    r.seed = parse_int(row[idx.at("seed")], line_no, "seed");
    r.baseline_metric =
        parse_double(row[idx.at("baseline_metric")], line_no, "baseline_metric");
    r.transfer_metric =
        parse_double(row[idx.at("transfer_metric")], line_no, "transfer_metric");
    runs.push_back(std::move(r));
  }
  return runs;
}

struct SimilarityEntry {
  std::string source;
  std::string target;
  double score = 0.0;
};

// Header: source,target,score
inline std::vector<SimilarityEntry> read_similarity(std::istream& in) {
  std::size_t line_no = 0;
  const auto idx =
      detail::header_index(in, line_no, {"source", "target", "score"});
  std::vector<SimilarityEntry> out;
  Row row;
  while (read_row(in, row, line_no)) {
    if (detail::blank(row)) continue;
    if (row.size() != idx.size()) {
      throw Error(ErrorCode::kParseError, "wrong field count",
                  {{"line", line_no}, {"fields", row.size()}});
    }
    out.push_back({row[idx.at("source")], row[idx.at("target")],
                   parse_double(row[idx.at("score")], line_no, "score")});
  }
  return out;
}

}  // namespace taskweb::csv
