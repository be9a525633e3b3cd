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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

namespace taskweb {

enum class ErrorCode {
  kEmptyLog,
  kNonPositiveBaseline,
  kDuplicateSeed,
  kSourceOnlyTarget,
  kSelfTransfer,
  kEmptyGraph,
  kInsufficientOverlap,
  kZeroVariance,
  kSchemaViolation,
  kMixedKeys,
  kPmOutOfRange,
  kEmptyThresholds,
  kUnknownSource,
  kProviderUnavailable,
  kDimensionMismatch,
  kEmpty,
  kBothZero,
  kNoPivots,
  kNoSources,
  kKTooLarge,
  kNotAPermutation,
  kMissingTruth,
  kLeakDetected,
  kPoolTooSmall,
  kDuplicateTask,
  kOverlap,
  kBadReplaceCount,
  kInvalidArgument,
  kIoError,
  kParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLog: return "EmptyLog";
    case ErrorCode::kNonPositiveBaseline: return "NonPositiveBaseline";
    case ErrorCode::kDuplicateSeed: return "DuplicateSeed";
    case ErrorCode::kSourceOnlyTarget: return "SourceOnlyTarget";
    case ErrorCode::kSelfTransfer: return "SelfTransfer";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kInsufficientOverlap: return "InsufficientOverlap";
    case ErrorCode::kZeroVariance: return "ZeroVariance";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kMixedKeys: return "MixedKeys";
    case ErrorCode::kPmOutOfRange: return "PmOutOfRange";
    case ErrorCode::kEmptyThresholds: return "EmptyThresholds";
    case ErrorCode::kUnknownSource: return "UnknownSource";
    case ErrorCode::kProviderUnavailable: return "ProviderUnavailable";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kNoPivots: return "NoPivots";
    case ErrorCode::kNoSources: return "NoSources";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kMissingTruth: return "MissingTruth";
    case ErrorCode::kLeakDetected: return "LeakDetected";
    case ErrorCode::kPoolTooSmall: return "PoolTooSmall";
    case ErrorCode::kDuplicateTask: return "DuplicateTask";
    case ErrorCode::kOverlap: return "Overlap";
    case ErrorCode::kBadReplaceCount: return "BadReplaceCount";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

// Domain error. `details` carries structured context (offending run, JSON
// pointer path, ...) and is emitted verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& details() const noexcept { return details_; }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"error", std::string(to_string(code_))},
                        {"message", what()}};
    if (!details_.empty()) j["details"] = details_;
    return j;
  }

 private:
  ErrorCode code_;
  nlohmann::json details_;
};

// Schema errors always carry a JSON-pointer-style path.
inline Error schema_violation(const std::string& path, const std::string& why) {
  return Error(ErrorCode::kSchemaViolation, path + ": " + why, {{"path", path}});
}

}  // namespace taskweb
