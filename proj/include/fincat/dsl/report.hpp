// Copyright 2026 The fincat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincat/check.hpp"

namespace fincat::dsl {

inline constexpr const char* kReportVersion = "1";

enum class ExitCode { pass = 0, fail = 1, input_error = 2, cap_exceeded = 3 };

/// Outcome of one CLI command.
struct Report {
  std::string command;
  /// Summary values in insertion order.
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  std::vector<std::string> warnings;
  /// Milliseconds; printed only when set.
  std::optional<double> timing_ms;
  ExitCode status = ExitCode::pass;
};

/// pass unless some check failed.
ExitCode status_of(const std::vector<CheckRecord>& checks);

std::string emit_json(const Report& r);
std::string emit_human(const Report& r);
/// Inverse of emit_json; throws Error on malformed input.
Report parse_report_json(const std::string& text);

bool operator==(const Report& a, const Report& b);

}  // namespace fincat::dsl
