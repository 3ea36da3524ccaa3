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

#include "fincat/dsl/parser.hpp"
#include "fincat/dsl/report.hpp"

namespace fincat::dsl {

/// Unknown command, name or flag combination; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  bool via_pullback = false;
  bool strong = false;
  bool weak = false;
  bool quasi_proper = false;
  std::optional<std::string> level;
  std::optional<long long> cap;
  std::optional<std::string> lift;
};

/// One line per command, for usage messages.
const std::vector<std::string>& command_usage();

/// Runs one command. Throws UsageError, Error and CapExceeded; the caller
/// maps them to exit codes.
Report run_command(const Workspace& ws, const Invocation& inv);

}  // namespace fincat::dsl
