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

#include <string>
#include <vector>

namespace fincat {

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "hypothesis not met";
  }
  return "?";
}

/// Outcome of one replayed property.
struct CheckRecord {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::vector<std::string> witnesses;

  bool operator==(const CheckRecord&) const = default;
};

/// "1 square", "3 squares".
inline std::string count_of(std::size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

inline bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.verdict == Verdict::fail) return false;
  return true;
}

inline CheckRecord make_check(std::string name, std::string anchor, bool ok, std::string detail = {},
                              std::vector<std::string> witnesses = {}) {
  return CheckRecord{std::move(name), std::move(anchor), ok ? Verdict::pass : Verdict::fail, std::move(detail),
                     std::move(witnesses)};
}

}  // namespace fincat
