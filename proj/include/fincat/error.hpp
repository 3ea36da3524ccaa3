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

#include <stdexcept>
#include <string>

namespace fincat {

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string key, long long limit, long long requested)
      : Error("cap exceeded: " + key + " = " + std::to_string(requested) +
              " (limit " + std::to_string(limit) + ")"),
        key_(std::move(key)),
        limit_(limit),
        requested_(requested) {}

  const std::string& key() const { return key_; }
  long long limit() const { return limit_; }
  long long requested() const { return requested_; }

 private:
  std::string key_;
  long long limit_;
  long long requested_;
};

}  // namespace fincat
