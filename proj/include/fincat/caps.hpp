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
#include <string_view>

namespace fincat {

/// Size limits guarding the exhaustive searches.
struct Caps {
  long long arr_base_arrows = 64;
  long long tt_iso_classes = 12;
  long long fs_arrows = 16;
  long long ladder_base_arrows = 16;
};

/// Defaults, overridden by the FINCAT_CAPS environment variable
/// ("arr=64,tt=12,fs=16,ladder=16").
Caps& caps();
/// Applies "key=value" pairs separated by commas; throws Error on bad keys.
void apply_cap_overrides(Caps& c, std::string_view overrides);
/// Throws CapExceeded when requested > limit.
void require_cap(const std::string& key, long long limit, long long requested);

}  // namespace fincat
