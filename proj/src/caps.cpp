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

#include "fincat/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "fincat/error.hpp"

namespace fincat {

Caps& caps() {
  static Caps c = [] {
    Caps d;
    if (const char* env = std::getenv("FINCAT_CAPS")) apply_cap_overrides(d, env);
    return d;
  }();
  return c;
}

void apply_cap_overrides(Caps& c, std::string_view overrides) {
  std::stringstream in{std::string(overrides)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("cap override '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("cap override '" + item + "' has a non-numeric value");
    }
    if (key == "arr")
      c.arr_base_arrows = value;
    else if (key == "tt")
      c.tt_iso_classes = value;
    else if (key == "fs")
      c.fs_arrows = value;
    else if (key == "ladder")
      c.ladder_base_arrows = value;
    else
      throw Error("unknown cap '" + key + "' (expected arr, tt, fs or ladder)");
  }
}

void require_cap(const std::string& key, long long limit, long long requested) {
  if (requested > limit) throw CapExceeded(key, limit, requested);
}

}  // namespace fincat
