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

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fincat {

/// A subset of {0, ..., n-1}, used for object and arrow classes.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : bits_(universe, false) {}

  static Subset all(std::size_t universe) {
    Subset s(universe);
    s.bits_.assign(universe, true);
    return s;
  }
  static Subset of(std::size_t universe, const std::vector<int>& members) {
    Subset s(universe);
    for (int m : members) s.insert(m);
    return s;
  }
  static Subset of(std::size_t universe, std::initializer_list<int> members) {
    return of(universe, std::vector<int>(members));
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(int i) const { return i >= 0 && static_cast<std::size_t>(i) < bits_.size() && bits_[i]; }
  void insert(int i) { bits_.at(i) = true; }
  void erase(int i) { bits_.at(i) = false; }

  std::size_t count() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  bool empty() const { return count() == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  bool subset_of(const Subset& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.contains(static_cast<int>(i))) return false;
    return true;
  }

  Subset operator&(const Subset& o) const {
    Subset r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && o.contains(static_cast<int>(i));
    return r;
  }
  Subset operator|(const Subset& o) const {
    Subset r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] || o.contains(static_cast<int>(i));
    return r;
  }
  bool operator==(const Subset& o) const = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace fincat
