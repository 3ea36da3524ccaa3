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

#include <vector>

#include "fincat/factorization.hpp"

namespace fincat {

/// Every rung comparing factorization systems on A with torsion theories on
/// Arr(A), plus the lists the rungs were computed from.
struct LadderReport {
  std::vector<CheckRecord> rungs;
  std::vector<FactorizationSystem> orthogonal_systems, weak_systems;
  std::vector<TorsionPair> strict_theories, weak_theories, discrete_theories;
  bool passed() const { return all_pass(rungs); }
};

/// Throws CapExceeded when the base has more arrows than the cap.
LadderReport verify_correspondence(const ArrWorkspace& w, long long cap);
LadderReport verify_correspondence(const ArrWorkspace& w);

}  // namespace fincat
