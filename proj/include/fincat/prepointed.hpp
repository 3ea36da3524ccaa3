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

#include "fincat/check.hpp"
#include "fincat/cud.hpp"
#include "fincat/kernel.hpp"

namespace fincat {

/// The preradical n: N => Id built from the kernels of identity arrows,
/// together with the comparison between its induced structure and the
/// original one.
struct IdentityKernelPreradical {
  Functor n;
  NatTrans counit;
  std::vector<HomotopyKernel> kernels;
  std::optional<InducedStructure> theta_n;
  StructureMorphism to_theta;
  StructureMorphism from_theta;
  std::vector<CheckRecord> checks;
};

/// nullopt when some identity arrow has no kernel.
std::optional<IdentityKernelPreradical> identity_kernel_preradical(const NullStructure& s);

struct PrepointedCharacterization {
  bool hypotheses_hold = false;
  std::string failed_hypothesis;
  std::optional<FullSubcategory> trivial;
  /// Q -| U -| N with U the inclusion of the trivial objects.
  std::optional<PrepointedString> string;
  std::vector<CheckRecord> checks;
};

/// Tests the two hypotheses (strong kernels and cokernels of identities,
/// trivial objects orthogonal on both sides) and, when they hold, builds the
/// reflection and coreflection onto the trivial objects.
PrepointedCharacterization characterize_prepointed(const NullStructure& s);

/// Facts about the structure induced by the unit of C -| U with U full and
/// faithful: trivial objects, the ideal and orthogonality.
std::vector<CheckRecord> monad_structure_checks(const PrepointedString& s);

}  // namespace fincat
