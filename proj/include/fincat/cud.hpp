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
#include <vector>

#include "fincat/check.hpp"
#include "fincat/functor.hpp"
#include "fincat/induced.hpp"

namespace fincat {

/// A string of adjunctions C -| U -| D with U: A -> B full and faithful.
/// cu has unit gamma: Id_B => UC and counit delta: CU => Id_A; ud has unit
/// alpha: Id_A => DU and counit beta: UD => Id_B.
struct PrepointedString {
  Adjunction cu;
  Adjunction ud;

  const Functor& c() const { return cu.left; }
  const Functor& u() const { return cu.right; }
  const Functor& d() const { return ud.right; }
  const NatTrans& gamma() const { return cu.unit; }
  const NatTrans& delta() const { return cu.counit; }
  const NatTrans& alpha() const { return ud.unit; }
  const NatTrans& beta() const { return ud.counit; }
};

std::vector<Diagnostic> verify_string(const PrepointedString& s);

/// The four structures on B and the comparison morphisms between them.
struct CudReport {
  std::vector<CheckRecord> checks;
  std::optional<InducedStructure> theta_beta, theta_gamma, theta_gamma_beta, theta_a;
  StructureMorphism gb_to_g, g_to_gb, gb_to_b, b_to_gb, g_to_a, a_to_g;

  bool passed() const { return all_pass(checks); }
};

CudReport cud_compare(const PrepointedString& s);

}  // namespace fincat
