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

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fincat/functor.hpp"
#include "fincat/nullhomotopy.hpp"

namespace fincat {

enum class InducedMode { preradical, precoradical, pair, subcategory };

/// A structure built from functorial data, with the witness of every
/// homotopy: one arrow, or (g1, A, g2) for the subcategory mode.
struct InducedStructure {
  InducedMode mode;
  NullStructure structure;
  std::vector<std::vector<int>> witness;
  /// Whether validate_structure ran; large structures rely on the verified
  /// functorial input instead.
  bool laws_checked = false;

  std::optional<HomotopyId> find(ArrowId g, const std::vector<int>& w) const;

  std::unordered_map<std::uint64_t, HomotopyId> index;
  std::size_t key_radix = 0;
};

/// Theta(g: X -> Y) = { psi: X -> RY | beta_Y . psi = g } for beta: R => Id.
InducedStructure induce_from_preradical(const NatTrans& beta, const std::string& name);
/// Theta(g: X -> Y) = { phi: SX -> Y | phi . gamma_X = g } for gamma: Id => S.
InducedStructure induce_from_precoradical(const NatTrans& gamma, const std::string& name);
/// Theta(g: X -> Y) = { l: SX -> RY | beta_Y . l . gamma_X = g }.
InducedStructure induce_from_pair(const NatTrans& gamma, const NatTrans& beta, const std::string& name);
/// Factorizations of g through the image of a full and faithful functor.
InducedStructure induce_from_subcategory(const Functor& u, const std::string& name);

bool is_full_and_faithful(const Functor& u);

/// Default bound on validate_structure work inside the induce_* builders.
inline double induced_validation_budget = 2e8;

}  // namespace fincat
