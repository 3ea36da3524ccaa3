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

#include "fincat/category.hpp"
#include "fincat/nullhomotopy.hpp"

namespace fincat {

enum class IdealKind { not_ideal, ideal, closed };

struct IdealVerdict {
  IdealKind kind = IdealKind::not_ideal;
  /// For non-ideals, a member whose composite escapes; for non-closed
  /// ideals, a member not factoring through a trivial object.
  std::optional<ArrowId> witness;
  std::optional<ArrowId> escaping_composite;
};

IdealVerdict classify_ideal(const Category& c, const Subset& arrows);
bool is_ideal(const Category& c, const Subset& arrows);
bool is_closed_ideal(const Category& c, const Subset& arrows);

/// Objects whose identity lies in the class.
Subset trivial_objects(const Category& c, const Subset& arrows);
/// Arrows factoring through one of the objects.
Subset generated_ideal(const Category& c, const Subset& objects);
Subset retract_closure(const Category& c, const Subset& objects);
bool is_retract_closed(const Category& c, const Subset& objects);

/// Arrows carrying at least one homotopy.
Subset ideal_of(const NullStructure& s);
/// Objects whose identity carries a homotopy.
Subset trivial_objects(const NullStructure& s);

/// The structure with one homotopy over each arrow of an ideal.
NullStructure discrete_structure(CategoryPtr base, const Subset& ideal, const std::string& name);

/// Canonical collapse of a structure onto a discrete one over an ideal
/// containing its support; nullopt when the ideal is too small.
std::optional<StructureMorphism> collapse_onto(const NullStructure& s, const NullStructure& discrete);

}  // namespace fincat
