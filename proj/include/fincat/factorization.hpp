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

#include "fincat/arrow_category.hpp"
#include "fincat/torsion.hpp"

namespace fincat {

/// A pair of arrow classes (E, M).
struct FactorizationSystem {
  std::string name;
  Subset e;
  Subset m;
};

/// x = m.e through the object mid.
struct Factorization {
  ArrowId e = kNone;
  ObjectId mid = kNone;
  ArrowId m = kNone;
};

enum class FSLevel { orthogonal, weak, none };
const char* to_string(FSLevel level);

/// A commutative square m.h = h0.e together with its diagonals.
struct LiftingSquare {
  ArrowId e = kNone, m = kNone, h = kNone, h0 = kNone;
  std::vector<ArrowId> diagonals;
};

struct OrthogonalityVerdict {
  bool ok = true;
  std::optional<LiftingSquare> failure;
};

OrthogonalityVerdict check_orthogonal(const Category& c, ArrowId e, ArrowId m, bool unique);

struct FSVerdict {
  FSLevel level = FSLevel::none;
  bool iso_stable = false;
  bool factorizes = false;
  /// Orthogonal, with E epis and M monos.
  bool proper = false;
  /// Units of E-objects epi and counits of M-objects mono in Arr(A).
  bool quasi_proper = false;
  /// The square criterion over every factorization.
  bool quasi_proper_squares = false;
  std::string failure;
  std::vector<std::string> witnesses;

  bool at_least(FSLevel wanted) const {
    return level != FSLevel::none && (wanted == FSLevel::weak || level == FSLevel::orthogonal);
  }
};

FSVerdict check_factorization_system(const ArrWorkspace& w, const FactorizationSystem& fs);

/// Every factorization of x with e in E and m in M, ordered by mid, e, m.
/// Throws Error when x has none.
std::vector<Factorization> factor_arrow(const Category& c, const FactorizationSystem& fs, ArrowId x);

/// Iso-stable class pairs passing the check at the given level, ordered by
/// the orbit masks of E, then M. The weak list includes the orthogonal one.
std::vector<FactorizationSystem> enumerate_fs(const ArrWorkspace& w, FSLevel level, long long cap);
std::vector<FactorizationSystem> enumerate_fs(const ArrWorkspace& w, FSLevel level);

/// T = objects whose arrow is in E, F = objects whose arrow is in M.
TorsionPair pair_of(const FactorizationSystem& fs);
/// E = arrows of the objects of T, M = arrows of the objects of F.
FactorizationSystem system_of(const TorsionPair& p);

/// The translations with both sides verified at the matching level; throw
/// Error when the input or the output fails.
TorsionPair fs_to_htt(const ArrWorkspace& w, const FactorizationSystem& fs, FSLevel level);
FactorizationSystem htt_to_fs(const ArrWorkspace& w, const TorsionPair& p, TTLevel level);

/// The presentation (id_X, m): e -> x, (e, id): x -> m with witness id_I.
ExactPresentation presentation_of(const ArrWorkspace& w, ArrowId x, const Factorization& f);
/// The factorization (xi.t_x.t^-1, f0^-1.f_x) of a presentation with t,
/// xi and f0 invertible, or nullopt.
std::optional<Factorization> factorization_of(const ArrWorkspace& w, const ExactPresentation& p);

/// The diagonal of an H(A)-homotopy.
ArrowId diagonal_of(const ArrWorkspace& w, HomotopyId phi);

}  // namespace fincat
