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
#include <unordered_map>
#include <vector>

#include "fincat/check.hpp"
#include "fincat/cud.hpp"
#include "fincat/kernel.hpp"

namespace fincat {

/// A commutative square y.g = g0.x, read as an arrow x -> y of Arr(A).
struct Square {
  ArrowId x, y, g, g0;
};

/// Arr(A) with the string C -| U -| D and the structure H(A).
///
/// Objects of Arr(A) carry the ids of the base arrows they stand for.
struct ArrWorkspace {
  CategoryPtr base;
  CategoryPtr arr;
  std::vector<Square> squares;
  PrepointedString string;
  std::optional<NullStructure> h;
  /// Arrows of Arr(A) carrying an H(A)-homotopy.
  Subset z1;
  bool h_laws_checked = false;

  const NullStructure& H() const { return *h; }
  const Functor& D() const { return string.d(); }
  const Functor& C() const { return string.c(); }
  const Functor& U() const { return string.u(); }
  /// The square (g, g0): x -> y, or kNone when it does not commute.
  ArrowId square(ArrowId x, ArrowId y, ArrowId g, ArrowId g0) const;

  /// The H(A)-homotopy given by the diagonal lambda on a square, or kNone.
  HomotopyId h_homotopy(ArrowId square, ArrowId lambda) const;

  std::vector<std::size_t> pair_offset;
  std::vector<ArrowId> square_table;
  std::unordered_map<std::uint64_t, HomotopyId> h_index;
};

/// Throws CapExceeded when the base has more arrows than the cap.
ArrWorkspace build_arr(CategoryPtr base, long long cap);
ArrWorkspace build_arr(CategoryPtr base);

/// The kernel ((X, <x,g>, P), (id_X, y'), g0') of a square (g, g0) built
/// from the pullback P of g0 and y.
std::optional<HomotopyKernel> h_kernel_direct(const ArrWorkspace& w, ArrowId square);
/// The cokernel ((Q, [g0,y], Y0), (c2, id), c1) built from the pushout Q of
/// x and g with coprojections c1, c2.
std::optional<HomotopyCokernel> h_cokernel_direct(const ArrWorkspace& w, ArrowId square);

/// The extension g -> h.g -> h attached to composable base arrows.
struct ExtensionRecord {
  ObjectId left, middle, right;
  ArrowId kernel_arrow;
  ArrowId cokernel_arrow;
  HomotopyId witness;
  bool kernel_ok = false;
  bool cokernel_ok = false;
};

ExtensionRecord canonical_extension(const ArrWorkspace& w, ArrowId g, ArrowId h);

/// Compares H(A) with the structure induced by the pair (gamma, beta).
CheckRecord h_matches_pair_structure(const ArrWorkspace& w);

/// Ideal closedness, trivial objects, and preservation of epis and monos by
/// the domain and codomain functors.
std::vector<CheckRecord> arr_checks(const ArrWorkspace& w);

}  // namespace fincat
