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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/arrow_category.hpp"
#include "fincat/induced.hpp"
#include "fincat/torsion.hpp"

namespace fincat {

/// A category with zero object, kernels and cokernels, with the string
/// D -| Lambda -| Ker on Arr(A).
struct PointedWorkspace {
  std::shared_ptr<const ArrWorkspace> arr;
  ObjectId zero = kNone;
  /// Arrows of A factoring through the zero object.
  Subset z1_zero;
  /// Chosen kernel and cokernel of every arrow of A (smallest ids).
  std::vector<ArrowId> kernel, cokernel;
  Functor lambda, ker;
  Adjunction d_lambda, lambda_ker;
  std::optional<InducedStructure> theta_lambda;
  /// Arrows of Arr(A) carrying a homotopy of the structure induced by the
  /// unit of D -| Lambda.
  Subset z1_lambda;
  std::vector<CheckRecord> checks;

  const Category& base() const { return *arr->base; }
  const Category& arrows() const { return *arr->arr; }
  /// The unique arrow x -> 0.
  ArrowId to_zero(ObjectId x) const;
  ArrowId from_zero(ObjectId x) const;
  bool passed() const { return all_pass(checks); }
};

struct PointedResult {
  std::optional<PointedWorkspace> workspace;
  std::string failed_hypothesis;
};

/// Checks the hypotheses (zero object, kernels, cokernels), builds the
/// string and verifies the kernel and cokernel formulas on every square.
PointedResult build_pointed(CategoryPtr a);

/// The kernel (k_{y.g}, k_{g0}): x' -> x and the cokernel (id_Y, c_{g0}):
/// y -> c_{g0}.y of a square, as arrows of Arr(A).
ArrowId lambda_kernel(const PointedWorkspace& w, ArrowId square);
ArrowId lambda_cokernel(const PointedWorkspace& w, ArrowId square);

struct LiftedTheory {
  TorsionPair pair;
  Z1TTVerdict verdict;
  bool induced = false;
};

/// T_Lambda = objects with codomain in T, F_Lambda = codomain in F.
/// Throws Error when (T, F) is not a torsion theory for the zero ideal.
LiftedTheory lift_pointed_tt(const PointedWorkspace& w, const TorsionPair& base_pair);

/// Every arrow from the codomain of an object of T to the codomain of an
/// object of F is zero.
bool induced_by_base(const PointedWorkspace& w, const TorsionPair& arr_pair);

}  // namespace fincat
