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
#include "fincat/induced.hpp"
#include "fincat/limits.hpp"
#include "fincat/nullhomotopy.hpp"

namespace fincat {

/// A cone (f, phi) and the unique arrow f' that factors it.
struct KernelMediator {
  ArrowId cone_arrow;
  HomotopyId cone_homotopy;
  ArrowId mediator;
};

/// A homotopy kernel (N, n: N -> X, nu in Theta(g.n)) of g: X -> Y.
///
/// The same record describes a homotopy cokernel (Q, q: Y -> Q,
/// theta in Theta(q.g)); its mediators are then indexed by cocones.
struct HomotopyKernel {
  ObjectId object = kNone;
  ArrowId arrow = kNone;
  HomotopyId witness = kNone;
  std::vector<KernelMediator> mediators;  // sorted by (cone_arrow, cone_homotopy)
  std::optional<bool> strong;

  ArrowId mediator_for(ArrowId f, HomotopyId phi) const;
};
using HomotopyCokernel = HomotopyKernel;

/// Checks the universal property of a candidate kernel and returns it with
/// its mediator table.
std::optional<HomotopyKernel> verify_kernel(const NullStructure& s, ArrowId g, ArrowId n, HomotopyId nu);
std::optional<HomotopyCokernel> verify_cokernel(const NullStructure& s, ArrowId g, ArrowId q, HomotopyId theta);

/// Smallest-id homotopy kernel of g, with its strongness verdict.
std::optional<HomotopyKernel> search_homotopy_kernel(const NullStructure& s, ArrowId g);
std::optional<HomotopyCokernel> search_homotopy_cokernel(const NullStructure& s, ArrowId g);

/// Every homotopy kernel of g, in canonical order.
std::vector<HomotopyKernel> all_homotopy_kernels(const NullStructure& s, ArrowId g);

struct StrongVerdict {
  bool strong = true;
  /// A compatible pair (f, phi) whose lift is missing or not unique.
  std::optional<ArrowId> arrow;
  std::optional<HomotopyId> homotopy;
  std::size_t lifts = 0;
};

StrongVerdict check_strong_kernel(const NullStructure& s, ArrowId g, const HomotopyKernel& k);
StrongVerdict check_strong_cokernel(const NullStructure& s, ArrowId g, const HomotopyCokernel& q);

struct PullbackStrongVerdict {
  bool strong = true;
  std::optional<Mediator> cone;
};

/// Whether compatible homotopies on the legs of every cone lift uniquely
/// to the mediating arrow.
PullbackStrongVerdict check_theta_strong_pullback(const NullStructure& s, ArrowId x, ArrowId y, const PullbackResult& pb);

/// Builds the kernel of g by pulling back the kernel of the identity on
/// cod(g) along g. Searches for the identity kernel when none is given.
std::optional<HomotopyKernel> kernel_via_pullback(const NullStructure& s, ArrowId g,
                                                  const std::optional<HomotopyKernel>& identity_kernel = std::nullopt);
std::optional<HomotopyCokernel> cokernel_via_pushout(const NullStructure& s, ArrowId g,
                                                     const std::optional<HomotopyCokernel>& identity_cokernel = std::nullopt);

/// The kernel (RX, beta_X, id_RX) of id_X for a structure induced by a
/// preradical beta.
std::optional<HomotopyKernel> preradical_identity_kernel(const InducedStructure& theta_beta, const NatTrans& beta,
                                                          ObjectId x);

/// The unique arrow a: N1 -> N2 with n2.a = n1 and nu2 o a = nu1.
std::optional<ArrowId> kernel_comparison(const NullStructure& s, const HomotopyKernel& k1, const HomotopyKernel& k2);
/// The unique arrow a: Q1 -> Q2 with a.q1 = q2 and a o theta1 = theta2.
std::optional<ArrowId> cokernel_comparison(const NullStructure& s, const HomotopyCokernel& q1, const HomotopyCokernel& q2);

/// A kernel relative to a class of arrows: g.k in Z1, universal for that.
struct Z1Kernel {
  ObjectId object = kNone;
  ArrowId arrow = kNone;
};
using Z1Cokernel = Z1Kernel;

bool verify_z1_kernel(const Category& c, const Subset& z1, ArrowId g, ArrowId k);
bool verify_z1_cokernel(const Category& c, const Subset& z1, ArrowId g, ArrowId q);
std::optional<Z1Kernel> z1_kernel(const Category& c, const Subset& z1, ArrowId g);
std::optional<Z1Cokernel> z1_cokernel(const Category& c, const Subset& z1, ArrowId g);

/// Replays the elementary facts about kernels, cokernels, trivial objects
/// and orthogonality on every arrow of the base.
std::vector<CheckRecord> homotopy_limit_checks(const NullStructure& s);

/// T is orthogonal to F: every arrow T -> F carries exactly one homotopy.
bool orthogonal(const NullStructure& s, ObjectId t, ObjectId f);
/// Every arrow T -> F carries at least one homotopy.
bool weakly_orthogonal(const NullStructure& s, ObjectId t, ObjectId f);

}  // namespace fincat
