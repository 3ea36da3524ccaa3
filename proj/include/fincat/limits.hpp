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

#include "fincat/category.hpp"

namespace fincat {

struct ArrowClassification {
  bool mono = false;
  bool epi = false;
  std::optional<ArrowId> left_inverse;   // present iff split mono
  std::optional<ArrowId> right_inverse;  // present iff split epi
  std::optional<ArrowId> inverse;        // present iff iso

  bool split_mono() const { return left_inverse.has_value(); }
  bool split_epi() const { return right_inverse.has_value(); }
  bool iso() const { return inverse.has_value(); }
};

ArrowClassification classify_arrow(const Category& c, ArrowId g);
bool is_mono(const Category& c, ArrowId g);
bool is_epi(const Category& c, ArrowId g);

/// One cone (left, right) and the unique arrow into the apex that induces it.
struct Mediator {
  ArrowId left;
  ArrowId right;
  ArrowId mediator;
};

/// A pullback of x: B -> D and y: C -> D, or dually a pushout of x: D -> B
/// and y: D -> C, in which case the projections point into the apex.
struct PullbackResult {
  ObjectId apex = kNone;
  ArrowId proj_left = kNone;
  ArrowId proj_right = kNone;
  std::vector<Mediator> mediators;  // sorted by (left, right)

  /// Mediating arrow for a (co)cone, or kNone when the pair is not a (co)cone.
  ArrowId mediator_for(ArrowId left, ArrowId right) const;
};

/// Smallest-id pullback of the cospan x: B -> D <- C: y.
std::optional<PullbackResult> pullback(const Category& c, ArrowId x, ArrowId y);
/// Smallest-id pushout of the span x: D -> B, y: D -> C.
std::optional<PullbackResult> pushout(const Category& c, ArrowId x, ArrowId y);
/// Checks a candidate pullback square and fills its mediator table.
std::optional<PullbackResult> verify_pullback(const Category& c, ArrowId x, ArrowId y, ArrowId p1, ArrowId p2);
std::optional<PullbackResult> verify_pushout(const Category& c, ArrowId x, ArrowId y, ArrowId q1, ArrowId q2);

struct DistinguishedObjects {
  std::optional<ObjectId> initial;
  std::optional<ObjectId> terminal;
  std::optional<ObjectId> zero;
};

DistinguishedObjects find_distinguished(const Category& c);

}  // namespace fincat
