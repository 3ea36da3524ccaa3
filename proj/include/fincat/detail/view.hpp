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

#include "fincat/category.hpp"

namespace fincat::detail {

/// Read-only access to a category or, with Dual = true, to its opposite,
/// without materialising the opposite tables.
template <bool Dual>
struct View {
  const Category& c;

  const std::vector<ArrowId>& hom(ObjectId a, ObjectId b) const { return Dual ? c.hom(b, a) : c.hom(a, b); }
  const std::vector<ArrowId>& in_arrows(ObjectId x) const { return Dual ? c.out_arrows(x) : c.in_arrows(x); }
  const std::vector<ArrowId>& out_arrows(ObjectId x) const { return Dual ? c.in_arrows(x) : c.out_arrows(x); }
  ObjectId dom(ArrowId a) const { return Dual ? c.cod(a) : c.dom(a); }
  ObjectId cod(ArrowId a) const { return Dual ? c.dom(a) : c.cod(a); }
  ArrowId comp(ArrowId g, ArrowId f) const { return Dual ? c.compose_raw(f, g) : c.compose_raw(g, f); }
  ArrowId identity(ObjectId x) const { return c.identity(x); }
  std::size_t object_count() const { return c.object_count(); }
  std::size_t arrow_count() const { return c.arrow_count(); }
};

}  // namespace fincat::detail
