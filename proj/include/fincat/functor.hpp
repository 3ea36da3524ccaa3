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

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct Functor {
  std::string name;
  CategoryPtr src;
  CategoryPtr dst;
  std::vector<ObjectId> obj;
  std::vector<ArrowId> arr;

  ObjectId on_object(ObjectId x) const { return obj[x]; }
  ArrowId on_arrow(ArrowId a) const { return arr[a]; }
};

struct NatTrans {
  std::string name;
  Functor source;
  Functor target;
  std::vector<ArrowId> component;

  ArrowId at(ObjectId x) const { return component[x]; }
};

/// left -| right with unit Id => right.left and counit left.right => Id.
struct Adjunction {
  std::string name;
  Functor left;
  Functor right;
  NatTrans unit;
  NatTrans counit;
};

std::vector<Diagnostic> verify_functor(const Functor& f);
std::vector<Diagnostic> verify_nat_trans(const NatTrans& t);
std::vector<Diagnostic> verify_adjunction(const Adjunction& a);

bool same_functor(const Functor& f, const Functor& g);
Functor identity_functor(CategoryPtr c);
/// g after f.
Functor compose(const Functor& g, const Functor& f);
/// The transformation h.t between h.source and h.target.
NatTrans whisker(const Functor& h, const NatTrans& t);
/// The transformation t.h between source.h and target.h.
NatTrans whisker(const NatTrans& t, const Functor& h);
/// Inclusion of a full subcategory into its base.
Functor inclusion(const FullSubcategory& s, CategoryPtr base);

}  // namespace fincat
