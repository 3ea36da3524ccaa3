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

#include "fincat/check.hpp"
#include "fincat/functor.hpp"
#include "fincat/kernel.hpp"

namespace fincat {

/// A candidate pair of replete full subcategories, given by object sets.
struct TorsionPair {
  std::string name;
  Subset torsion;
  Subset free;
};

/// T(X) --t--> X --f--> F(X) with xi in Theta(f.t).
struct ExactPresentation {
  ObjectId t_object = kNone;
  ArrowId t_arrow = kNone;
  HomotopyId witness = kNone;
  ArrowId f_arrow = kNone;
  ObjectId f_object = kNone;
  bool kernel_verified = false;
  bool cokernel_verified = false;
  bool t_mono = false;
  bool f_epi = false;
};

enum class TTLevel { strict, weak, none };
const char* to_string(TTLevel level);

struct TTVerdict {
  TTLevel level = TTLevel::none;
  bool replete = false;
  bool quasi_proper = false;
  /// Every exact presentation of every object, in canonical order.
  std::vector<std::vector<ExactPresentation>> presentations;
  std::string failure;
  std::vector<std::string> witnesses;

  bool at_least(TTLevel wanted) const {
    return level != TTLevel::none && (wanted == TTLevel::weak || level == TTLevel::strict);
  }
};

std::vector<ExactPresentation> find_exact_presentations(const NullStructure& s, const TorsionPair& p, ObjectId x);
TTVerdict check_torsion_theory(const NullStructure& s, const TorsionPair& p);

/// T(X) --t--> X --f--> F(X) with t a Z1-kernel of f and f a Z1-cokernel of t.
struct Z1Presentation {
  ObjectId t_object = kNone;
  ArrowId t_arrow = kNone;
  ArrowId f_arrow = kNone;
  ObjectId f_object = kNone;
};

struct Z1TTVerdict {
  bool z1_tt = false;
  bool replete = false;
  /// Set when the ideal is closed and the pair is a Z1-torsion theory:
  /// whether i(ob(T n F)) equals the ideal.
  std::optional<bool> pretorsion;
  /// One presentation per object.
  std::vector<Z1Presentation> presentations;
  std::string failure;
  std::vector<std::string> witnesses;
};

Z1TTVerdict check_z1_torsion_theory(const Category& c, const Subset& z1, const TorsionPair& p);

/// Pairs of unions of iso classes that pass the check at the given level
/// (the weak list includes the strict theories). Ordered by torsion mask,
/// then free mask.
std::vector<TorsionPair> enumerate_torsion_theories(const NullStructure& s, TTLevel level, long long cap);
std::vector<TorsionPair> enumerate_torsion_theories(const NullStructure& s, TTLevel level);
std::vector<TorsionPair> enumerate_z1_torsion_theories(const Category& c, const Subset& z1, long long cap);
std::vector<TorsionPair> enumerate_z1_torsion_theories(const Category& c, const Subset& z1);

/// The coreflection onto T and the reflection onto F assembled from the
/// first presentation of every object.
struct ReflectionRecord {
  std::optional<FullSubcategory> torsion_sub, free_sub;
  std::optional<Adjunction> coreflection;
  std::optional<Adjunction> reflection;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return coreflection && reflection && diagnostics.empty(); }
};

ReflectionRecord verify_reflection(const NullStructure& s, const TorsionPair& p);
ReflectionRecord verify_reflection(const NullStructure& s, const TorsionPair& p, const TTVerdict& v);

/// Presentations related by isomorphisms commuting with the t and f arrows.
bool presentations_isomorphic(const Category& c, const ExactPresentation& a, const ExactPresentation& b);

/// Uniqueness, the characterizations of T and F, retract closure, trivial
/// objects, special presentations and the reflections, for a strict theory.
std::vector<CheckRecord> torsion_theory_checks(const NullStructure& s, const TorsionPair& p, const TTVerdict& v);

/// On a discrete structure: kernel coincidence for every arrow and verdict
/// coincidence for the given pairs.
std::vector<CheckRecord> discrete_bridge_checks(const NullStructure& s, const std::vector<TorsionPair>& pairs);

std::string describe(const Category& c, const Subset& objects);

}  // namespace fincat
