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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/subset.hpp"

namespace fincat {

using ObjectId = int;
using ArrowId = int;
inline constexpr int kNone = -1;

/// A violated category law together with the arrows that witness it.
struct Diagnostic {
  std::string law;
  std::string message;
  std::vector<ArrowId> witnesses;
};

/// A finite category with explicit identity and composition tables.
///
/// Objects and arrows are numbered in declaration order; that order is the
/// canonical tie-break used by every search in the library.
class Category {
 public:
  class Builder;

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return object_names_.size(); }
  std::size_t arrow_count() const { return arrow_names_.size(); }

  const std::string& object_name(ObjectId x) const { return object_names_.at(x); }
  const std::string& arrow_name(ArrowId a) const { return arrow_names_.at(a); }
  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  ObjectId dom(ArrowId a) const { return dom_[a]; }
  ObjectId cod(ArrowId a) const { return cod_[a]; }
  ArrowId identity(ObjectId x) const { return identity_[x]; }
  bool is_identity(ArrowId a) const { return identity_[dom_[a]] == a; }

  const std::vector<ArrowId>& hom(ObjectId x, ObjectId y) const { return hom_[x * object_count() + y]; }
  const std::vector<ArrowId>& out_arrows(ObjectId x) const { return out_[x]; }
  const std::vector<ArrowId>& in_arrows(ObjectId x) const { return in_[x]; }
  int hom_index(ArrowId a) const { return hom_index_[a]; }
  int out_index(ArrowId a) const { return out_index_[a]; }
  int in_index(ArrowId a) const { return in_index_[a]; }

  /// The composite g·f; throws when cod(f) differs from dom(g).
  ArrowId compose(ArrowId g, ArrowId f) const;
  /// The composite of a chain written left to right, so {h, g, f} is h·g·f.
  ArrowId compose(std::initializer_list<ArrowId> chain) const;
  /// The stored table entry, without checking composability.
  ArrowId compose_raw(ArrowId g, ArrowId f) const {
    ObjectId x = dom_[f], y = cod_[f], z = cod_[g];
    std::size_t n = object_count();
    return comp_[block_[(x * n + y) * n + z] +
                 static_cast<std::size_t>(hom_index_[g]) * hom(x, y).size() + hom_index_[f]];
  }

  bool is_iso(ArrowId a) const { return inverse_[a] != kNone; }
  /// Two-sided inverse, or kNone.
  ArrowId inverse(ArrowId a) const { return inverse_[a]; }

  int iso_class(ObjectId x) const { return object_class_[x]; }
  std::size_t iso_class_count() const { return class_members_.size(); }
  const std::vector<ObjectId>& iso_class_members(int c) const { return class_members_[c]; }
  bool isomorphic(ObjectId x, ObjectId y) const { return object_class_[x] == object_class_[y]; }

  /// Orbit of an arrow under pre- and post-composition with isomorphisms.
  int arrow_orbit(ArrowId a) const { return arrow_orbit_[a]; }
  std::size_t orbit_count() const { return orbit_members_.size(); }
  const std::vector<ArrowId>& orbit_members(int o) const { return orbit_members_[o]; }

  /// Same ids and names, arrows reversed.
  Category opposite() const;

  /// Objects closed under isomorphism: the smallest replete superset.
  Subset iso_closure_objects(const Subset& objects) const;
  /// Arrows closed under composition with isomorphisms on either side.
  Subset iso_closure_arrows(const Subset& arrows) const;

 private:
  Category() = default;
  void finalize(const std::function<ArrowId(ArrowId, ArrowId)>& comp, std::vector<std::string>* missing);

  std::string name_;
  std::vector<std::string> object_names_;
  std::vector<std::string> arrow_names_;
  std::unordered_map<std::string, int> object_lookup_;
  std::unordered_map<std::string, int> arrow_lookup_;
  std::vector<ObjectId> dom_, cod_;
  std::vector<ArrowId> identity_;
  std::vector<std::vector<ArrowId>> hom_, out_, in_;
  std::vector<int> hom_index_, out_index_, in_index_;
  std::vector<std::size_t> block_;
  std::vector<ArrowId> comp_;
  std::vector<ArrowId> inverse_;
  std::vector<int> object_class_;
  std::vector<std::vector<ObjectId>> class_members_;
  std::vector<int> arrow_orbit_;
  std::vector<std::vector<ArrowId>> orbit_members_;
};

using CategoryPtr = std::shared_ptr<const Category>;

class Category::Builder {
 public:
  explicit Builder(std::string name);
  /// Starts from an existing category, copying every table entry.
  explicit Builder(const Category& from);

  /// Adds an object; by default also adds its identity arrow `id_<name>`.
  ObjectId add_object(const std::string& name, bool with_identity = true);
  ArrowId add_arrow(const std::string& name, ObjectId dom, ObjectId cod);
  void set_identity(ObjectId x, ArrowId a);
  void set_composite(ArrowId g, ArrowId f, ArrowId h);
  /// Fallback used for pairs that have no explicit entry.
  void set_composition(std::function<ArrowId(ArrowId, ArrowId)> rule) { rule_ = std::move(rule); }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  /// Throws Error on unknown ids, duplicate names or missing composites.
  Category build() const;

 private:
  struct ArrowDecl {
    std::string name;
    ObjectId dom, cod;
  };
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowDecl> arrows_;
  std::unordered_map<std::uint64_t, ArrowId> explicit_;
  std::function<ArrowId(ArrowId, ArrowId)> rule_;
};

/// Checks typing, unit and associativity laws. When typing fails only the
/// typing diagnostics are returned, since the other laws are then undefined.
std::vector<Diagnostic> validate_category(const Category& c);

/// A full subcategory with its id translation tables.
struct FullSubcategory {
  CategoryPtr category;
  std::vector<ObjectId> object_to_base;
  std::vector<ArrowId> arrow_to_base;
  std::vector<ObjectId> object_from_base;
  std::vector<ArrowId> arrow_from_base;
};

FullSubcategory full_subcategory(const Category& c, const Subset& objects, const std::string& name);

}  // namespace fincat
