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
#include <string_view>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

using HomotopyId = int;

/// Left and right whiskering of nullhomotopies. Returns kNone where the table
/// has no entry.
class WhiskerAction {
 public:
  virtual ~WhiskerAction() = default;
  /// h o phi, for h starting at the codomain of the carrier of phi.
  virtual HomotopyId left(ArrowId h, HomotopyId phi) const = 0;
  /// phi o f, for f ending at the domain of the carrier of phi.
  virtual HomotopyId right(HomotopyId phi, ArrowId f) const = 0;
};

/// A structure of nullhomotopies on a finite category: a finite set of
/// homotopies over every arrow together with the two whiskering actions.
class NullStructure {
 public:
  class Builder;

  NullStructure(CategoryPtr base, std::string name, std::vector<ArrowId> carriers, std::vector<std::string> labels,
                std::shared_ptr<const WhiskerAction> action);

  const Category& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }
  const std::string& name() const { return name_; }

  std::size_t homotopy_count() const { return carriers_.size(); }
  const std::vector<HomotopyId>& theta(ArrowId g) const { return theta_[g]; }
  ArrowId carrier(HomotopyId phi) const { return carriers_[phi]; }
  const std::string& label(HomotopyId phi) const { return labels_[phi]; }

  HomotopyId left(ArrowId h, HomotopyId phi) const { return action_->left(h, phi); }
  HomotopyId right(HomotopyId phi, ArrowId f) const { return action_->right(phi, f); }
  /// Whiskering with composability checks; throws Error on misuse.
  HomotopyId whisker(std::optional<ArrowId> h, HomotopyId phi, std::optional<ArrowId> f) const;

  std::optional<HomotopyId> find(ArrowId g, std::string_view label) const;
  /// Every homotopy set has at most one element.
  bool is_discrete() const;
  const std::shared_ptr<const WhiskerAction>& action() const { return action_; }

  /// The same homotopies on the opposite category, with the actions swapped.
  NullStructure opposite() const;

 private:
  CategoryPtr base_;
  std::string name_;
  std::vector<ArrowId> carriers_;
  std::vector<std::string> labels_;
  std::vector<std::vector<HomotopyId>> theta_;
  std::shared_ptr<const WhiskerAction> action_;
};

class NullStructure::Builder {
 public:
  Builder(CategoryPtr base, std::string name);
  /// Copies every entry of an existing structure.
  explicit Builder(const NullStructure& from);

  HomotopyId add_homotopy(ArrowId carrier, std::string label);
  void set_left(ArrowId h, HomotopyId phi, HomotopyId result);
  void set_right(HomotopyId phi, ArrowId f, HomotopyId result);
  std::size_t homotopy_count() const { return carriers_.size(); }
  ArrowId carrier(HomotopyId phi) const { return carriers_.at(phi); }

  /// Identity whiskers default to phi itself; other missing entries stay
  /// empty and are reported by validate_structure.
  NullStructure build() const;

 private:
  CategoryPtr base_;
  std::string name_;
  std::vector<ArrowId> carriers_;
  std::vector<std::string> labels_;
  std::vector<std::vector<HomotopyId>> left_, right_;
};

/// Checks typing of both actions, the unit laws, the two action laws and
/// the interchange law h o (phi o f) = (h o phi) o f.
std::vector<Diagnostic> validate_structure(const NullStructure& s, std::size_t max_diagnostics = 64);
/// Number of table lookups validate_structure performs.
double validation_work(const NullStructure& s);

/// A carrier-preserving map of homotopies.
using StructureMorphism = std::vector<HomotopyId>;

std::vector<Diagnostic> verify_morphism(const NullStructure& src, const NullStructure& dst, const StructureMorphism& m);
StructureMorphism identity_morphism(const NullStructure& s);
/// g after f.
StructureMorphism compose(const StructureMorphism& g, const StructureMorphism& f);
bool is_identity(const StructureMorphism& m);

}  // namespace fincat
