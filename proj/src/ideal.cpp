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

#include "fincat/ideal.hpp"

namespace fincat {

namespace {

class DiscreteAction : public WhiskerAction {
 public:
  DiscreteAction(CategoryPtr base, std::vector<HomotopyId> over, std::vector<ArrowId> carriers)
      : base_(std::move(base)), over_(std::move(over)), carriers_(std::move(carriers)) {}
  HomotopyId left(ArrowId h, HomotopyId phi) const override {
    if (base_->dom(h) != base_->cod(carriers_[phi])) return kNone;
    return over_[base_->compose_raw(h, carriers_[phi])];
  }
  HomotopyId right(HomotopyId phi, ArrowId f) const override {
    if (base_->cod(f) != base_->dom(carriers_[phi])) return kNone;
    return over_[base_->compose_raw(carriers_[phi], f)];
  }

 private:
  CategoryPtr base_;
  std::vector<HomotopyId> over_;
  std::vector<ArrowId> carriers_;
};

}  // namespace

IdealVerdict classify_ideal(const Category& c, const Subset& arrows) {
  IdealVerdict v;
  for (int g : arrows.members()) {
    for (ArrowId h : c.out_arrows(c.cod(g))) {
      ArrowId hg = c.compose_raw(h, g);
      if (!arrows.contains(hg)) {
        v.witness = g;
        v.escaping_composite = hg;
        return v;
      }
    }
    for (ArrowId f : c.in_arrows(c.dom(g))) {
      ArrowId gf = c.compose_raw(g, f);
      if (!arrows.contains(gf)) {
        v.witness = g;
        v.escaping_composite = gf;
        return v;
      }
    }
  }
  v.kind = IdealKind::ideal;
  Subset through = generated_ideal(c, trivial_objects(c, arrows));
  for (int g : arrows.members())
    if (!through.contains(g)) {
      v.witness = g;
      return v;
    }
  v.kind = IdealKind::closed;
  return v;
}

bool is_ideal(const Category& c, const Subset& arrows) { return classify_ideal(c, arrows).kind != IdealKind::not_ideal; }

bool is_closed_ideal(const Category& c, const Subset& arrows) { return classify_ideal(c, arrows).kind == IdealKind::closed; }

Subset trivial_objects(const Category& c, const Subset& arrows) {
  Subset t(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (arrows.contains(c.identity(static_cast<int>(x)))) t.insert(static_cast<int>(x));
  return t;
}

Subset generated_ideal(const Category& c, const Subset& objects) {
  Subset z(c.arrow_count());
  for (int n : objects.members())
    for (ArrowId a : c.in_arrows(n))
      for (ArrowId b : c.out_arrows(n)) z.insert(c.compose_raw(b, a));
  return z;
}

Subset retract_closure(const Category& c, const Subset& objects) {
  Subset r = objects;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (r.contains(static_cast<int>(x))) continue;
    bool found = false;
    for (int z : objects.members()) {
      for (ArrowId s : c.hom(static_cast<int>(x), z)) {
        for (ArrowId p : c.hom(z, static_cast<int>(x)))
          if (c.compose_raw(p, s) == c.identity(static_cast<int>(x))) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (found) break;
    }
    if (found) r.insert(static_cast<int>(x));
  }
  return r;
}

bool is_retract_closed(const Category& c, const Subset& objects) { return retract_closure(c, objects) == objects; }

Subset ideal_of(const NullStructure& s) {
  Subset z(s.base().arrow_count());
  for (std::size_t g = 0; g < s.base().arrow_count(); ++g)
    if (!s.theta(static_cast<int>(g)).empty()) z.insert(static_cast<int>(g));
  return z;
}

Subset trivial_objects(const NullStructure& s) { return trivial_objects(s.base(), ideal_of(s)); }

NullStructure discrete_structure(CategoryPtr base, const Subset& ideal, const std::string& name) {
  auto v = classify_ideal(*base, ideal);
  if (v.kind == IdealKind::not_ideal)
    throw Error("discrete structure: " + base->arrow_name(*v.witness) + " lies in the class but " +
                base->arrow_name(*v.escaping_composite) + " does not");
  std::vector<HomotopyId> over(base->arrow_count(), kNone);
  std::vector<ArrowId> carriers;
  std::vector<std::string> labels;
  for (int g : ideal.members()) {
    over[g] = static_cast<int>(carriers.size());
    carriers.push_back(g);
    labels.push_back("*");
  }
  auto action = std::make_shared<DiscreteAction>(base, over, carriers);
  return NullStructure(base, name, carriers, labels, std::move(action));
}

std::optional<StructureMorphism> collapse_onto(const NullStructure& s, const NullStructure& discrete) {
  StructureMorphism m(s.homotopy_count());
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    const auto& t = discrete.theta(s.carrier(static_cast<int>(p)));
    if (t.empty()) return std::nullopt;
    m[p] = t.front();
  }
  return m;
}

}  // namespace fincat
