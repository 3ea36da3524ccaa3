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

#include "fincat/nullhomotopy.hpp"

#include <algorithm>

namespace fincat {

namespace {

class TableAction : public WhiskerAction {
 public:
  TableAction(CategoryPtr base, std::vector<ArrowId> carriers, std::vector<std::vector<HomotopyId>> left,
              std::vector<std::vector<HomotopyId>> right)
      : base_(std::move(base)), carriers_(std::move(carriers)), left_(std::move(left)), right_(std::move(right)) {}

  HomotopyId left(ArrowId h, HomotopyId phi) const override {
    if (base_->dom(h) != base_->cod(carriers_[phi])) return kNone;
    return left_[phi][base_->out_index(h)];
  }
  HomotopyId right(HomotopyId phi, ArrowId f) const override {
    if (base_->cod(f) != base_->dom(carriers_[phi])) return kNone;
    return right_[phi][base_->in_index(f)];
  }

 private:
  CategoryPtr base_;
  std::vector<ArrowId> carriers_;
  std::vector<std::vector<HomotopyId>> left_, right_;
};

class DualAction : public WhiskerAction {
 public:
  explicit DualAction(std::shared_ptr<const WhiskerAction> inner) : inner_(std::move(inner)) {}
  HomotopyId left(ArrowId h, HomotopyId phi) const override { return inner_->right(phi, h); }
  HomotopyId right(HomotopyId phi, ArrowId f) const override { return inner_->left(f, phi); }

 private:
  std::shared_ptr<const WhiskerAction> inner_;
};

}  // namespace

NullStructure::NullStructure(CategoryPtr base, std::string name, std::vector<ArrowId> carriers,
                             std::vector<std::string> labels, std::shared_ptr<const WhiskerAction> action)
    : base_(std::move(base)),
      name_(std::move(name)),
      carriers_(std::move(carriers)),
      labels_(std::move(labels)),
      action_(std::move(action)) {
  theta_.assign(base_->arrow_count(), {});
  for (std::size_t p = 0; p < carriers_.size(); ++p) theta_.at(carriers_[p]).push_back(static_cast<int>(p));
}

HomotopyId NullStructure::whisker(std::optional<ArrowId> h, HomotopyId phi, std::optional<ArrowId> f) const {
  if (phi < 0 || static_cast<std::size_t>(phi) >= homotopy_count()) throw Error("whisker: unknown homotopy");
  HomotopyId r = phi;
  if (f) {
    if (base_->cod(*f) != base_->dom(carriers_[r]))
      throw Error("whisker: " + base_->arrow_name(*f) + " does not end at the domain of " + labels_[r]);
    r = right(r, *f);
    if (r == kNone) throw Error("whisker: missing right whisker");
  }
  if (h) {
    if (base_->dom(*h) != base_->cod(carriers_[r]))
      throw Error("whisker: " + base_->arrow_name(*h) + " does not start at the codomain of " + labels_[r]);
    r = left(*h, r);
    if (r == kNone) throw Error("whisker: missing left whisker");
  }
  return r;
}

std::optional<HomotopyId> NullStructure::find(ArrowId g, std::string_view label) const {
  for (HomotopyId p : theta_.at(g))
    if (labels_[p] == label) return p;
  return std::nullopt;
}

bool NullStructure::is_discrete() const {
  for (const auto& t : theta_)
    if (t.size() > 1) return false;
  return true;
}

NullStructure NullStructure::opposite() const {
  auto op = std::make_shared<const Category>(base_->opposite());
  return NullStructure(op, name_ + "^op", carriers_, labels_, std::make_shared<DualAction>(action_));
}

NullStructure::Builder::Builder(CategoryPtr base, std::string name) : base_(std::move(base)), name_(std::move(name)) {}

NullStructure::Builder::Builder(const NullStructure& from) : base_(from.base_ptr()), name_(from.name()) {
  for (std::size_t p = 0; p < from.homotopy_count(); ++p) add_homotopy(from.carrier(static_cast<int>(p)), from.label(static_cast<int>(p)));
  for (std::size_t p = 0; p < from.homotopy_count(); ++p) {
    ArrowId g = from.carrier(static_cast<int>(p));
    for (ArrowId h : base_->out_arrows(base_->cod(g))) left_[p][base_->out_index(h)] = from.left(h, static_cast<int>(p));
    for (ArrowId f : base_->in_arrows(base_->dom(g))) right_[p][base_->in_index(f)] = from.right(static_cast<int>(p), f);
  }
}

HomotopyId NullStructure::Builder::add_homotopy(ArrowId carrier, std::string label) {
  if (carrier < 0 || static_cast<std::size_t>(carrier) >= base_->arrow_count()) throw Error("homotopy on unknown arrow");
  carriers_.push_back(carrier);
  labels_.push_back(std::move(label));
  left_.emplace_back(base_->out_arrows(base_->cod(carrier)).size(), kNone);
  right_.emplace_back(base_->in_arrows(base_->dom(carrier)).size(), kNone);
  return static_cast<int>(carriers_.size() - 1);
}

void NullStructure::Builder::set_left(ArrowId h, HomotopyId phi, HomotopyId result) {
  if (phi < 0 || static_cast<std::size_t>(phi) >= carriers_.size()) throw Error("left whisker of unknown homotopy");
  if (base_->dom(h) != base_->cod(carriers_[phi]))
    throw Error("left whisker: " + base_->arrow_name(h) + " is not composable with " + labels_[phi]);
  left_[phi][base_->out_index(h)] = result;
}

void NullStructure::Builder::set_right(HomotopyId phi, ArrowId f, HomotopyId result) {
  if (phi < 0 || static_cast<std::size_t>(phi) >= carriers_.size()) throw Error("right whisker of unknown homotopy");
  if (base_->cod(f) != base_->dom(carriers_[phi]))
    throw Error("right whisker: " + base_->arrow_name(f) + " is not composable with " + labels_[phi]);
  right_[phi][base_->in_index(f)] = result;
}

NullStructure NullStructure::Builder::build() const {
  auto left = left_;
  auto right = right_;
  for (std::size_t p = 0; p < carriers_.size(); ++p) {
    ArrowId g = carriers_[p];
    auto& l = left[p][base_->out_index(base_->identity(base_->cod(g)))];
    if (l == kNone) l = static_cast<int>(p);
    auto& r = right[p][base_->in_index(base_->identity(base_->dom(g)))];
    if (r == kNone) r = static_cast<int>(p);
    for (auto v : left[p])
      if (v != kNone && (v < 0 || static_cast<std::size_t>(v) >= carriers_.size())) throw Error("whisker to unknown homotopy");
    for (auto v : right[p])
      if (v != kNone && (v < 0 || static_cast<std::size_t>(v) >= carriers_.size())) throw Error("whisker to unknown homotopy");
  }
  auto action = std::make_shared<TableAction>(base_, carriers_, std::move(left), std::move(right));
  return NullStructure(base_, name_, carriers_, labels_, std::move(action));
}

std::vector<Diagnostic> validate_structure(const NullStructure& s, std::size_t max_diagnostics) {
  const Category& c = s.base();
  std::vector<Diagnostic> out;
  auto push = [&](Diagnostic d) {
    if (out.size() < max_diagnostics) out.push_back(std::move(d));
  };
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    HomotopyId phi = static_cast<int>(p);
    ArrowId g = s.carrier(phi);
    for (ArrowId h : c.out_arrows(c.cod(g))) {
      HomotopyId r = s.left(h, phi);
      if (r == kNone)
        push({"missing whisker", c.arrow_name(h) + " o " + s.label(phi) + " is undefined", {h, g}});
      else if (s.carrier(r) != c.compose_raw(h, g))
        push({"whisker typing", c.arrow_name(h) + " o " + s.label(phi) + " = " + s.label(r) + " lies over " +
                                    c.arrow_name(s.carrier(r)) + ", expected " + c.arrow_name(c.compose_raw(h, g)),
              {h, g}});
    }
    for (ArrowId f : c.in_arrows(c.dom(g))) {
      HomotopyId r = s.right(phi, f);
      if (r == kNone)
        push({"missing whisker", s.label(phi) + " o " + c.arrow_name(f) + " is undefined", {g, f}});
      else if (s.carrier(r) != c.compose_raw(g, f))
        push({"whisker typing", s.label(phi) + " o " + c.arrow_name(f) + " = " + s.label(r) + " lies over " +
                                    c.arrow_name(s.carrier(r)) + ", expected " + c.arrow_name(c.compose_raw(g, f)),
              {g, f}});
    }
  }
  if (!out.empty()) return out;

  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    HomotopyId phi = static_cast<int>(p);
    ArrowId g = s.carrier(phi);
    ObjectId x = c.dom(g), y = c.cod(g);
    if (s.left(c.identity(y), phi) != phi) push({"left unit", "id o " + s.label(phi) + " != " + s.label(phi), {g}});
    if (s.right(phi, c.identity(x)) != phi) push({"right unit", s.label(phi) + " o id != " + s.label(phi), {g}});
    for (ArrowId h : c.out_arrows(y)) {
      HomotopyId hp = s.left(h, phi);
      for (ArrowId f : c.in_arrows(x))
        if (s.left(h, s.right(phi, f)) != s.right(hp, f))
          push({"interchange", c.arrow_name(h) + " o (" + s.label(phi) + " o " + c.arrow_name(f) + ") != (" +
                                   c.arrow_name(h) + " o " + s.label(phi) + ") o " + c.arrow_name(f),
                {h, g, f}});
      for (ArrowId k : c.out_arrows(c.cod(h)))
        if (s.left(k, hp) != s.left(c.compose_raw(k, h), phi))
          push({"left action", c.arrow_name(k) + " o (" + c.arrow_name(h) + " o " + s.label(phi) + ") != (" +
                                   c.arrow_name(k) + "." + c.arrow_name(h) + ") o " + s.label(phi),
                {k, h, g}});
    }
    for (ArrowId f : c.in_arrows(x)) {
      HomotopyId pf = s.right(phi, f);
      for (ArrowId e : c.in_arrows(c.dom(f)))
        if (s.right(pf, e) != s.right(phi, c.compose_raw(f, e)))
          push({"right action", "(" + s.label(phi) + " o " + c.arrow_name(f) + ") o " + c.arrow_name(e) + " != " +
                                    s.label(phi) + " o (" + c.arrow_name(f) + "." + c.arrow_name(e) + ")",
                {g, f, e}});
    }
  }
  return out;
}

double validation_work(const NullStructure& s) {
  const Category& c = s.base();
  std::vector<double> out_work(c.object_count(), 0.0), in_work(c.object_count(), 0.0);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (ArrowId h : c.out_arrows(static_cast<int>(x))) out_work[x] += static_cast<double>(c.out_arrows(c.cod(h)).size());
    for (ArrowId f : c.in_arrows(static_cast<int>(x))) in_work[x] += static_cast<double>(c.in_arrows(c.dom(f)).size());
  }
  double w = 0;
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    ArrowId g = s.carrier(static_cast<int>(p));
    w += static_cast<double>(c.out_arrows(c.cod(g)).size()) * static_cast<double>(c.in_arrows(c.dom(g)).size());
    w += out_work[c.cod(g)] + in_work[c.dom(g)];
  }
  return w;
}

std::vector<Diagnostic> verify_morphism(const NullStructure& src, const NullStructure& dst, const StructureMorphism& m) {
  std::vector<Diagnostic> out;
  const Category& c = src.base();
  if (src.base_ptr() != dst.base_ptr() || m.size() != src.homotopy_count()) {
    out.push_back({"morphism typing", "structures live on different categories or the table has the wrong size", {}});
    return out;
  }
  for (std::size_t p = 0; p < m.size(); ++p) {
    HomotopyId q = m[p];
    if (q < 0 || static_cast<std::size_t>(q) >= dst.homotopy_count() || dst.carrier(q) != src.carrier(static_cast<int>(p)))
      out.push_back({"morphism typing", "image of " + src.label(static_cast<int>(p)) + " lies over the wrong arrow",
                     {src.carrier(static_cast<int>(p))}});
  }
  if (!out.empty()) return out;
  for (std::size_t p = 0; p < m.size(); ++p) {
    HomotopyId phi = static_cast<int>(p);
    ArrowId g = src.carrier(phi);
    for (ArrowId h : c.out_arrows(c.cod(g)))
      if (m[src.left(h, phi)] != dst.left(h, m[phi])) {
        out.push_back({"morphism left whisker", "image of " + c.arrow_name(h) + " o " + src.label(phi) + " differs", {h, g}});
        if (out.size() > 32) return out;
      }
    for (ArrowId f : c.in_arrows(c.dom(g)))
      if (m[src.right(phi, f)] != dst.right(m[phi], f)) {
        out.push_back({"morphism right whisker", "image of " + src.label(phi) + " o " + c.arrow_name(f) + " differs", {g, f}});
        if (out.size() > 32) return out;
      }
  }
  return out;
}

StructureMorphism identity_morphism(const NullStructure& s) {
  StructureMorphism m(s.homotopy_count());
  for (std::size_t p = 0; p < m.size(); ++p) m[p] = static_cast<int>(p);
  return m;
}

StructureMorphism compose(const StructureMorphism& g, const StructureMorphism& f) {
  StructureMorphism r(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) r[p] = g.at(f[p]);
  return r;
}

bool is_identity(const StructureMorphism& m) {
  for (std::size_t p = 0; p < m.size(); ++p)
    if (m[p] != static_cast<int>(p)) return false;
  return true;
}

}  // namespace fincat
