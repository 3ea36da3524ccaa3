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

#include "fincat/induced.hpp"

#include <algorithm>
#include <array>
#include <memory>

namespace fincat {

namespace {

struct Data {
  InducedMode mode;
  CategoryPtr base;
  Functor r, s;
  std::vector<ArrowId> carriers;
  std::vector<std::vector<int>> witness;
  std::unordered_map<std::uint64_t, HomotopyId> index;
  std::size_t radix = 0;

  std::uint64_t key(ArrowId g, const std::vector<int>& w) const {
    if (mode == InducedMode::subcategory)
      return (static_cast<std::uint64_t>(w[0]) * radix + static_cast<std::uint64_t>(w[1])) * radix +
             static_cast<std::uint64_t>(w[2]);
    return static_cast<std::uint64_t>(g) * radix + static_cast<std::uint64_t>(w[0]);
  }
  HomotopyId lookup(ArrowId g, const std::vector<int>& w) const {
    auto it = index.find(key(g, w));
    return it == index.end() ? kNone : it->second;
  }
  void add(ArrowId g, std::vector<int> w) {
    index.emplace(key(g, w), static_cast<int>(carriers.size()));
    carriers.push_back(g);
    witness.push_back(std::move(w));
  }
};

class InducedAction : public WhiskerAction {
 public:
  explicit InducedAction(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  HomotopyId left(ArrowId h, HomotopyId phi) const override {
    const Category& b = *d_->base;
    ArrowId g = d_->carriers[phi];
    if (b.dom(h) != b.cod(g)) return kNone;
    const auto& w = d_->witness[phi];
    ArrowId hg = b.compose_raw(h, g);
    switch (d_->mode) {
      case InducedMode::preradical:
      case InducedMode::pair:
        return d_->lookup(hg, {b.compose_raw(d_->r.arr[h], w[0])});
      case InducedMode::precoradical:
        return d_->lookup(hg, {b.compose_raw(h, w[0])});
      case InducedMode::subcategory:
        return d_->lookup(hg, {w[0], w[1], b.compose_raw(h, w[2])});
    }
    return kNone;
  }

  HomotopyId right(HomotopyId phi, ArrowId f) const override {
    const Category& b = *d_->base;
    ArrowId g = d_->carriers[phi];
    if (b.cod(f) != b.dom(g)) return kNone;
    const auto& w = d_->witness[phi];
    ArrowId gf = b.compose_raw(g, f);
    switch (d_->mode) {
      case InducedMode::preradical:
        return d_->lookup(gf, {b.compose_raw(w[0], f)});
      case InducedMode::precoradical:
      case InducedMode::pair:
        return d_->lookup(gf, {b.compose_raw(w[0], d_->s.arr[f])});
      case InducedMode::subcategory:
        return d_->lookup(gf, {b.compose_raw(w[0], f), w[1], w[2]});
    }
    return kNone;
  }

 private:
  std::shared_ptr<const Data> d_;
};

void require(const std::vector<Diagnostic>& d, const std::string& what) {
  if (!d.empty()) throw Error(what + ": " + d.front().law + ": " + d.front().message);
}

void require_identity(const Functor& f, const std::string& what) {
  if (!same_functor(f, identity_functor(f.src))) throw Error(what + " must be the identity functor");
}

InducedStructure finish(std::shared_ptr<Data> d, const std::string& name) {
  std::vector<std::string> labels;
  const Category& b = *d->base;
  for (const auto& w : d->witness) {
    if (d->mode == InducedMode::subcategory)
      labels.push_back("(" + b.arrow_name(w[0]) + "," + d->r.src->object_name(w[1]) + "," + b.arrow_name(w[2]) + ")");
    else
      labels.push_back(b.arrow_name(w[0]));
  }
  InducedStructure out{d->mode,
                       NullStructure(d->base, name, d->carriers, std::move(labels), std::make_shared<InducedAction>(d)),
                       d->witness,
                       false,
                       d->index,
                       d->radix};
  if (validation_work(out.structure) <= induced_validation_budget) {
    require(validate_structure(out.structure), "induced structure " + name);
    out.laws_checked = true;
  }
  return out;
}

}  // namespace

std::optional<HomotopyId> InducedStructure::find(ArrowId g, const std::vector<int>& w) const {
  std::uint64_t k;
  if (mode == InducedMode::subcategory) {
    if (w.size() != 3) return std::nullopt;
    k = (static_cast<std::uint64_t>(w[0]) * key_radix + static_cast<std::uint64_t>(w[1])) * key_radix +
        static_cast<std::uint64_t>(w[2]);
  } else {
    if (w.size() != 1) return std::nullopt;
    k = static_cast<std::uint64_t>(g) * key_radix + static_cast<std::uint64_t>(w[0]);
  }
  auto it = index.find(k);
  if (it == index.end() || structure.carrier(it->second) != g) return std::nullopt;
  return it->second;
}

InducedStructure induce_from_preradical(const NatTrans& beta, const std::string& name) {
  require(verify_nat_trans(beta), "preradical");
  require_identity(beta.target, "preradical target");
  auto d = std::make_shared<Data>();
  d->mode = InducedMode::preradical;
  d->base = beta.source.src;
  d->r = beta.source;
  d->radix = d->base->arrow_count() + 1;
  const Category& b = *d->base;
  for (std::size_t g = 0; g < b.arrow_count(); ++g) {
    ObjectId x = b.dom(static_cast<int>(g)), y = b.cod(static_cast<int>(g));
    for (ArrowId psi : b.hom(x, d->r.obj[y]))
      if (b.compose_raw(beta.component[y], psi) == static_cast<int>(g)) d->add(static_cast<int>(g), {psi});
  }
  return finish(d, name);
}

InducedStructure induce_from_precoradical(const NatTrans& gamma, const std::string& name) {
  require(verify_nat_trans(gamma), "precoradical");
  require_identity(gamma.source, "precoradical source");
  auto d = std::make_shared<Data>();
  d->mode = InducedMode::precoradical;
  d->base = gamma.source.src;
  d->s = gamma.target;
  d->radix = d->base->arrow_count() + 1;
  const Category& b = *d->base;
  for (std::size_t g = 0; g < b.arrow_count(); ++g) {
    ObjectId x = b.dom(static_cast<int>(g)), y = b.cod(static_cast<int>(g));
    for (ArrowId phi : b.hom(d->s.obj[x], y))
      if (b.compose_raw(phi, gamma.component[x]) == static_cast<int>(g)) d->add(static_cast<int>(g), {phi});
  }
  return finish(d, name);
}

InducedStructure induce_from_pair(const NatTrans& gamma, const NatTrans& beta, const std::string& name) {
  require(verify_nat_trans(gamma), "precoradical");
  require(verify_nat_trans(beta), "preradical");
  require_identity(gamma.source, "precoradical source");
  require_identity(beta.target, "preradical target");
  if (gamma.source.src != beta.source.src) throw Error("pair: transformations live on different categories");
  auto d = std::make_shared<Data>();
  d->mode = InducedMode::pair;
  d->base = gamma.source.src;
  d->s = gamma.target;
  d->r = beta.source;
  d->radix = d->base->arrow_count() + 1;
  const Category& b = *d->base;
  for (std::size_t g = 0; g < b.arrow_count(); ++g) {
    ObjectId x = b.dom(static_cast<int>(g)), y = b.cod(static_cast<int>(g));
    for (ArrowId l : b.hom(d->s.obj[x], d->r.obj[y]))
      if (b.compose_raw(beta.component[y], b.compose_raw(l, gamma.component[x])) == static_cast<int>(g))
        d->add(static_cast<int>(g), {l});
  }
  return finish(d, name);
}

bool is_full_and_faithful(const Functor& u) {
  if (!verify_functor(u).empty()) return false;
  const Category& a = *u.src;
  const Category& b = *u.dst;
  std::vector<char> hit(b.arrow_count(), 0);
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < a.object_count(); ++y) {
      const auto& src = a.hom(static_cast<int>(x), static_cast<int>(y));
      const auto& dst = b.hom(u.obj[x], u.obj[y]);
      if (src.size() != dst.size()) return false;
      bool ok = true;
      for (ArrowId f : src) {
        if (hit[u.arr[f]]) ok = false;
        hit[u.arr[f]] = 1;
      }
      for (ArrowId f : src) hit[u.arr[f]] = 0;
      if (!ok) return false;
    }
  return true;
}

InducedStructure induce_from_subcategory(const Functor& u, const std::string& name) {
  require(verify_functor(u), "subcategory functor");
  if (!is_full_and_faithful(u)) throw Error("subcategory functor " + u.name + " is not full and faithful");
  auto d = std::make_shared<Data>();
  d->mode = InducedMode::subcategory;
  d->base = u.dst;
  d->r = u;
  d->radix = std::max(d->base->arrow_count(), u.src->object_count()) + 1;
  const Category& b = *d->base;
  std::vector<std::array<int, 4>> found;
  for (std::size_t x = 0; x < b.object_count(); ++x)
    for (std::size_t a = 0; a < u.src->object_count(); ++a) {
      ObjectId ua = u.obj[a];
      for (ArrowId g1 : b.hom(static_cast<int>(x), ua))
        for (ArrowId g2 : b.out_arrows(ua)) found.push_back({b.compose_raw(g2, g1), static_cast<int>(a), g1, g2});
    }
  std::sort(found.begin(), found.end());
  for (const auto& [g, a, g1, g2] : found) d->add(g, {g1, a, g2});
  return finish(d, name);
}

}  // namespace fincat
