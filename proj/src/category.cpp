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

#include "fincat/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fincat {

namespace {

std::uint64_t pair_key(ArrowId g, ArrowId f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(f);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Numbers union-find classes by their smallest member.
void number_classes(UnionFind& uf, std::vector<int>& label, std::vector<std::vector<int>>& members) {
  std::size_t n = uf.parent.size();
  label.assign(n, -1);
  members.clear();
  std::vector<int> root_label(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int r = uf.find(static_cast<int>(i));
    if (root_label[r] < 0) {
      root_label[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    label[i] = root_label[r];
    members[root_label[r]].push_back(static_cast<int>(i));
  }
}

}  // namespace

std::optional<ObjectId> Category::find_object(std::string_view name) const {
  auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Category::find_arrow(std::string_view name) const {
  auto it = arrow_lookup_.find(std::string(name));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

ArrowId Category::compose(ArrowId g, ArrowId f) const {
  if (g < 0 || f < 0 || static_cast<std::size_t>(g) >= arrow_count() ||
      static_cast<std::size_t>(f) >= arrow_count())
    throw Error("compose: arrow id out of range");
  if (cod_[f] != dom_[g])
    throw Error("compose: " + arrow_names_[g] + " and " + arrow_names_[f] + " are not composable");
  return compose_raw(g, f);
}

ArrowId Category::compose(std::initializer_list<ArrowId> chain) const {
  if (chain.size() == 0) throw Error("compose: empty chain");
  auto it = chain.end();
  --it;
  ArrowId acc = *it;
  while (it != chain.begin()) {
    --it;
    acc = compose(*it, acc);
  }
  return acc;
}

void Category::finalize(const std::function<ArrowId(ArrowId, ArrowId)>& comp, std::vector<std::string>* missing) {
  std::size_t n = object_count();
  std::size_t m = arrow_count();
  object_lookup_.clear();
  arrow_lookup_.clear();
  for (std::size_t i = 0; i < n; ++i) object_lookup_.emplace(object_names_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < m; ++i) arrow_lookup_.emplace(arrow_names_[i], static_cast<int>(i));

  hom_.assign(n * n, {});
  out_.assign(n, {});
  in_.assign(n, {});
  hom_index_.assign(m, 0);
  out_index_.assign(m, 0);
  in_index_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    auto& h = hom_[dom_[a] * n + cod_[a]];
    hom_index_[a] = static_cast<int>(h.size());
    h.push_back(static_cast<int>(a));
    out_index_[a] = static_cast<int>(out_[dom_[a]].size());
    out_[dom_[a]].push_back(static_cast<int>(a));
    in_index_[a] = static_cast<int>(in_[cod_[a]].size());
    in_[cod_[a]].push_back(static_cast<int>(a));
  }

  if (n > 1024) throw CapExceeded("category_objects", 1024, static_cast<long long>(n));
  block_.assign(n * n * n, 0);
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t hxy = hom_[x * n + y].size();
      if (hxy == 0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        block_[(x * n + y) * n + z] = total;
        total += hxy * hom_[y * n + z].size();
      }
    }
  comp_.assign(total, kNone);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& fs = hom_[x * n + y];
      if (fs.empty()) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const auto& gs = hom_[y * n + z];
        std::size_t base = block_[(x * n + y) * n + z];
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
          for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            ArrowId h = comp(gs[gi], fs[fi]);
            if (h == kNone || h < 0 || static_cast<std::size_t>(h) >= m) {
              if (missing && missing->size() < 8)
                missing->push_back(arrow_names_[gs[gi]] + " " + arrow_names_[fs[fi]]);
              else if (!missing)
                throw Error("composition table incomplete");
              h = kNone;
            }
            comp_[base + gi * fs.size() + fi] = h;
          }
      }
    }
  if (missing && !missing->empty()) return;

  inverse_.assign(m, kNone);
  for (std::size_t a = 0; a < m; ++a) {
    ObjectId x = dom_[a], y = cod_[a];
    for (ArrowId b : hom(y, x))
      if (compose_raw(b, static_cast<int>(a)) == identity_[x] && compose_raw(static_cast<int>(a), b) == identity_[y]) {
        inverse_[a] = b;
        break;
      }
  }

  UnionFind objects(n);
  for (std::size_t a = 0; a < m; ++a)
    if (inverse_[a] != kNone) objects.unite(dom_[a], cod_[a]);
  number_classes(objects, object_class_, class_members_);

  UnionFind arrows(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (ArrowId i : out_[cod_[a]])
      if (inverse_[i] != kNone) arrows.unite(static_cast<int>(a), compose_raw(i, static_cast<int>(a)));
    for (ArrowId j : in_[dom_[a]])
      if (inverse_[j] != kNone) arrows.unite(static_cast<int>(a), compose_raw(static_cast<int>(a), j));
  }
  number_classes(arrows, arrow_orbit_, orbit_members_);
}

Category Category::opposite() const {
  Category op;
  op.name_ = name_ + "^op";
  op.object_names_ = object_names_;
  op.arrow_names_ = arrow_names_;
  op.dom_ = cod_;
  op.cod_ = dom_;
  op.identity_ = identity_;
  op.finalize([this](ArrowId g, ArrowId f) { return compose_raw(f, g); }, nullptr);
  return op;
}

Subset Category::iso_closure_objects(const Subset& objects) const {
  Subset out(object_count());
  for (int x : objects.members())
    for (ObjectId y : class_members_[object_class_[x]]) out.insert(y);
  return out;
}

Subset Category::iso_closure_arrows(const Subset& arrows) const {
  Subset out(arrow_count());
  for (int a : arrows.members())
    for (ArrowId b : orbit_members_[arrow_orbit_[a]]) out.insert(b);
  return out;
}

Category::Builder::Builder(std::string name) : name_(std::move(name)) {}

Category::Builder::Builder(const Category& from) : name_(from.name()) {
  objects_ = from.object_names_;
  identities_ = from.identity_;
  for (std::size_t a = 0; a < from.arrow_count(); ++a)
    arrows_.push_back({from.arrow_names_[a], from.dom_[a], from.cod_[a]});
  for (std::size_t g = 0; g < from.arrow_count(); ++g)
    for (ArrowId f : from.in_arrows(from.dom_[g]))
      explicit_[pair_key(static_cast<int>(g), f)] = from.compose_raw(static_cast<int>(g), f);
}

ObjectId Category::Builder::add_object(const std::string& name, bool with_identity) {
  ObjectId x = static_cast<int>(objects_.size());
  objects_.push_back(name);
  identities_.push_back(kNone);
  if (with_identity) identities_[x] = add_arrow("id_" + name, x, x);
  return x;
}

ArrowId Category::Builder::add_arrow(const std::string& name, ObjectId dom, ObjectId cod) {
  if (dom < 0 || cod < 0 || static_cast<std::size_t>(dom) >= objects_.size() ||
      static_cast<std::size_t>(cod) >= objects_.size())
    throw Error("arrow " + name + ": unknown endpoint");
  arrows_.push_back({name, dom, cod});
  return static_cast<int>(arrows_.size() - 1);
}

void Category::Builder::set_identity(ObjectId x, ArrowId a) { identities_.at(x) = a; }

void Category::Builder::set_composite(ArrowId g, ArrowId f, ArrowId h) { explicit_[pair_key(g, f)] = h; }

Category Category::Builder::build() const {
  Category c;
  c.name_ = name_;
  c.object_names_ = objects_;
  std::unordered_map<std::string, int> seen;
  for (const auto& o : objects_)
    if (!seen.emplace(o, 0).second) throw Error("duplicate object name " + o);
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.emplace(a.name, 0).second) throw Error("duplicate arrow name " + a.name);
    c.arrow_names_.push_back(a.name);
    c.dom_.push_back(a.dom);
    c.cod_.push_back(a.cod);
  }
  int m = static_cast<int>(arrows_.size());
  for (std::size_t x = 0; x < objects_.size(); ++x)
    if (identities_[x] < 0 || identities_[x] >= m) throw Error("object " + objects_[x] + " has no identity");
  c.identity_ = identities_;
  for (const auto& [k, h] : explicit_) {
    int g = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
    if (g < 0 || g >= m || f < 0 || f >= m || h < 0 || h >= m) throw Error("composite refers to an unknown arrow");
    if (c.cod_[f] != c.dom_[g])
      throw Error("composite entry for non-composable pair " + arrows_[g].name + " " + arrows_[f].name);
  }
  auto table = [&](ArrowId g, ArrowId f) -> ArrowId {
    auto it = explicit_.find(pair_key(g, f));
    if (it != explicit_.end()) return it->second;
    if (identities_[c.dom_[g]] == g) return f;
    if (identities_[c.cod_[f]] == f) return g;
    if (rule_) return rule_(g, f);
    return kNone;
  };
  std::vector<std::string> missing;
  c.finalize(table, &missing);
  if (!missing.empty()) {
    std::ostringstream os;
    os << "missing composite";
    for (const auto& s : missing) os << " [" << s << "]";
    throw Error(os.str());
  }
  return c;
}

std::vector<Diagnostic> validate_category(const Category& c) {
  std::vector<Diagnostic> typing;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    ArrowId i = c.identity(static_cast<int>(x));
    if (c.dom(i) != static_cast<int>(x) || c.cod(i) != static_cast<int>(x))
      typing.push_back({"identity typing", "identity of " + c.object_name(static_cast<int>(x)) + " is " +
                                               c.arrow_name(i) + " with wrong endpoints", {i}});
  }
  for (std::size_t g = 0; g < c.arrow_count(); ++g)
    for (ArrowId f : c.in_arrows(c.dom(static_cast<int>(g)))) {
      ArrowId h = c.compose_raw(static_cast<int>(g), f);
      if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(static_cast<int>(g)))
        typing.push_back({"dom/cod mismatch",
                          "composite " + c.arrow_name(static_cast<int>(g)) + "." + c.arrow_name(f) + " = " +
                              c.arrow_name(h) + " has the wrong endpoints",
                          {static_cast<int>(g), f, h}});
    }
  if (!typing.empty()) return typing;

  std::vector<Diagnostic> out;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    int g = static_cast<int>(a);
    if (c.compose_raw(g, c.identity(c.dom(g))) != g)
      out.push_back({"right unit", c.arrow_name(g) + ".id != " + c.arrow_name(g), {g}});
    if (c.compose_raw(c.identity(c.cod(g)), g) != g)
      out.push_back({"left unit", "id." + c.arrow_name(g) + " != " + c.arrow_name(g), {g}});
  }
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    int g = static_cast<int>(a);
    for (ArrowId f : c.in_arrows(c.dom(g)))
      for (ArrowId h : c.out_arrows(c.cod(g))) {
        if (c.compose_raw(h, c.compose_raw(g, f)) != c.compose_raw(c.compose_raw(h, g), f))
          out.push_back({"associativity",
                         c.arrow_name(h) + ".(" + c.arrow_name(g) + "." + c.arrow_name(f) + ") != (" +
                             c.arrow_name(h) + "." + c.arrow_name(g) + ")." + c.arrow_name(f),
                         {h, g, f}});
      }
  }
  return out;
}

FullSubcategory full_subcategory(const Category& c, const Subset& objects, const std::string& name) {
  FullSubcategory s;
  s.object_from_base.assign(c.object_count(), kNone);
  s.arrow_from_base.assign(c.arrow_count(), kNone);
  Category::Builder b(name);
  for (int x : objects.members()) {
    s.object_from_base[x] = b.add_object(c.object_name(x), false);
    s.object_to_base.push_back(x);
  }
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    int d = s.object_from_base[c.dom(static_cast<int>(a))], e = s.object_from_base[c.cod(static_cast<int>(a))];
    if (d == kNone || e == kNone) continue;
    s.arrow_from_base[a] = b.add_arrow(c.arrow_name(static_cast<int>(a)), d, e);
    s.arrow_to_base.push_back(static_cast<int>(a));
  }
  for (std::size_t i = 0; i < s.object_to_base.size(); ++i)
    b.set_identity(static_cast<int>(i), s.arrow_from_base[c.identity(s.object_to_base[i])]);
  b.set_composition([&](ArrowId g, ArrowId f) {
    return s.arrow_from_base[c.compose_raw(s.arrow_to_base[g], s.arrow_to_base[f])];
  });
  s.category = std::make_shared<const Category>(b.build());
  return s;
}

}  // namespace fincat
