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

#include "fincat/functor.hpp"

namespace fincat {

namespace {

bool tables_sized(const Functor& f) {
  return f.src && f.dst && f.obj.size() == f.src->object_count() && f.arr.size() == f.src->arrow_count();
}

}  // namespace

std::vector<Diagnostic> verify_functor(const Functor& f) {
  std::vector<Diagnostic> out;
  if (!tables_sized(f)) {
    out.push_back({"functor tables", f.name + ": object or arrow table has the wrong size", {}});
    return out;
  }
  const Category& s = *f.src;
  const Category& d = *f.dst;
  for (ObjectId x : f.obj)
    if (x < 0 || static_cast<std::size_t>(x) >= d.object_count()) {
      out.push_back({"functor tables", f.name + ": object image out of range", {}});
      return out;
    }
  for (ArrowId a : f.arr)
    if (a < 0 || static_cast<std::size_t>(a) >= d.arrow_count()) {
      out.push_back({"functor tables", f.name + ": arrow image out of range", {}});
      return out;
    }
  for (std::size_t a = 0; a < s.arrow_count(); ++a) {
    ArrowId fa = f.arr[a];
    if (d.dom(fa) != f.obj[s.dom(static_cast<int>(a))] || d.cod(fa) != f.obj[s.cod(static_cast<int>(a))])
      out.push_back({"functor typing", f.name + " sends " + s.arrow_name(static_cast<int>(a)) + " to " +
                                           d.arrow_name(fa) + " with wrong endpoints",
                     {static_cast<int>(a)}});
  }
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < s.object_count(); ++x)
    if (f.arr[s.identity(static_cast<int>(x))] != d.identity(f.obj[x]))
      out.push_back({"functor identity", f.name + " does not preserve the identity of " + s.object_name(static_cast<int>(x)),
                     {s.identity(static_cast<int>(x))}});
  for (std::size_t g = 0; g < s.arrow_count(); ++g)
    for (ArrowId h : s.in_arrows(s.dom(static_cast<int>(g)))) {
      ArrowId gh = s.compose_raw(static_cast<int>(g), h);
      if (f.arr[gh] != d.compose_raw(f.arr[g], f.arr[h]))
        out.push_back({"functor composition",
                       f.name + " does not preserve " + s.arrow_name(static_cast<int>(g)) + "." + s.arrow_name(h),
                       {static_cast<int>(g), h}});
    }
  return out;
}

std::vector<Diagnostic> verify_nat_trans(const NatTrans& t) {
  std::vector<Diagnostic> out;
  if (!tables_sized(t.source) || !tables_sized(t.target) || t.source.src != t.target.src ||
      t.source.dst != t.target.dst || t.component.size() != t.source.src->object_count()) {
    out.push_back({"transformation tables", t.name + ": functors or components do not match", {}});
    return out;
  }
  const Category& s = *t.source.src;
  const Category& d = *t.source.dst;
  for (std::size_t x = 0; x < s.object_count(); ++x) {
    ArrowId c = t.component[x];
    if (c < 0 || static_cast<std::size_t>(c) >= d.arrow_count() || d.dom(c) != t.source.obj[x] ||
        d.cod(c) != t.target.obj[x]) {
      out.push_back({"component typing", t.name + " at " + s.object_name(static_cast<int>(x)) + " has wrong endpoints", {}});
    }
  }
  if (!out.empty()) return out;
  for (std::size_t a = 0; a < s.arrow_count(); ++a) {
    ObjectId x = s.dom(static_cast<int>(a)), y = s.cod(static_cast<int>(a));
    if (d.compose_raw(t.target.arr[a], t.component[x]) != d.compose_raw(t.component[y], t.source.arr[a]))
      out.push_back({"naturality", t.name + " is not natural at " + s.arrow_name(static_cast<int>(a)),
                     {static_cast<int>(a)}});
  }
  return out;
}

std::vector<Diagnostic> verify_adjunction(const Adjunction& a) {
  std::vector<Diagnostic> out;
  for (const Functor* f : {&a.left, &a.right}) {
    auto d = verify_functor(*f);
    out.insert(out.end(), d.begin(), d.end());
  }
  if (!out.empty()) return out;
  if (a.left.src != a.right.dst || a.left.dst != a.right.src) {
    out.push_back({"adjunction typing", a.name + ": functors do not run in opposite directions", {}});
    return out;
  }
  Functor rl = compose(a.right, a.left);
  Functor lr = compose(a.left, a.right);
  if (!same_functor(a.unit.source, identity_functor(a.left.src)) || !same_functor(a.unit.target, rl))
    out.push_back({"adjunction typing", a.name + ": unit must run from the identity to right.left", {}});
  if (!same_functor(a.counit.source, lr) || !same_functor(a.counit.target, identity_functor(a.left.dst)))
    out.push_back({"adjunction typing", a.name + ": counit must run from left.right to the identity", {}});
  if (!out.empty()) return out;
  for (const NatTrans* t : {&a.unit, &a.counit}) {
    auto d = verify_nat_trans(*t);
    out.insert(out.end(), d.begin(), d.end());
  }
  if (!out.empty()) return out;
  const Category& c = *a.left.src;
  const Category& d = *a.left.dst;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    ObjectId lx = a.left.obj[x];
    if (d.compose_raw(a.counit.component[lx], a.left.arr[a.unit.component[x]]) != d.identity(lx))
      out.push_back({"triangle identity", a.name + ": counit.L(unit) is not the identity at " + c.object_name(static_cast<int>(x)),
                     {a.unit.component[x]}});
  }
  for (std::size_t y = 0; y < d.object_count(); ++y) {
    ObjectId ry = a.right.obj[y];
    if (c.compose_raw(a.right.arr[a.counit.component[y]], a.unit.component[ry]) != c.identity(ry))
      out.push_back({"triangle identity", a.name + ": R(counit).unit is not the identity at " + d.object_name(static_cast<int>(y)),
                     {a.counit.component[y]}});
  }
  return out;
}

bool same_functor(const Functor& f, const Functor& g) {
  return f.src == g.src && f.dst == g.dst && f.obj == g.obj && f.arr == g.arr;
}

Functor identity_functor(CategoryPtr c) {
  Functor f{"Id", c, c, {}, {}};
  for (std::size_t x = 0; x < c->object_count(); ++x) f.obj.push_back(static_cast<int>(x));
  for (std::size_t a = 0; a < c->arrow_count(); ++a) f.arr.push_back(static_cast<int>(a));
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.dst != g.src) throw Error("compose: functors " + g.name + " and " + f.name + " are not composable");
  Functor h{g.name + f.name, f.src, g.dst, {}, {}};
  for (ObjectId x : f.obj) h.obj.push_back(g.obj[x]);
  for (ArrowId a : f.arr) h.arr.push_back(g.arr[a]);
  return h;
}

NatTrans whisker(const Functor& h, const NatTrans& t) {
  NatTrans r{h.name + t.name, compose(h, t.source), compose(h, t.target), {}};
  for (ArrowId c : t.component) r.component.push_back(h.arr[c]);
  return r;
}

NatTrans whisker(const NatTrans& t, const Functor& h) {
  NatTrans r{t.name + h.name, compose(t.source, h), compose(t.target, h), {}};
  for (ObjectId x : h.obj) r.component.push_back(t.component[x]);
  return r;
}

Functor inclusion(const FullSubcategory& s, CategoryPtr base) {
  return Functor{"incl", s.category, std::move(base), s.object_to_base, s.arrow_to_base};
}

}  // namespace fincat
