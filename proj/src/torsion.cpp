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

#include "fincat/torsion.hpp"

#include "fincat/caps.hpp"
#include "fincat/ideal.hpp"

namespace fincat {

const char* to_string(TTLevel level) {
  switch (level) {
    case TTLevel::strict:
      return "strict";
    case TTLevel::weak:
      return "weak";
    case TTLevel::none:
      return "none";
  }
  return "?";
}

std::string describe(const Category& c, const Subset& objects) {
  std::string out = "{";
  bool first = true;
  for (int x : objects.members()) {
    if (!first) out += " ";
    out += c.object_name(x);
    first = false;
  }
  return out + "}";
}

namespace {

bool replete(const Category& c, const Subset& s) { return c.iso_closure_objects(s) == s; }

/// Orthogonality level of every arrow T -> F: 2 strict, 1 weak, 0 none.
int orthogonality_level(const NullStructure& s, ObjectId t, ObjectId f) {
  int level = 2;
  for (ArrowId h : s.base().hom(t, f)) {
    std::size_t n = s.theta(h).size();
    if (n == 0) return 0;
    if (n > 1) level = 1;
  }
  return level;
}

Subset expand(const Category& c, unsigned long long mask) {
  Subset out(c.object_count());
  for (std::size_t k = 0; k < c.iso_class_count(); ++k)
    if (mask >> k & 1ULL)
      for (ObjectId x : c.iso_class_members(static_cast<int>(k))) out.insert(x);
  return out;
}

}  // namespace

std::vector<ExactPresentation> find_exact_presentations(const NullStructure& s, const TorsionPair& p, ObjectId x) {
  const Category& c = s.base();
  std::vector<ExactPresentation> out;
  for (ArrowId t : c.in_arrows(x)) {
    if (!p.torsion.contains(c.dom(t))) continue;
    for (ArrowId f : c.out_arrows(x)) {
      if (!p.free.contains(c.cod(f))) continue;
      for (HomotopyId xi : s.theta(c.compose_raw(f, t))) {
        if (!verify_kernel(s, f, t, xi)) continue;
        if (!verify_cokernel(s, t, f, xi)) continue;
        out.push_back({c.dom(t), t, xi, f, c.cod(f), true, true, is_mono(c, t), is_epi(c, f)});
      }
    }
  }
  return out;
}

TTVerdict check_torsion_theory(const NullStructure& s, const TorsionPair& p) {
  const Category& c = s.base();
  TTVerdict v;
  v.replete = replete(c, p.torsion) && replete(c, p.free);
  if (!v.replete) {
    v.failure = "not replete";
    return v;
  }
  int level = 2;
  for (int t : p.torsion.members())
    for (int f : p.free.members()) {
      int l = orthogonality_level(s, t, f);
      if (l < level) {
        level = l;
        if (l == 0) {
          v.failure = "an arrow from T to F carries no nullhomotopy";
          v.witnesses = {c.object_name(t), c.object_name(f)};
          return v;
        }
      }
    }
  v.quasi_proper = true;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    auto pres = find_exact_presentations(s, p, static_cast<int>(x));
    if (pres.empty()) {
      v.presentations.clear();
      v.quasi_proper = false;
      v.failure = "no exact presentation";
      v.witnesses = {c.object_name(static_cast<int>(x))};
      return v;
    }
    for (const auto& e : pres)
      if (!e.t_mono || !e.f_epi) v.quasi_proper = false;
    v.presentations.push_back(std::move(pres));
  }
  v.level = level == 2 ? TTLevel::strict : TTLevel::weak;
  return v;
}

Z1TTVerdict check_z1_torsion_theory(const Category& c, const Subset& z1, const TorsionPair& p) {
  Z1TTVerdict v;
  v.replete = replete(c, p.torsion) && replete(c, p.free);
  if (!v.replete) {
    v.failure = "not replete";
    return v;
  }
  for (int t : p.torsion.members())
    for (int f : p.free.members())
      for (ArrowId h : c.hom(t, f))
        if (!z1.contains(h)) {
          v.failure = "an arrow from T to F is outside the ideal";
          v.witnesses = {c.arrow_name(h)};
          return v;
        }
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::optional<Z1Presentation> found;
    for (ArrowId f : c.out_arrows(static_cast<int>(x))) {
      if (!p.free.contains(c.cod(f))) continue;
      auto k = z1_kernel(c, z1, f);
      if (!k || !p.torsion.contains(k->object)) continue;
      if (!verify_z1_cokernel(c, z1, k->arrow, f)) continue;
      found = Z1Presentation{k->object, k->arrow, f, c.cod(f)};
      break;
    }
    if (!found) {
      v.presentations.clear();
      v.failure = "no exact presentation";
      v.witnesses = {c.object_name(static_cast<int>(x))};
      return v;
    }
    v.presentations.push_back(*found);
  }
  v.z1_tt = true;
  if (is_closed_ideal(c, z1)) v.pretorsion = generated_ideal(c, p.torsion & p.free) == z1;
  return v;
}

std::vector<TorsionPair> enumerate_torsion_theories(const NullStructure& s, TTLevel level) {
  return enumerate_torsion_theories(s, level, caps().tt_iso_classes);
}

std::vector<TorsionPair> enumerate_torsion_theories(const NullStructure& s, TTLevel level, long long cap) {
  const Category& c = s.base();
  std::size_t k = c.iso_class_count();
  require_cap("tt", cap, static_cast<long long>(k));
  if (level == TTLevel::none) throw Error("enumeration level must be strict or weak");
  int need = level == TTLevel::strict ? 2 : 1;
  std::vector<unsigned long long> allowed(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      bool ok = true;
      for (ObjectId t : c.iso_class_members(static_cast<int>(a)))
        for (ObjectId f : c.iso_class_members(static_cast<int>(b)))
          if (orthogonality_level(s, t, f) < need) ok = false;
      if (ok) allowed[a] |= 1ULL << b;
    }
  std::vector<TorsionPair> out;
  unsigned long long full = k == 64 ? ~0ULL : (1ULL << k) - 1;
  for (unsigned long long tm = 0; tm <= full; ++tm) {
    unsigned long long room = full;
    for (std::size_t a = 0; a < k; ++a)
      if (tm >> a & 1ULL) room &= allowed[a];
    std::vector<unsigned long long> fms;
    for (unsigned long long fm = room;; fm = (fm - 1) & room) {
      fms.push_back(fm);
      if (fm == 0) break;
    }
    for (auto it = fms.rbegin(); it != fms.rend(); ++it) {
      TorsionPair p{"", expand(c, tm), expand(c, *it)};
      if (check_torsion_theory(s, p).at_least(level)) {
        p.name = "tt" + std::to_string(out.size());
        out.push_back(std::move(p));
      }
    }
    if (tm == full) break;
  }
  return out;
}

std::vector<TorsionPair> enumerate_z1_torsion_theories(const Category& c, const Subset& z1) {
  return enumerate_z1_torsion_theories(c, z1, caps().tt_iso_classes);
}

std::vector<TorsionPair> enumerate_z1_torsion_theories(const Category& c, const Subset& z1, long long cap) {
  std::size_t k = c.iso_class_count();
  require_cap("tt", cap, static_cast<long long>(k));
  std::vector<unsigned long long> allowed(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      bool ok = true;
      for (ObjectId t : c.iso_class_members(static_cast<int>(a)))
        for (ObjectId f : c.iso_class_members(static_cast<int>(b)))
          for (ArrowId h : c.hom(t, f))
            if (!z1.contains(h)) ok = false;
      if (ok) allowed[a] |= 1ULL << b;
    }
  std::vector<TorsionPair> out;
  unsigned long long full = k == 64 ? ~0ULL : (1ULL << k) - 1;
  for (unsigned long long tm = 0; tm <= full; ++tm) {
    unsigned long long room = full;
    for (std::size_t a = 0; a < k; ++a)
      if (tm >> a & 1ULL) room &= allowed[a];
    std::vector<unsigned long long> fms;
    for (unsigned long long fm = room;; fm = (fm - 1) & room) {
      fms.push_back(fm);
      if (fm == 0) break;
    }
    for (auto it = fms.rbegin(); it != fms.rend(); ++it) {
      TorsionPair p{"", expand(c, tm), expand(c, *it)};
      if (check_z1_torsion_theory(c, z1, p).z1_tt) {
        p.name = "z1tt" + std::to_string(out.size());
        out.push_back(std::move(p));
      }
    }
    if (tm == full) break;
  }
  return out;
}

ReflectionRecord verify_reflection(const NullStructure& s, const TorsionPair& p) {
  return verify_reflection(s, p, check_torsion_theory(s, p));
}

ReflectionRecord verify_reflection(const NullStructure& s, const TorsionPair& p, const TTVerdict& v) {
  ReflectionRecord r;
  const Category& c = s.base();
  if (v.level != TTLevel::strict) {
    r.diagnostics.push_back({"hypothesis", "the pair is not a strict torsion theory", {}});
    return r;
  }
  CategoryPtr base = s.base_ptr();
  r.torsion_sub = full_subcategory(c, p.torsion, c.name() + "_T");
  r.free_sub = full_subcategory(c, p.free, c.name() + "_F");
  const auto& ts = *r.torsion_sub;
  const auto& fs = *r.free_sub;
  std::size_t n = c.object_count();

  std::vector<HomotopyKernel> kernels, cokernels;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& e = v.presentations[x].front();
    auto k = verify_kernel(s, e.f_arrow, e.t_arrow, e.witness);
    auto q = verify_cokernel(s, e.t_arrow, e.f_arrow, e.witness);
    if (!k || !q) {
      r.diagnostics.push_back({"presentation", "presentation of " + c.object_name(static_cast<int>(x)) + " is not exact", {}});
      return r;
    }
    kernels.push_back(std::move(*k));
    cokernels.push_back(std::move(*q));
  }
  auto pres = [&](ObjectId x) -> const ExactPresentation& { return v.presentations[x].front(); };
  auto unique_homotopy = [&](ArrowId g) { return s.theta(g).size() == 1 ? s.theta(g).front() : kNone; };
  auto fail = [&](const std::string& law, const std::string& msg) { r.diagnostics.push_back({law, msg, {}}); };

  Functor L{"reflector", base, fs.category, {}, {}};
  Functor R{"coreflector", base, ts.category, {}, {}};
  for (std::size_t x = 0; x < n; ++x) {
    L.obj.push_back(fs.object_from_base[pres(static_cast<int>(x)).f_object]);
    R.obj.push_back(ts.object_from_base[pres(static_cast<int>(x)).t_object]);
  }
  for (std::size_t gi = 0; gi < c.arrow_count(); ++gi) {
    ArrowId g = static_cast<int>(gi);
    const auto& px = pres(c.dom(g));
    const auto& py = pres(c.cod(g));
    HomotopyId lambda = unique_homotopy(c.compose({py.f_arrow, g, px.t_arrow}));
    if (lambda == kNone) {
      fail("orthogonality", "no unique nullhomotopy on " + c.arrow_name(g) + " between presentations");
      return r;
    }
    ArrowId fg = cokernels[c.dom(g)].mediator_for(c.compose(py.f_arrow, g), lambda);
    ArrowId tg = kernels[c.cod(g)].mediator_for(c.compose(g, px.t_arrow), lambda);
    if (fg == kNone || tg == kNone) {
      fail("universal property", "missing mediator for " + c.arrow_name(g));
      return r;
    }
    L.arr.push_back(fs.arrow_from_base[fg]);
    R.arr.push_back(ts.arrow_from_base[tg]);
  }
  Functor incl_f = inclusion(fs, base);
  Functor incl_t = inclusion(ts, base);

  NatTrans unit_f{"unit", identity_functor(base), compose(incl_f, L), {}};
  for (std::size_t x = 0; x < n; ++x) unit_f.component.push_back(pres(static_cast<int>(x)).f_arrow);
  NatTrans counit_f{"counit", compose(L, incl_f), identity_functor(fs.category), {}};
  for (ObjectId f : fs.object_to_base) {
    HomotopyId lambda = unique_homotopy(pres(f).t_arrow);
    ArrowId e = lambda == kNone ? kNone : cokernels[f].mediator_for(c.identity(f), lambda);
    if (e == kNone) {
      fail("universal property", "no counit at " + c.object_name(f));
      return r;
    }
    counit_f.component.push_back(fs.arrow_from_base[e]);
  }
  NatTrans unit_t{"unit", identity_functor(ts.category), compose(R, incl_t), {}};
  for (ObjectId t : ts.object_to_base) {
    HomotopyId lambda = unique_homotopy(pres(t).f_arrow);
    ArrowId e = lambda == kNone ? kNone : kernels[t].mediator_for(c.identity(t), lambda);
    if (e == kNone) {
      fail("universal property", "no unit at " + c.object_name(t));
      return r;
    }
    unit_t.component.push_back(ts.arrow_from_base[e]);
  }
  NatTrans counit_t{"counit", compose(incl_t, R), identity_functor(base), {}};
  for (std::size_t x = 0; x < n; ++x) counit_t.component.push_back(pres(static_cast<int>(x)).t_arrow);

  r.reflection = Adjunction{"reflection onto F", L, incl_f, unit_f, counit_f};
  r.coreflection = Adjunction{"coreflection onto T", incl_t, R, unit_t, counit_t};
  for (const auto* adj : {&*r.reflection, &*r.coreflection}) {
    auto d = verify_adjunction(*adj);
    r.diagnostics.insert(r.diagnostics.end(), d.begin(), d.end());
  }
  return r;
}

bool presentations_isomorphic(const Category& c, const ExactPresentation& a, const ExactPresentation& b) {
  if (c.cod(a.t_arrow) != c.cod(b.t_arrow)) return false;
  bool t_ok = false;
  for (ArrowId i : c.hom(a.t_object, b.t_object))
    if (c.is_iso(i) && c.compose_raw(b.t_arrow, i) == a.t_arrow) t_ok = true;
  bool f_ok = false;
  for (ArrowId j : c.hom(a.f_object, b.f_object))
    if (c.is_iso(j) && c.compose_raw(j, a.f_arrow) == b.f_arrow) f_ok = true;
  return t_ok && f_ok;
}

}  // namespace fincat
