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

#include "fincat/prepointed.hpp"

#include "fincat/ideal.hpp"
#include "fincat/limits.hpp"

namespace fincat {

namespace {

std::string first(const std::vector<Diagnostic>& d) { return d.empty() ? std::string() : d.front().law + ": " + d.front().message; }

}  // namespace

std::optional<IdentityKernelPreradical> identity_kernel_preradical(const NullStructure& s) {
  const Category& c = s.base();
  IdentityKernelPreradical r;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    auto k = search_homotopy_kernel(s, c.identity(static_cast<int>(x)));
    if (!k) return std::nullopt;
    r.kernels.push_back(std::move(*k));
  }
  r.n = Functor{"N", s.base_ptr(), s.base_ptr(), {}, {}};
  for (const auto& k : r.kernels) r.n.obj.push_back(k.object);
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    ArrowId g = static_cast<int>(a);
    const auto& kx = r.kernels[c.dom(g)];
    const auto& ky = r.kernels[c.cod(g)];
    r.n.arr.push_back(ky.mediator_for(c.compose_raw(g, kx.arrow), s.left(g, kx.witness)));
  }
  for (ArrowId m : r.n.arr)
    if (m == kNone) throw Error("identity kernels: missing mediator");
  r.counit = NatTrans{"n", r.n, identity_functor(s.base_ptr()), {}};
  for (const auto& k : r.kernels) r.counit.component.push_back(k.arrow);
  auto fd = verify_functor(r.n);
  r.checks.push_back(make_check("identity kernels form a functor", "identity-kernel-preradical", fd.empty(), first(fd)));
  auto nd = verify_nat_trans(r.counit);
  r.checks.push_back(make_check("kernel arrows are natural", "identity-kernel-preradical", nd.empty(), first(nd)));
  if (!fd.empty() || !nd.empty()) return r;

  r.theta_n = induce_from_preradical(r.counit, "theta_n");
  const auto& tn = *r.theta_n;
  r.to_theta.assign(tn.structure.homotopy_count(), kNone);
  for (std::size_t p = 0; p < r.to_theta.size(); ++p) {
    ArrowId g = tn.structure.carrier(static_cast<int>(p));
    r.to_theta[p] = s.right(r.kernels[c.cod(g)].witness, tn.witness[p][0]);
  }
  r.from_theta.assign(s.homotopy_count(), kNone);
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    ArrowId g = s.carrier(static_cast<int>(p));
    ArrowId psi = r.kernels[c.cod(g)].mediator_for(g, static_cast<int>(p));
    if (psi == kNone) continue;
    if (auto h = tn.find(g, {psi})) r.from_theta[p] = *h;
  }
  auto d1 = verify_morphism(tn.structure, s, r.to_theta);
  auto d2 = verify_morphism(s, tn.structure, r.from_theta);
  r.checks.push_back(make_check("induced structure maps into the original", "identity-kernel-preradical", d1.empty(), first(d1)));
  r.checks.push_back(make_check("original structure maps into the induced one", "identity-kernel-preradical", d2.empty(), first(d2)));
  if (d1.empty() && d2.empty())
    r.checks.push_back(make_check("the two maps are mutually inverse", "identity-kernel-preradical",
                                  is_identity(compose(r.to_theta, r.from_theta)) && is_identity(compose(r.from_theta, r.to_theta))));
  return r;
}

PrepointedCharacterization characterize_prepointed(const NullStructure& s) {
  const Category& c = s.base();
  PrepointedCharacterization r;
  std::vector<HomotopyKernel> kernels, cokernels;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    ArrowId id = c.identity(static_cast<int>(x));
    auto k = search_homotopy_kernel(s, id);
    auto q = search_homotopy_cokernel(s, id);
    if (!k || !*k->strong) {
      r.failed_hypothesis = "no strong kernel of the identity on " + c.object_name(static_cast<int>(x));
      return r;
    }
    if (!q || !*q->strong) {
      r.failed_hypothesis = "no strong cokernel of the identity on " + c.object_name(static_cast<int>(x));
      return r;
    }
    kernels.push_back(std::move(*k));
    cokernels.push_back(std::move(*q));
  }
  Subset trivial = trivial_objects(s);
  for (int a : trivial.members())
    for (std::size_t x = 0; x < c.object_count(); ++x)
      if (!orthogonal(s, a, static_cast<int>(x)) || !orthogonal(s, static_cast<int>(x), a)) {
        r.failed_hypothesis = "trivial object " + c.object_name(a) + " is not orthogonal to " +
                              c.object_name(static_cast<int>(x));
        return r;
      }
  r.hypotheses_hold = true;

  bool inside = true;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    inside = inside && trivial.contains(kernels[x].object) && trivial.contains(cokernels[x].object);
  r.checks.push_back(make_check("identity kernels and cokernels are trivial", "prepointed-characterization", inside));
  if (!inside) return r;

  r.trivial = full_subcategory(c, trivial, c.name() + "_trivial");
  const auto& sub = *r.trivial;
  CategoryPtr a = sub.category;
  Functor u = inclusion(sub, s.base_ptr());
  u.name = "U";
  Functor n{"N", s.base_ptr(), a, {}, {}};
  Functor q{"Q", s.base_ptr(), a, {}, {}};
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    n.obj.push_back(sub.object_from_base[kernels[x].object]);
    q.obj.push_back(sub.object_from_base[cokernels[x].object]);
  }
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    ArrowId ga = static_cast<int>(g);
    ObjectId x = c.dom(ga), y = c.cod(ga);
    ArrowId nm = kernels[y].mediator_for(c.compose_raw(ga, kernels[x].arrow), s.left(ga, kernels[x].witness));
    ArrowId qm = cokernels[x].mediator_for(c.compose_raw(cokernels[y].arrow, ga), s.right(cokernels[y].witness, ga));
    n.arr.push_back(nm == kNone ? kNone : sub.arrow_from_base[nm]);
    q.arr.push_back(qm == kNone ? kNone : sub.arrow_from_base[qm]);
  }
  NatTrans eta_q{"q", identity_functor(s.base_ptr()), compose(u, q), {}};
  NatTrans eps_q{"e", compose(q, u), identity_functor(a), {}};
  NatTrans eta_n{"i", identity_functor(a), compose(n, u), {}};
  NatTrans eps_n{"n", compose(u, n), identity_functor(s.base_ptr()), {}};
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    eta_q.component.push_back(cokernels[x].arrow);
    eps_n.component.push_back(kernels[x].arrow);
  }
  for (ObjectId base : sub.object_to_base) {
    HomotopyId lambda = s.theta(c.identity(base)).front();
    ArrowId e = cokernels[base].mediator_for(c.identity(base), lambda);
    ArrowId i = kernels[base].mediator_for(c.identity(base), lambda);
    eps_q.component.push_back(e == kNone ? kNone : sub.arrow_from_base[e]);
    eta_n.component.push_back(i == kNone ? kNone : sub.arrow_from_base[i]);
  }
  r.string = PrepointedString{Adjunction{"Q-|U", q, u, eta_q, eps_q}, Adjunction{"U-|N", u, n, eta_n, eps_n}};
  auto d = verify_string(*r.string);
  r.checks.push_back(make_check("trivial objects reflective and coreflective", "prepointed-characterization", d.empty(), first(d)));
  if (auto pre = identity_kernel_preradical(s)) {
    bool ok = all_pass(pre->checks);
    r.checks.push_back(make_check("induced structure coincides with the original", "prepointed-characterization", ok));
  }
  return r;
}

std::vector<CheckRecord> monad_structure_checks(const PrepointedString& s) {
  std::vector<CheckRecord> out;
  const Functor& u = s.u();
  const Category& b = *u.dst;
  auto tg = induce_from_precoradical(s.gamma(), "theta_gamma");
  Subset trivial = trivial_objects(tg.structure);
  Functor sf = compose(u, s.c());

  bool split = true;
  for (std::size_t x = 0; x < b.object_count(); ++x)
    if (trivial.contains(static_cast<int>(x)) != classify_arrow(b, s.gamma().at(static_cast<int>(x))).split_mono()) split = false;
  out.push_back(make_check("trivial iff the unit is split mono", "unit-split-mono", split));

  bool s_trivial = true;
  Subset images(b.object_count()), s_images(b.object_count());
  for (ObjectId y : u.obj) images.insert(y);
  for (ObjectId y : sf.obj) {
    s_images.insert(y);
    if (!trivial.contains(y)) s_trivial = false;
  }
  out.push_back(make_check("monad values are trivial", "unit-split-mono", s_trivial));
  Subset z1 = ideal_of(tg.structure);
  out.push_back(make_check("ideal generated by the subcategory", "unit-split-mono",
                           z1 == generated_ideal(b, images) && z1 == generated_ideal(b, s_images) && is_closed_ideal(b, z1)));
  out.push_back(make_check("trivial objects are the replete image", "unit-split-mono", trivial == b.iso_closure_objects(images)));
  bool perp = true;
  for (int x : trivial.members())
    for (std::size_t y = 0; y < b.object_count(); ++y)
      if (!orthogonal(tg.structure, x, static_cast<int>(y)) || !orthogonal(tg.structure, static_cast<int>(y), x)) perp = false;
  out.push_back(make_check("trivial objects orthogonal on both sides", "trivial-orthogonal-both-sides", perp));
  return out;
}

}  // namespace fincat
