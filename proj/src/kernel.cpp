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

#include "fincat/kernel.hpp"

#include <algorithm>
#include <tuple>

#include "fincat/detail/view.hpp"
#include "fincat/ideal.hpp"

namespace fincat {

namespace {

template <bool D>
struct SView {
  const NullStructure& s;
  detail::View<D> v;

  explicit SView(const NullStructure& st) : s(st), v{st.base()} {}
  HomotopyId left(ArrowId h, HomotopyId phi) const { return D ? s.right(phi, h) : s.left(h, phi); }
  HomotopyId right(HomotopyId phi, ArrowId f) const { return D ? s.left(f, phi) : s.right(phi, f); }
  const std::vector<HomotopyId>& theta(ArrowId g) const { return s.theta(g); }
};

bool mediator_less(const KernelMediator& a, const KernelMediator& b) {
  return std::tie(a.cone_arrow, a.cone_homotopy) < std::tie(b.cone_arrow, b.cone_homotopy);
}

template <bool D>
std::vector<std::size_t> cone_counts(const SView<D>& sv, ArrowId g) {
  const auto& v = sv.v;
  std::vector<std::size_t> counts(v.object_count(), 0);
  for (std::size_t w = 0; w < v.object_count(); ++w)
    for (ArrowId f : v.hom(static_cast<int>(w), v.dom(g))) counts[w] += sv.theta(v.comp(g, f)).size();
  return counts;
}

template <bool D>
bool profile_matches(const SView<D>& sv, ObjectId n, const std::vector<std::size_t>& counts) {
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (sv.v.hom(static_cast<int>(w), n).size() != counts[w]) return false;
  return true;
}

template <bool D>
std::optional<HomotopyKernel> verify(const SView<D>& sv, ArrowId g, ArrowId n, HomotopyId nu,
                                     const std::vector<std::size_t>& counts) {
  const auto& v = sv.v;
  if (v.cod(n) != v.dom(g)) return std::nullopt;
  if (nu < 0 || static_cast<std::size_t>(nu) >= sv.s.homotopy_count() || sv.s.carrier(nu) != v.comp(g, n))
    return std::nullopt;
  ObjectId obj = v.dom(n);
  if (!profile_matches(sv, obj, counts)) return std::nullopt;
  HomotopyKernel k{obj, n, nu, {}, std::nullopt};
  for (std::size_t w = 0; w < v.object_count(); ++w) {
    std::vector<KernelMediator> local;
    for (ArrowId m : v.hom(static_cast<int>(w), obj)) local.push_back({v.comp(n, m), sv.right(nu, m), m});
    std::sort(local.begin(), local.end(), mediator_less);
    for (std::size_t i = 1; i < local.size(); ++i)
      if (local[i].cone_arrow == local[i - 1].cone_arrow && local[i].cone_homotopy == local[i - 1].cone_homotopy)
        return std::nullopt;
    k.mediators.insert(k.mediators.end(), local.begin(), local.end());
  }
  std::sort(k.mediators.begin(), k.mediators.end(), mediator_less);
  return k;
}

template <bool D>
StrongVerdict strong(const SView<D>& sv, ArrowId g, const HomotopyKernel& k) {
  const auto& v = sv.v;
  StrongVerdict r;
  for (ArrowId f : v.in_arrows(k.object)) {
    ArrowId nf = v.comp(k.arrow, f);
    HomotopyId target = sv.right(k.witness, f);
    for (HomotopyId phi : sv.theta(nf)) {
      if (sv.left(g, phi) != target) continue;
      std::size_t lifts = 0;
      for (HomotopyId p : sv.theta(f))
        if (sv.left(k.arrow, p) == phi) ++lifts;
      if (lifts != 1) {
        r.strong = false;
        r.arrow = f;
        r.homotopy = phi;
        r.lifts = lifts;
        return r;
      }
    }
  }
  return r;
}

template <bool D>
std::vector<HomotopyKernel> search(const SView<D>& sv, ArrowId g, bool first_only) {
  const auto& v = sv.v;
  std::vector<HomotopyKernel> out;
  auto counts = cone_counts(sv, g);
  for (std::size_t n = 0; n < v.object_count(); ++n) {
    if (!profile_matches(sv, static_cast<int>(n), counts)) continue;
    for (ArrowId arrow : v.hom(static_cast<int>(n), v.dom(g)))
      for (HomotopyId nu : sv.theta(v.comp(g, arrow)))
        if (auto k = verify(sv, g, arrow, nu, counts)) {
          k->strong = strong(sv, g, *k).strong;
          out.push_back(std::move(*k));
          if (first_only) return out;
        }
  }
  return out;
}

template <bool D>
std::size_t z1_count(const detail::View<D>& v, const Subset& z1, ObjectId w, ArrowId g) {
  std::size_t n = 0;
  for (ArrowId f : v.hom(w, v.dom(g)))
    if (z1.contains(v.comp(g, f))) ++n;
  return n;
}

template <bool D>
bool z1_verify(const detail::View<D>& v, const Subset& z1, ArrowId g, ArrowId k) {
  if (v.cod(k) != v.dom(g) || !z1.contains(v.comp(g, k))) return false;
  std::vector<char> seen(v.arrow_count(), 0);
  for (std::size_t w = 0; w < v.object_count(); ++w) {
    const auto& ms = v.hom(static_cast<int>(w), v.dom(k));
    if (ms.size() != z1_count(v, z1, static_cast<int>(w), g)) return false;
    std::vector<ArrowId> touched;
    bool ok = true;
    for (ArrowId m : ms) {
      ArrowId km = v.comp(k, m);
      if (seen[km]) ok = false;
      seen[km] = 1;
      touched.push_back(km);
    }
    for (ArrowId t : touched) seen[t] = 0;
    if (!ok) return false;
  }
  return true;
}

template <bool D>
std::optional<Z1Kernel> z1_search(const detail::View<D>& v, const Subset& z1, ArrowId g) {
  std::vector<std::size_t> counts(v.object_count());
  for (std::size_t w = 0; w < v.object_count(); ++w) counts[w] = z1_count(v, z1, static_cast<int>(w), g);
  for (std::size_t n = 0; n < v.object_count(); ++n) {
    bool profile = true;
    for (std::size_t w = 0; w < v.object_count() && profile; ++w)
      profile = v.hom(static_cast<int>(w), static_cast<int>(n)).size() == counts[w];
    if (!profile) continue;
    for (ArrowId k : v.hom(static_cast<int>(n), v.dom(g)))
      if (z1_verify(v, z1, g, k)) return Z1Kernel{static_cast<int>(n), k};
  }
  return std::nullopt;
}

template <bool D>
std::optional<HomotopyKernel> verify_entry(const NullStructure& s, ArrowId g, ArrowId n, HomotopyId nu) {
  SView<D> sv(s);
  auto k = verify(sv, g, n, nu, cone_counts(sv, g));
  if (k) k->strong = strong(sv, g, *k).strong;
  return k;
}

}  // namespace

ArrowId HomotopyKernel::mediator_for(ArrowId f, HomotopyId phi) const {
  KernelMediator key{f, phi, kNone};
  auto it = std::lower_bound(mediators.begin(), mediators.end(), key, mediator_less);
  if (it == mediators.end() || it->cone_arrow != f || it->cone_homotopy != phi) return kNone;
  return it->mediator;
}

std::optional<HomotopyKernel> verify_kernel(const NullStructure& s, ArrowId g, ArrowId n, HomotopyId nu) {
  return verify_entry<false>(s, g, n, nu);
}

std::optional<HomotopyCokernel> verify_cokernel(const NullStructure& s, ArrowId g, ArrowId q, HomotopyId theta) {
  return verify_entry<true>(s, g, q, theta);
}

std::optional<HomotopyKernel> search_homotopy_kernel(const NullStructure& s, ArrowId g) {
  auto r = search(SView<false>(s), g, true);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::optional<HomotopyCokernel> search_homotopy_cokernel(const NullStructure& s, ArrowId g) {
  auto r = search(SView<true>(s), g, true);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::vector<HomotopyKernel> all_homotopy_kernels(const NullStructure& s, ArrowId g) {
  return search(SView<false>(s), g, false);
}

StrongVerdict check_strong_kernel(const NullStructure& s, ArrowId g, const HomotopyKernel& k) {
  return strong(SView<false>(s), g, k);
}

StrongVerdict check_strong_cokernel(const NullStructure& s, ArrowId g, const HomotopyCokernel& q) {
  return strong(SView<true>(s), g, q);
}

PullbackStrongVerdict check_theta_strong_pullback(const NullStructure& s, ArrowId x, ArrowId y, const PullbackResult& pb) {
  PullbackStrongVerdict r;
  for (const Mediator& cone : pb.mediators) {
    for (HomotopyId phi : s.theta(cone.left))
      for (HomotopyId psi : s.theta(cone.right)) {
        if (s.left(x, phi) != s.left(y, psi)) continue;
        std::size_t lifts = 0;
        for (HomotopyId chi : s.theta(cone.mediator))
          if (s.left(pb.proj_left, chi) == phi && s.left(pb.proj_right, chi) == psi) ++lifts;
        if (lifts != 1) {
          r.strong = false;
          r.cone = cone;
          return r;
        }
      }
  }
  return r;
}

std::optional<HomotopyKernel> kernel_via_pullback(const NullStructure& s, ArrowId g,
                                                  const std::optional<HomotopyKernel>& identity_kernel) {
  const Category& c = s.base();
  std::optional<HomotopyKernel> idk = identity_kernel;
  if (!idk) idk = search_homotopy_kernel(s, c.identity(c.cod(g)));
  if (!idk) return std::nullopt;
  if (c.cod(idk->arrow) != c.cod(g)) throw Error("kernel_via_pullback: identity kernel lives over the wrong object");
  auto pb = pullback(c, idk->arrow, g);
  if (!pb) return std::nullopt;
  return verify_kernel(s, g, pb->proj_right, s.right(idk->witness, pb->proj_left));
}

std::optional<HomotopyCokernel> cokernel_via_pushout(const NullStructure& s, ArrowId g,
                                                     const std::optional<HomotopyCokernel>& identity_cokernel) {
  const Category& c = s.base();
  std::optional<HomotopyCokernel> idq = identity_cokernel;
  if (!idq) idq = search_homotopy_cokernel(s, c.identity(c.dom(g)));
  if (!idq) return std::nullopt;
  if (c.dom(idq->arrow) != c.dom(g)) throw Error("cokernel_via_pushout: identity cokernel lives over the wrong object");
  auto po = pushout(c, idq->arrow, g);
  if (!po) return std::nullopt;
  return verify_cokernel(s, g, po->proj_right, s.left(po->proj_left, idq->witness));
}

std::optional<HomotopyKernel> preradical_identity_kernel(const InducedStructure& theta_beta, const NatTrans& beta,
                                                          ObjectId x) {
  const Category& c = theta_beta.structure.base();
  ArrowId bx = beta.at(x);
  auto nu = theta_beta.find(bx, {c.identity(beta.source.obj[x])});
  if (!nu) return std::nullopt;
  return verify_kernel(theta_beta.structure, c.identity(x), bx, *nu);
}

std::optional<ArrowId> kernel_comparison(const NullStructure&, const HomotopyKernel& k1, const HomotopyKernel& k2) {
  ArrowId a = k2.mediator_for(k1.arrow, k1.witness);
  if (a == kNone) return std::nullopt;
  return a;
}

std::optional<ArrowId> cokernel_comparison(const NullStructure&, const HomotopyCokernel& q1, const HomotopyCokernel& q2) {
  ArrowId a = q1.mediator_for(q2.arrow, q2.witness);
  if (a == kNone) return std::nullopt;
  return a;
}

bool verify_z1_kernel(const Category& c, const Subset& z1, ArrowId g, ArrowId k) {
  return z1_verify(detail::View<false>{c}, z1, g, k);
}

bool verify_z1_cokernel(const Category& c, const Subset& z1, ArrowId g, ArrowId q) {
  return z1_verify(detail::View<true>{c}, z1, g, q);
}

std::optional<Z1Kernel> z1_kernel(const Category& c, const Subset& z1, ArrowId g) {
  return z1_search(detail::View<false>{c}, z1, g);
}

std::optional<Z1Cokernel> z1_cokernel(const Category& c, const Subset& z1, ArrowId g) {
  return z1_search(detail::View<true>{c}, z1, g);
}

bool orthogonal(const NullStructure& s, ObjectId t, ObjectId f) {
  for (ArrowId h : s.base().hom(t, f))
    if (s.theta(h).size() != 1) return false;
  return true;
}

bool weakly_orthogonal(const NullStructure& s, ObjectId t, ObjectId f) {
  for (ArrowId h : s.base().hom(t, f))
    if (s.theta(h).empty()) return false;
  return true;
}

namespace {

// Kernel-side facts; run on the opposite structure they give the cokernel side.
void kernel_facts(const NullStructure& s, const std::string& side, std::vector<CheckRecord>& out) {
  const Category& c = s.base();
  Subset trivial = trivial_objects(s);
  bool discrete = s.is_discrete();
  bool closed = is_closed_ideal(c, ideal_of(s));
  std::vector<std::string> cancel, split, iso1, strong_iso, triv_dom, triv_cod, disc_mono, cor_iso, cor_strong;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    ArrowId g = static_cast<int>(a);
    auto k = search_homotopy_kernel(s, g);
    if (!k) {
      continue;
    }
    const std::string& name = c.arrow_name(g);
    ObjectId n = k->object, x = c.dom(g), y = c.cod(g);
    for (std::size_t z = 0; z < c.object_count(); ++z) {
      const auto& hs = c.hom(static_cast<int>(z), n);
      for (ArrowId h : hs)
        for (ArrowId kk : hs)
          if (h != kk && c.compose_raw(k->arrow, h) == c.compose_raw(k->arrow, kk) &&
              s.right(k->witness, h) == s.right(k->witness, kk))
            cancel.push_back(name);
    }
    auto cls = classify_arrow(c, k->arrow);
    bool nonempty = !s.theta(g).empty();
    bool perp = orthogonal(s, n, y);
    if (nonempty != cls.split_epi()) split.push_back(name);
    if (nonempty && perp && !cls.iso()) iso1.push_back(name);
    if (*k->strong && c.is_iso(g) && !trivial.contains(n)) strong_iso.push_back(name);
    if (trivial.contains(x) && perp && (!cls.iso() || !trivial.contains(n))) triv_dom.push_back(name);
    if (trivial.contains(y) && perp && !cls.iso()) triv_cod.push_back(name);
    if (discrete && !cls.mono) disc_mono.push_back(name);
    if (discrete && nonempty != cls.iso()) disc_mono.push_back(name);
    if (discrete && closed) {
      if (c.is_iso(g) && !trivial.contains(n)) cor_iso.push_back(name);
      if (!*k->strong) cor_strong.push_back(name);
    }
  }
  out.push_back(make_check(side + " cancellation", "kernel-cancellation", cancel.empty(), "", cancel));
  out.push_back(make_check(side + ": carrier nonempty iff split", "kernel-split-criterion", split.empty(), "", split));
  out.push_back(make_check(side + ": nonempty and orthogonal gives iso", "kernel-split-criterion", iso1.empty(), "", iso1));
  out.push_back(make_check(side + " of an iso is trivial when strong", "strong-kernel-of-iso", strong_iso.empty(), "", strong_iso));
  out.push_back(make_check(side + " over a trivial source", "kernel-trivial-source", triv_dom.empty(), "", triv_dom));
  out.push_back(make_check(side + " into a trivial target", "kernel-trivial-target", triv_cod.empty(), "", triv_cod));
  out.push_back(make_check(side + " discrete cancellation", "discrete-kernel-mono", disc_mono.empty(), "", disc_mono));
  CheckRecord cor = make_check(side + "s discrete and closed", "discrete-closed-strong", cor_iso.empty() && cor_strong.empty(), "",
                               cor_iso);
  if (!(discrete && closed)) cor.verdict = Verdict::not_applicable;
  out.push_back(cor);
}

}  // namespace

std::vector<CheckRecord> homotopy_limit_checks(const NullStructure& s) {
  const Category& c = s.base();
  std::vector<CheckRecord> out;
  Subset trivial = trivial_objects(s);
  Subset z1 = ideal_of(s);
  out.push_back(make_check("trivial objects closed under retracts", "trivial-objects", is_retract_closed(c, trivial)));
  out.push_back(make_check("factoring through a trivial object gives a homotopy", "trivial-objects",
                           generated_ideal(c, trivial).subset_of(z1)));
  bool self = true, invariant = true;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (orthogonal(s, static_cast<int>(x), static_cast<int>(x)) && !trivial.contains(static_cast<int>(x))) self = false;
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      bool p = orthogonal(s, static_cast<int>(x), static_cast<int>(y));
      for (ObjectId x2 : c.iso_class_members(c.iso_class(static_cast<int>(x))))
        for (ObjectId y2 : c.iso_class_members(c.iso_class(static_cast<int>(y))))
          if (orthogonal(s, x2, y2) != p) invariant = false;
    }
  }
  out.push_back(make_check("self-orthogonal objects are trivial", "trivial-objects", self));
  out.push_back(make_check("orthogonality is invariant under isomorphism", "trivial-objects", invariant));
  kernel_facts(s, "kernel", out);
  kernel_facts(s.opposite(), "cokernel", out);
  return out;
}

}  // namespace fincat
