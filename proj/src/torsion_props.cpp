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
#include "fincat/torsion.hpp"

namespace fincat {

namespace {

CheckRecord na(std::string name, std::string anchor, std::string detail) {
  return {std::move(name), std::move(anchor), Verdict::not_applicable, std::move(detail), {}};
}

bool isomorphic_arrows_into(const Category& c, ArrowId k1, ArrowId k2) {
  if (c.cod(k1) != c.cod(k2)) return false;
  for (ArrowId i : c.hom(c.dom(k1), c.dom(k2)))
    if (c.is_iso(i) && c.compose_raw(k2, i) == k1) return true;
  return false;
}

bool isomorphic_arrows_from(const Category& c, ArrowId q1, ArrowId q2) {
  if (c.dom(q1) != c.dom(q2)) return false;
  for (ArrowId i : c.hom(c.cod(q1), c.cod(q2)))
    if (c.is_iso(i) && c.compose_raw(i, q1) == q2) return true;
  return false;
}

}  // namespace

std::vector<CheckRecord> torsion_theory_checks(const NullStructure& s, const TorsionPair& p, const TTVerdict& v) {
  std::vector<CheckRecord> out;
  const Category& c = s.base();
  if (v.level != TTLevel::strict) {
    out.push_back(na("torsion theory properties", "homotopy-torsion-theory", "the pair is not a strict torsion theory"));
    return out;
  }
  std::size_t n = c.object_count();
  Subset trivial = trivial_objects(s);

  {
    std::vector<std::string> bad;
    for (std::size_t x = 0; x < n; ++x) {
      const auto& ps = v.presentations[x];
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (!presentations_isomorphic(c, ps[i], ps[j])) bad.push_back(c.object_name(static_cast<int>(x)));
    }
    out.push_back(make_check("exact presentations are essentially unique", "presentation-unique", bad.empty(), "", bad));
  }

  {
    std::vector<std::string> bad_f, bad_t;
    for (std::size_t xi = 0; xi < n; ++xi) {
      ObjectId x = static_cast<int>(xi);
      bool free_d = true, tors_d = true;
      for (int t : p.torsion.members())
        if (!orthogonal(s, t, x)) free_d = false;
      for (int f : p.free.members())
        if (!orthogonal(s, x, f)) tors_d = false;
      for (const auto& e : v.presentations[xi]) {
        bool a = p.free.contains(x), b = c.is_iso(e.f_arrow), cc = !s.theta(e.t_arrow).empty();
        if (!(a == b && b == cc && cc == free_d)) bad_f.push_back(c.object_name(x));
        bool ta = p.torsion.contains(x), tb = c.is_iso(e.t_arrow), tc = !s.theta(e.f_arrow).empty();
        if (!(ta == tb && tb == tc && tc == tors_d)) bad_t.push_back(c.object_name(x));
      }
    }
    out.push_back(make_check("membership in F: four equivalent conditions", "free-characterization", bad_f.empty(), "",
                             bad_f));
    out.push_back(make_check("membership in T: four equivalent conditions", "torsion-characterization", bad_t.empty(),
                             "", bad_t));
  }

  {
    bool closed = is_closed_ideal(c, ideal_of(s));
    std::vector<std::string> direct, by_strong, by_closed;
    std::size_t strong_cases = 0, cos_strong_cases = 0;
    std::vector<std::string> dual_direct, dual_strong, dual_closed;
    for (std::size_t xi = 0; xi < n; ++xi) {
      ObjectId x = static_cast<int>(xi);
      const auto& e = v.presentations[xi].front();
      bool t_triv = trivial.contains(e.t_object), f_triv = trivial.contains(e.f_object);
      if (t_triv && !p.free.contains(x)) direct.push_back(c.object_name(x));
      if (f_triv && !p.torsion.contains(x)) dual_direct.push_back(c.object_name(x));
      auto k = verify_kernel(s, e.f_arrow, e.t_arrow, e.witness);
      auto q = verify_cokernel(s, e.t_arrow, e.f_arrow, e.witness);
      bool k_strong = k && check_strong_kernel(s, e.f_arrow, *k).strong;
      bool q_strong = q && check_strong_cokernel(s, e.t_arrow, *q).strong;
      if (p.free.contains(x)) {
        if (k_strong) {
          ++strong_cases;
          if (!t_triv) by_strong.push_back(c.object_name(x));
        }
        if (closed && !t_triv) by_closed.push_back(c.object_name(x));
      }
      if (p.torsion.contains(x)) {
        if (q_strong) {
          ++cos_strong_cases;
          if (!f_triv) dual_strong.push_back(c.object_name(x));
        }
        if (closed && !f_triv) dual_closed.push_back(c.object_name(x));
      }
    }
    out.push_back(make_check("trivial T(X) implies X in F", "trivial-torsion-part", direct.empty(), "", direct));
    out.push_back(make_check("trivial F(X) implies X in T", "trivial-free-part", dual_direct.empty(), "", dual_direct));
    if (strong_cases)
      out.push_back(make_check("X in F with strong kernel has trivial T(X)", "trivial-torsion-part", by_strong.empty(),
                               "", by_strong));
    else
      out.push_back(na("X in F with strong kernel has trivial T(X)", "trivial-torsion-part", "no strong kernel case"));
    if (cos_strong_cases)
      out.push_back(make_check("X in T with strong cokernel has trivial F(X)", "trivial-free-part", dual_strong.empty(),
                               "", dual_strong));
    else
      out.push_back(na("X in T with strong cokernel has trivial F(X)", "trivial-free-part", "no strong cokernel case"));
    if (closed) {
      out.push_back(make_check("closed ideal: X in F has trivial T(X)", "trivial-torsion-part", by_closed.empty(), "",
                               by_closed));
      out.push_back(make_check("closed ideal: X in T has trivial F(X)", "trivial-free-part", dual_closed.empty(), "",
                               dual_closed));
    } else {
      out.push_back(na("closed ideal: X in F has trivial T(X)", "trivial-torsion-part", "ideal not closed"));
      out.push_back(na("closed ideal: X in T has trivial F(X)", "trivial-free-part", "ideal not closed"));
    }
  }

  out.push_back(make_check("T and F are closed under retracts", "retract-closed",
                           is_retract_closed(c, p.torsion) && is_retract_closed(c, p.free)));

  {
    Subset both = p.torsion & p.free;
    bool singletons = true;
    for (int x : both.members())
      if (s.theta(c.identity(x)).size() != 1) singletons = false;
    out.push_back(make_check("T n F is the set of trivial objects", "trivial-objects-intersection",
                             both == trivial && singletons, describe(c, both) + " vs " + describe(c, trivial)));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t xi = 0; xi < n; ++xi) {
      ObjectId x = static_cast<int>(xi);
      const auto& ps = v.presentations[xi];
      auto has = [&](auto pred) {
        for (const auto& e : ps)
          if (pred(e)) return true;
        return false;
      };
      if (p.free.contains(x) && !has([&](const ExactPresentation& e) { return e.f_arrow == c.identity(x); }))
        bad.push_back(c.object_name(x));
      if (p.torsion.contains(x) && !has([&](const ExactPresentation& e) { return e.t_arrow == c.identity(x); }))
        bad.push_back(c.object_name(x));
      if (trivial.contains(x) &&
          !has([&](const ExactPresentation& e) { return c.is_iso(e.t_arrow) && c.is_iso(e.f_arrow); }))
        bad.push_back(c.object_name(x));
    }
    out.push_back(make_check("identity presentations of objects of T and F", "special-presentation", bad.empty(), "",
                             bad));
  }

  {
    auto r = verify_reflection(s, p, v);
    out.push_back(make_check("T coreflective and F reflective", "reflective-coreflective", r.ok(),
                             r.diagnostics.empty() ? "" : r.diagnostics.front().law + ": " + r.diagnostics.front().message));
  }
  return out;
}

std::vector<CheckRecord> discrete_bridge_checks(const NullStructure& s, const std::vector<TorsionPair>& pairs) {
  std::vector<CheckRecord> out;
  if (!s.is_discrete()) {
    out.push_back(na("discrete bridge", "discrete-kernels-coincide", "structure is not discrete"));
    return out;
  }
  const Category& c = s.base();
  Subset z1 = ideal_of(s);
  std::vector<std::string> bad_k, bad_q;
  for (std::size_t gi = 0; gi < c.arrow_count(); ++gi) {
    ArrowId g = static_cast<int>(gi);
    auto hk = search_homotopy_kernel(s, g);
    auto zk = z1_kernel(c, z1, g);
    if (hk.has_value() != zk.has_value() || (hk && !isomorphic_arrows_into(c, hk->arrow, zk->arrow)))
      bad_k.push_back(c.arrow_name(g));
    auto hq = search_homotopy_cokernel(s, g);
    auto zq = z1_cokernel(c, z1, g);
    if (hq.has_value() != zq.has_value() || (hq && !isomorphic_arrows_from(c, hq->arrow, zq->arrow)))
      bad_q.push_back(c.arrow_name(g));
  }
  out.push_back(make_check("homotopy kernels are ideal kernels", "discrete-kernels-coincide", bad_k.empty(), "", bad_k));
  out.push_back(
      make_check("homotopy cokernels are ideal cokernels", "discrete-kernels-coincide", bad_q.empty(), "", bad_q));

  std::vector<std::string> bad_v, bad_pre;
  std::size_t closed_cases = 0;
  for (const auto& p : pairs) {
    auto hv = check_torsion_theory(s, p);
    auto zv = check_z1_torsion_theory(c, z1, p);
    if ((hv.level == TTLevel::strict) != zv.z1_tt) bad_v.push_back(p.name);
    if (zv.pretorsion) {
      ++closed_cases;
      if (!*zv.pretorsion) bad_pre.push_back(p.name);
    }
  }
  out.push_back(make_check("torsion verdicts coincide with ideal verdicts", "discrete-verdicts-coincide",
                           bad_v.empty(), count_of(pairs.size(), "pair", "pairs"), bad_v));
  if (closed_cases)
    out.push_back(make_check("ideal torsion theories are pretorsion theories", "pretorsion-identification",
                             bad_pre.empty(), count_of(closed_cases, "theory", "theories"), bad_pre));
  else
    out.push_back(na("ideal torsion theories are pretorsion theories", "pretorsion-identification",
                     "no theory over a closed ideal"));
  return out;
}

}  // namespace fincat
