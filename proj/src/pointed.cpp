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

#include "fincat/pointed.hpp"

#include "fincat/ideal.hpp"
#include "fincat/kernel.hpp"
#include "fincat/limits.hpp"

namespace fincat {

namespace {

bool isomorphic_into(const Category& c, ArrowId k1, ArrowId k2) {
  if (c.cod(k1) != c.cod(k2)) return false;
  for (ArrowId i : c.hom(c.dom(k1), c.dom(k2)))
    if (c.is_iso(i) && c.compose_raw(k2, i) == k1) return true;
  return false;
}

bool isomorphic_from(const Category& c, ArrowId q1, ArrowId q2) {
  if (c.dom(q1) != c.dom(q2)) return false;
  for (ArrowId i : c.hom(c.cod(q1), c.cod(q2)))
    if (c.is_iso(i) && c.compose_raw(i, q1) == q2) return true;
  return false;
}

std::string first_message(const std::vector<Diagnostic>& ds) {
  return ds.empty() ? "" : ds.front().law + ": " + ds.front().message;
}

ArrowId unique_in(const Category& c, ObjectId x, ObjectId y) {
  const auto& h = c.hom(x, y);
  return h.size() == 1 ? h.front() : kNone;
}

}  // namespace

ArrowId PointedWorkspace::to_zero(ObjectId x) const { return unique_in(base(), x, zero); }

ArrowId PointedWorkspace::from_zero(ObjectId x) const { return unique_in(base(), zero, x); }

ArrowId lambda_kernel(const PointedWorkspace& w, ArrowId square) {
  const Category& a = w.base();
  const ArrWorkspace& aw = *w.arr;
  const Square& s = aw.squares[square];
  ArrowId top = w.kernel[a.compose_raw(s.y, s.g)];
  ArrowId bottom = w.kernel[s.g0];
  ArrowId around = a.compose_raw(s.x, top);
  for (ArrowId xp : a.hom(a.dom(top), a.dom(bottom)))
    if (a.compose_raw(bottom, xp) == around) return aw.square(xp, s.x, top, bottom);
  return kNone;
}

ArrowId lambda_cokernel(const PointedWorkspace& w, ArrowId square) {
  const Category& a = w.base();
  const ArrWorkspace& aw = *w.arr;
  const Square& s = aw.squares[square];
  ArrowId c = w.cokernel[s.g0];
  ArrowId obj = a.compose_raw(c, s.y);
  return aw.square(s.y, obj, a.identity(a.dom(s.y)), c);
}

PointedResult build_pointed(CategoryPtr base) {
  const Category& a = *base;
  PointedResult out;
  auto dist = find_distinguished(a);
  if (!dist.zero) {
    out.failed_hypothesis = "no zero object";
    return out;
  }
  PointedWorkspace w;
  w.zero = *dist.zero;
  w.z1_zero = Subset(a.arrow_count());
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    ArrowId g = static_cast<int>(i);
    ArrowId through = a.compose_raw(unique_in(a, w.zero, a.cod(g)), unique_in(a, a.dom(g), w.zero));
    if (through == g) w.z1_zero.insert(g);
  }
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    ArrowId g = static_cast<int>(i);
    auto k = z1_kernel(a, w.z1_zero, g);
    if (!k) {
      out.failed_hypothesis = "missing kernel of " + a.arrow_name(g);
      return out;
    }
    auto q = z1_cokernel(a, w.z1_zero, g);
    if (!q) {
      out.failed_hypothesis = "missing cokernel of " + a.arrow_name(g);
      return out;
    }
    w.kernel.push_back(k->arrow);
    w.cokernel.push_back(q->arrow);
  }

  w.arr = std::make_shared<const ArrWorkspace>(build_arr(base));
  const ArrWorkspace& aw = *w.arr;
  const Category& arr = *aw.arr;

  w.lambda = Functor{"Lambda", base, aw.arr, {}, {}};
  for (std::size_t x = 0; x < a.object_count(); ++x) w.lambda.obj.push_back(w.to_zero(static_cast<int>(x)));
  for (std::size_t f = 0; f < a.arrow_count(); ++f) {
    ArrowId fi = static_cast<int>(f);
    w.lambda.arr.push_back(aw.square(w.to_zero(a.dom(fi)), w.to_zero(a.cod(fi)), fi, a.identity(w.zero)));
  }
  w.ker = Functor{"Ker", aw.arr, base, {}, {}};
  for (std::size_t x = 0; x < a.arrow_count(); ++x) w.ker.obj.push_back(a.dom(w.kernel[x]));
  for (const Square& s : aw.squares) {
    ArrowId kx = w.kernel[s.x], ky = w.kernel[s.y];
    ArrowId target = a.compose_raw(s.g, kx);
    ArrowId m = kNone;
    for (ArrowId c : a.hom(a.dom(kx), a.dom(ky)))
      if (a.compose_raw(ky, c) == target) m = c;
    w.ker.arr.push_back(m);
  }

  const Functor& d = aw.D();
  Functor id_arr = identity_functor(aw.arr);
  Functor id_a = identity_functor(base);
  NatTrans gamma{"gamma", id_arr, compose(w.lambda, d), {}};
  NatTrans beta{"beta", compose(w.lambda, w.ker), id_arr, {}};
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    ArrowId xi = static_cast<int>(x);
    gamma.component.push_back(
        aw.square(xi, w.to_zero(a.dom(xi)), a.identity(a.dom(xi)), w.to_zero(a.cod(xi))));
    ArrowId ky = w.kernel[xi];
    beta.component.push_back(aw.square(w.to_zero(a.dom(ky)), xi, ky, w.from_zero(a.cod(xi))));
  }
  NatTrans counit{"identity", compose(d, w.lambda), id_a, {}};
  NatTrans alpha{"alpha", id_a, compose(w.ker, w.lambda), {}};
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    ObjectId xo = static_cast<int>(x);
    counit.component.push_back(a.identity(xo));
    alpha.component.push_back(a.inverse(w.kernel[w.to_zero(xo)]));
  }
  w.d_lambda = Adjunction{"D -| Lambda", d, w.lambda, gamma, counit};
  w.lambda_ker = Adjunction{"Lambda -| Ker", w.lambda, w.ker, alpha, beta};
  auto d1 = verify_adjunction(w.d_lambda);
  auto d2 = verify_adjunction(w.lambda_ker);
  w.checks.push_back(make_check("D -| Lambda is an adjunction", "pointed-string", d1.empty(), first_message(d1)));
  w.checks.push_back(make_check("Lambda -| Ker is an adjunction", "pointed-string", d2.empty(), first_message(d2)));
  if (!d1.empty() || !d2.empty()) {
    out.workspace = std::move(w);
    return out;
  }

  w.theta_lambda.emplace(induce_from_precoradical(gamma, "lambda(" + a.name() + ")"));
  w.z1_lambda = ideal_of(w.theta_lambda->structure);
  Subset expected(arr.arrow_count());
  for (std::size_t i = 0; i < aw.squares.size(); ++i)
    if (w.z1_zero.contains(aw.squares[i].g0)) expected.insert(static_cast<int>(i));
  w.checks.push_back(make_check("induced ideal is the squares with zero bottom", "lambda-ideal",
                                w.z1_lambda == expected));
  w.checks.push_back(make_check("induced structure is discrete with closed ideal", "lambda-ideal",
                                w.theta_lambda->structure.is_discrete() && is_closed_ideal(arr, w.z1_lambda)));

  std::vector<std::string> bad_k, bad_q;
  for (std::size_t i = 0; i < arr.arrow_count(); ++i) {
    ArrowId s = static_cast<int>(i);
    ArrowId k = lambda_kernel(w, s);
    auto ks = z1_kernel(arr, w.z1_lambda, s);
    if (k == kNone || !verify_z1_kernel(arr, w.z1_lambda, s, k) || !ks || !isomorphic_into(arr, k, ks->arrow))
      bad_k.push_back(arr.arrow_name(s));
    ArrowId q = lambda_cokernel(w, s);
    auto qs = z1_cokernel(arr, w.z1_lambda, s);
    if (q == kNone || !verify_z1_cokernel(arr, w.z1_lambda, s, q) || !qs || !isomorphic_from(arr, q, qs->arrow))
      bad_q.push_back(arr.arrow_name(s));
  }
  w.checks.push_back(make_check("kernel formula matches the searched kernel", "lambda-kernel-formula", bad_k.empty(),
                                count_of(arr.arrow_count(), "square", "squares"), bad_k));
  w.checks.push_back(make_check("cokernel formula matches the searched cokernel", "lambda-cokernel-formula",
                                bad_q.empty(), count_of(arr.arrow_count(), "square", "squares"), bad_q));
  out.workspace = std::move(w);
  return out;
}

bool induced_by_base(const PointedWorkspace& w, const TorsionPair& p) {
  const Category& a = w.base();
  for (int x : p.torsion.members())
    for (int y : p.free.members())
      for (ArrowId h : a.hom(a.cod(x), a.cod(y)))
        if (!w.z1_zero.contains(h)) return false;
  return true;
}

LiftedTheory lift_pointed_tt(const PointedWorkspace& w, const TorsionPair& base_pair) {
  const Category& a = w.base();
  auto bv = check_z1_torsion_theory(a, w.z1_zero, base_pair);
  if (!bv.z1_tt) throw Error("pair " + base_pair.name + " is not a torsion theory for the zero arrows: " + bv.failure);
  LiftedTheory r;
  r.pair.name = base_pair.name + "_lambda";
  r.pair.torsion = Subset(a.arrow_count());
  r.pair.free = Subset(a.arrow_count());
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    ArrowId x = static_cast<int>(i);
    if (base_pair.torsion.contains(a.cod(x))) r.pair.torsion.insert(x);
    if (base_pair.free.contains(a.cod(x))) r.pair.free.insert(x);
  }
  r.verdict = check_z1_torsion_theory(w.arrows(), w.z1_lambda, r.pair);
  r.induced = induced_by_base(w, r.pair);
  return r;
}

}  // namespace fincat
