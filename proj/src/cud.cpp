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

#include "fincat/cud.hpp"

#include "fincat/ideal.hpp"

namespace fincat {

namespace {

std::string first(const std::vector<Diagnostic>& d) { return d.empty() ? std::string() : d.front().law + ": " + d.front().message; }

CheckRecord morphism_check(const std::string& name, const InducedStructure& src, const InducedStructure& dst,
                           const StructureMorphism& m) {
  auto d = verify_morphism(src.structure, dst.structure, m);
  return make_check(name, "structure-morphism", d.empty(), first(d));
}

bool all_singletons(const NullStructure& s) {
  for (std::size_t g = 0; g < s.base().arrow_count(); ++g)
    if (s.theta(static_cast<int>(g)).size() != 1) return false;
  return true;
}

}  // namespace

std::vector<Diagnostic> verify_string(const PrepointedString& s) {
  std::vector<Diagnostic> out = verify_adjunction(s.cu);
  auto more = verify_adjunction(s.ud);
  out.insert(out.end(), more.begin(), more.end());
  if (!out.empty()) return out;
  if (!same_functor(s.cu.right, s.ud.left))
    out.push_back({"string typing", "the right adjoint of the first adjunction must be the left adjoint of the second", {}});
  else if (!is_full_and_faithful(s.u()))
    out.push_back({"string typing", "the middle functor is not full and faithful", {}});
  return out;
}

CudReport cud_compare(const PrepointedString& s) {
  CudReport r;
  auto diag = verify_string(s);
  r.checks.push_back(make_check("adjunction string", "adjunction-string", diag.empty(), first(diag)));
  if (!diag.empty()) return r;

  const Functor& U = s.u();
  const Category& b = *U.dst;
  const Category& a = *U.src;
  Functor R = compose(U, s.d());
  Functor S = compose(U, s.c());
  NatTrans beta = s.beta();
  NatTrans gamma = s.gamma();

  r.theta_beta = induce_from_preradical(beta, "theta_beta");
  r.theta_gamma = induce_from_precoradical(gamma, "theta_gamma");
  r.theta_gamma_beta = induce_from_pair(gamma, beta, "theta_gamma_beta");
  r.theta_a = induce_from_subcategory(U, "theta_A");
  const auto& tb = *r.theta_beta;
  const auto& tg = *r.theta_gamma;
  const auto& tgb = *r.theta_gamma_beta;
  const auto& ta = *r.theta_a;

  auto map_of = [](const InducedStructure& src, auto fn) {
    StructureMorphism m(src.structure.homotopy_count(), kNone);
    for (std::size_t p = 0; p < m.size(); ++p) m[p] = fn(src.structure.carrier(static_cast<int>(p)), src.witness[p]);
    return m;
  };
  auto look = [](const InducedStructure& dst, ArrowId g, std::vector<int> w) {
    auto h = dst.find(g, w);
    return h ? *h : kNone;
  };

  r.gb_to_g = map_of(tgb, [&](ArrowId g, const std::vector<int>& w) {
    return look(tg, g, {b.compose_raw(beta.at(b.cod(g)), w[0])});
  });
  r.g_to_gb = map_of(tg, [&](ArrowId g, const std::vector<int>& w) {
    ObjectId cx = s.c().obj[b.dom(g)];
    return look(tgb, g, {b.compose_raw(R.arr[w[0]], U.arr[s.alpha().at(cx)])});
  });
  r.gb_to_b = map_of(tgb, [&](ArrowId g, const std::vector<int>& w) {
    return look(tb, g, {b.compose_raw(w[0], gamma.at(b.dom(g)))});
  });
  r.b_to_gb = map_of(tb, [&](ArrowId g, const std::vector<int>& w) {
    ObjectId dy = s.d().obj[b.cod(g)];
    return look(tgb, g, {b.compose_raw(U.arr[s.delta().at(dy)], S.arr[w[0]])});
  });
  r.g_to_a = map_of(tg, [&](ArrowId g, const std::vector<int>& w) {
    ObjectId x = b.dom(g);
    return look(ta, g, {gamma.at(x), s.c().obj[x], w[0]});
  });
  bool transpose_ok = true;
  r.a_to_g = map_of(ta, [&](ArrowId g, const std::vector<int>& w) {
    ObjectId x = b.dom(g);
    ArrowId g1 = w[0], g2 = w[2];
    ArrowId t = U.arr[a.compose_raw(s.delta().at(w[1]), s.c().arr[g1])];
    if (b.compose_raw(t, gamma.at(x)) != g1) transpose_ok = false;
    return look(tg, g, {b.compose_raw(g2, t)});
  });

  r.checks.push_back(morphism_check("theta_gamma_beta -> theta_gamma", tgb, tg, r.gb_to_g));
  r.checks.push_back(morphism_check("theta_gamma -> theta_gamma_beta", tg, tgb, r.g_to_gb));
  r.checks.push_back(morphism_check("theta_gamma_beta -> theta_beta", tgb, tb, r.gb_to_b));
  r.checks.push_back(morphism_check("theta_beta -> theta_gamma_beta", tb, tgb, r.b_to_gb));
  {
    auto d = verify_morphism(tg.structure, ta.structure, r.g_to_a);
    r.checks.push_back(make_check("section theta_gamma -> theta_A is a structure morphism",
                                  "retract-onto-subcategory-structure", d.empty(), first(d)));
  }
  r.checks.push_back(make_check("adjoint transpose", "retract-onto-subcategory-structure", transpose_ok,
                                transpose_ok ? "" : "transposed arrow does not factor the first leg"));
  {
    auto d = verify_morphism(ta.structure, tg.structure, r.a_to_g);
    r.checks.push_back(make_check("retraction theta_A -> theta_gamma is a structure morphism",
                                  "retract-onto-subcategory-structure", d.empty(), first(d)));
  }

  bool typed = true;
  for (const auto* m : {&r.gb_to_g, &r.g_to_gb, &r.gb_to_b, &r.b_to_gb, &r.g_to_a, &r.a_to_g})
    for (HomotopyId h : *m)
      if (h == kNone) typed = false;
  if (typed) {
    r.checks.push_back(make_check("gamma_beta and gamma mutually inverse", "three-structures-isomorphic",
                                  is_identity(compose(r.g_to_gb, r.gb_to_g)) && is_identity(compose(r.gb_to_g, r.g_to_gb))));
    r.checks.push_back(make_check("gamma_beta and beta mutually inverse", "three-structures-isomorphic",
                                  is_identity(compose(r.b_to_gb, r.gb_to_b)) && is_identity(compose(r.gb_to_b, r.b_to_gb))));
    r.checks.push_back(make_check("retraction after section is the identity on every fibre", "retract-onto-subcategory-structure",
                                  is_identity(compose(r.a_to_g, r.g_to_a))));
  }

  Subset zb = ideal_of(tb.structure), zg = ideal_of(tg.structure), zgb = ideal_of(tgb.structure),
         za = ideal_of(ta.structure);
  r.checks.push_back(make_check("four ideals coincide", "four-ideals-equal", zb == zg && zg == zgb && zgb == za));

  auto on_a_delta = induce_from_preradical(s.delta(), "theta_delta");
  auto on_a_alpha = induce_from_precoradical(s.alpha(), "theta_alpha");
  r.checks.push_back(make_check("structures induced on A are terminal", "induced-on-subcategory-terminal",
                                all_singletons(on_a_delta.structure) && all_singletons(on_a_alpha.structure)));
  return r;
}

}  // namespace fincat
