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

#include "fincat/arrow_category.hpp"

#include <map>
#include <memory>

#include "fincat/caps.hpp"
#include "fincat/ideal.hpp"

namespace fincat {

namespace {

struct HData {
  CategoryPtr base;
  CategoryPtr arr;
  std::vector<Square> squares;
  std::vector<std::size_t> pair_offset;
  std::vector<ArrowId> square_table;
  std::vector<ArrowId> carriers;
  std::vector<ArrowId> lambda;
  std::unordered_map<std::uint64_t, HomotopyId> index;

  ArrowId square(ArrowId x, ArrowId y, ArrowId g, ArrowId g0) const {
    const Category& a = *base;
    std::size_t m = a.arrow_count();
    std::size_t w = a.hom(a.cod(x), a.cod(y)).size();
    return square_table[pair_offset[x * m + y] + a.hom_index(g) * w + a.hom_index(g0)];
  }
  HomotopyId lookup(ArrowId sq, ArrowId l) const {
    auto it = index.find(static_cast<std::uint64_t>(sq) * (base->arrow_count() + 1) + static_cast<std::uint64_t>(l));
    return it == index.end() ? kNone : it->second;
  }
};

class HAction : public WhiskerAction {
 public:
  explicit HAction(std::shared_ptr<const HData> d) : d_(std::move(d)) {}

  HomotopyId left(ArrowId h, HomotopyId phi) const override {
    const Category& arr = *d_->arr;
    const Square& s = d_->squares[h];
    ArrowId carrier = d_->carriers[phi];
    if (arr.dom(h) != arr.cod(carrier)) return kNone;
    return d_->lookup(arr.compose_raw(h, carrier), d_->base->compose_raw(s.g, d_->lambda[phi]));
  }

  HomotopyId right(HomotopyId phi, ArrowId f) const override {
    const Category& arr = *d_->arr;
    const Square& s = d_->squares[f];
    ArrowId carrier = d_->carriers[phi];
    if (arr.cod(f) != arr.dom(carrier)) return kNone;
    return d_->lookup(arr.compose_raw(carrier, f), d_->base->compose_raw(d_->lambda[phi], s.g0));
  }

 private:
  std::shared_ptr<const HData> d_;
};

std::string compact(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != '_') out += ch;
  return out;
}

void require(const std::vector<Diagnostic>& d, const std::string& what) {
  if (!d.empty()) throw Error(what + ": " + d.front().law + ": " + d.front().message);
}

}  // namespace

ArrowId ArrWorkspace::square(ArrowId x, ArrowId y, ArrowId g, ArrowId g0) const {
  const Category& a = *base;
  if (a.dom(g) != a.dom(x) || a.cod(g) != a.dom(y) || a.dom(g0) != a.cod(x) || a.cod(g0) != a.cod(y)) return kNone;
  std::size_t m = a.arrow_count();
  std::size_t w = a.hom(a.cod(x), a.cod(y)).size();
  return square_table[pair_offset[x * m + y] + a.hom_index(g) * w + a.hom_index(g0)];
}

HomotopyId ArrWorkspace::h_homotopy(ArrowId sq, ArrowId lambda) const {
  auto it = h_index.find(static_cast<std::uint64_t>(sq) * (base->arrow_count() + 1) + static_cast<std::uint64_t>(lambda));
  return it == h_index.end() ? kNone : it->second;
}

ArrWorkspace build_arr(CategoryPtr base) { return build_arr(base, caps().arr_base_arrows); }

ArrWorkspace build_arr(CategoryPtr base, long long cap) {
  const Category& a = *base;
  require_cap("arr", cap, static_cast<long long>(a.arrow_count()));
  std::size_t m = a.arrow_count();

  auto d = std::make_shared<HData>();
  d->base = base;
  d->pair_offset.assign(m * m + 1, 0);
  std::size_t total = 0;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      d->pair_offset[x * m + y] = total;
      total += a.hom(a.dom(static_cast<int>(x)), a.dom(static_cast<int>(y))).size() *
               a.hom(a.cod(static_cast<int>(x)), a.cod(static_cast<int>(y))).size();
    }
  d->pair_offset[m * m] = total;
  d->square_table.assign(total, kNone);

  for (std::size_t xi = 0; xi < m; ++xi)
    for (std::size_t yi = 0; yi < m; ++yi) {
      ArrowId x = static_cast<int>(xi), y = static_cast<int>(yi);
      const auto& hs = a.hom(a.dom(x), a.dom(y));
      const auto& h0s = a.hom(a.cod(x), a.cod(y));
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = 0; j < h0s.size(); ++j)
          if (a.compose_raw(y, hs[i]) == a.compose_raw(h0s[j], x)) {
            d->square_table[d->pair_offset[xi * m + yi] + i * h0s.size() + j] = static_cast<int>(d->squares.size());
            d->squares.push_back({x, y, hs[i], h0s[j]});
          }
    }

  std::vector<std::string> names;
  std::map<std::string, int> uses;
  for (const auto& s : d->squares) {
    names.push_back("sq_" + compact(a.arrow_name(s.g)) + "_" + compact(a.arrow_name(s.g0)));
    ++uses[names.back()];
  }
  std::map<std::string, int> uses2;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& s = d->squares[i];
    if (uses[names[i]] > 1)
      names[i] += "_" + compact(a.arrow_name(s.x)) + "_" + compact(a.arrow_name(s.y));
    ++uses2[names[i]];
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (uses2[names[i]] > 1) names[i] += "_" + std::to_string(i);

  Category::Builder b("arr(" + a.name() + ")");
  for (std::size_t x = 0; x < m; ++x) b.add_object(a.arrow_name(static_cast<int>(x)), false);
  for (std::size_t i = 0; i < d->squares.size(); ++i) b.add_arrow(names[i], d->squares[i].x, d->squares[i].y);
  for (std::size_t x = 0; x < m; ++x) {
    ArrowId xi = static_cast<int>(x);
    b.set_identity(xi, d->square(xi, xi, a.identity(a.dom(xi)), a.identity(a.cod(xi))));
  }
  const HData* raw = d.get();
  b.set_composition([raw](ArrowId t, ArrowId s) {
    const Square& p = raw->squares[s];
    const Square& q = raw->squares[t];
    const Category& c = *raw->base;
    return raw->square(p.x, q.y, c.compose_raw(q.g, p.g), c.compose_raw(q.g0, p.g0));
  });
  d->arr = std::make_shared<const Category>(b.build());

  ArrWorkspace w;
  w.base = base;
  w.arr = d->arr;
  w.squares = d->squares;
  w.pair_offset = d->pair_offset;
  w.square_table = d->square_table;

  Functor D{"D", d->arr, base, {}, {}};
  Functor C{"C", d->arr, base, {}, {}};
  for (std::size_t x = 0; x < m; ++x) {
    D.obj.push_back(a.dom(static_cast<int>(x)));
    C.obj.push_back(a.cod(static_cast<int>(x)));
  }
  for (const auto& s : d->squares) {
    D.arr.push_back(s.g);
    C.arr.push_back(s.g0);
  }
  Functor U{"U", base, d->arr, {}, {}};
  for (std::size_t x = 0; x < a.object_count(); ++x) U.obj.push_back(a.identity(static_cast<int>(x)));
  for (std::size_t f = 0; f < m; ++f) {
    ArrowId fi = static_cast<int>(f);
    U.arr.push_back(d->square(a.identity(a.dom(fi)), a.identity(a.cod(fi)), fi, fi));
  }

  Functor id_arr = identity_functor(d->arr);
  Functor id_a = identity_functor(base);
  NatTrans gamma{"gamma", id_arr, compose(U, C), {}};
  NatTrans beta{"beta", compose(U, D), id_arr, {}};
  for (std::size_t x = 0; x < m; ++x) {
    ArrowId xi = static_cast<int>(x);
    ObjectId x0 = a.cod(xi), x1 = a.dom(xi);
    gamma.component.push_back(d->square(xi, a.identity(x0), xi, a.identity(x0)));
    beta.component.push_back(d->square(a.identity(x1), xi, a.identity(x1), xi));
  }
  NatTrans delta{"delta", compose(C, U), id_a, {}};
  NatTrans alpha{"alpha", id_a, compose(D, U), {}};
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    delta.component.push_back(a.identity(static_cast<int>(x)));
    alpha.component.push_back(a.identity(static_cast<int>(x)));
  }
  w.string.cu = Adjunction{"C -| U", C, U, gamma, delta};
  w.string.ud = Adjunction{"U -| D", U, D, alpha, beta};
  require(verify_string(w.string), "arrow category string");

  std::vector<ArrowId>& carriers = d->carriers;
  std::vector<std::string> labels;
  for (std::size_t sq = 0; sq < d->squares.size(); ++sq) {
    const Square& s = d->squares[sq];
    for (ArrowId l : a.hom(a.cod(s.x), a.dom(s.y)))
      if (a.compose_raw(l, s.x) == s.g && a.compose_raw(s.y, l) == s.g0) {
        d->index.emplace(static_cast<std::uint64_t>(sq) * (m + 1) + static_cast<std::uint64_t>(l),
                         static_cast<int>(carriers.size()));
        carriers.push_back(static_cast<int>(sq));
        labels.push_back(a.arrow_name(l));
        d->lambda.push_back(l);
      }
  }
  w.h_index = d->index;
  w.h.emplace(d->arr, "h(" + a.name() + ")", carriers, std::move(labels), std::make_shared<HAction>(d));
  if (validation_work(*w.h) <= induced_validation_budget) {
    auto diag = validate_structure(*w.h);
    require(diag, "h(" + a.name() + ")");
    w.h_laws_checked = true;
  }
  w.z1 = ideal_of(*w.h);
  return w;
}

std::optional<HomotopyKernel> h_kernel_direct(const ArrWorkspace& w, ArrowId sq) {
  const Category& a = *w.base;
  const Square& s = w.squares.at(sq);
  auto pb = pullback(a, s.g0, s.y);
  if (!pb) return std::nullopt;
  ArrowId obj = pb->mediator_for(s.x, s.g);
  if (obj == kNone) return std::nullopt;
  ArrowId n = w.square(obj, s.x, a.identity(a.dom(s.x)), pb->proj_left);
  if (n == kNone) return std::nullopt;
  HomotopyId nu = w.h_homotopy(w.arr->compose_raw(sq, n), pb->proj_right);
  if (nu == kNone) return std::nullopt;
  auto k = verify_kernel(w.H(), sq, n, nu);
  if (k) k->strong = check_strong_kernel(w.H(), sq, *k).strong;
  return k;
}

std::optional<HomotopyCokernel> h_cokernel_direct(const ArrWorkspace& w, ArrowId sq) {
  const Category& a = *w.base;
  const Square& s = w.squares.at(sq);
  auto po = pushout(a, s.x, s.g);
  if (!po) return std::nullopt;
  ArrowId obj = po->mediator_for(s.g0, s.y);
  if (obj == kNone) return std::nullopt;
  ArrowId q = w.square(s.y, obj, po->proj_right, a.identity(a.cod(s.y)));
  if (q == kNone) return std::nullopt;
  HomotopyId theta = w.h_homotopy(w.arr->compose_raw(q, sq), po->proj_left);
  if (theta == kNone) return std::nullopt;
  auto c = verify_cokernel(w.H(), sq, q, theta);
  if (c) c->strong = check_strong_cokernel(w.H(), sq, *c).strong;
  return c;
}

ExtensionRecord canonical_extension(const ArrWorkspace& w, ArrowId g, ArrowId h) {
  const Category& a = *w.base;
  if (a.cod(g) != a.dom(h)) throw Error("extension: " + a.arrow_name(h) + " does not follow " + a.arrow_name(g));
  ArrowId hg = a.compose_raw(h, g);
  ExtensionRecord r{g, hg, h, kNone, kNone, kNone};
  r.kernel_arrow = w.square(g, hg, a.identity(a.dom(g)), h);
  r.cokernel_arrow = w.square(hg, h, g, a.identity(a.cod(h)));
  r.witness = w.h_homotopy(w.arr->compose_raw(r.cokernel_arrow, r.kernel_arrow), a.identity(a.cod(g)));
  if (r.witness == kNone) return r;
  r.kernel_ok = verify_kernel(w.H(), r.cokernel_arrow, r.kernel_arrow, r.witness).has_value();
  r.cokernel_ok = verify_cokernel(w.H(), r.kernel_arrow, r.cokernel_arrow, r.witness).has_value();
  return r;
}

CheckRecord h_matches_pair_structure(const ArrWorkspace& w) {
  auto pair = induce_from_pair(w.string.gamma(), w.string.beta(), "theta_gamma_beta");
  const NullStructure& h = w.H();
  if (pair.structure.homotopy_count() != h.homotopy_count())
    return make_check("H(A) is the pair-induced structure", "three-structures-isomorphic", false,
                      "homotopy counts differ");
  StructureMorphism to(h.homotopy_count(), kNone);
  StructureMorphism from(h.homotopy_count(), kNone);
  std::vector<ArrowId> lambda(h.homotopy_count(), kNone);
  for (const auto& [key, phi] : w.h_index) lambda[phi] = static_cast<int>(key % (w.base->arrow_count() + 1));
  for (std::size_t p = 0; p < to.size(); ++p) {
    auto q = pair.find(h.carrier(static_cast<int>(p)), {w.U().arr[lambda[p]]});
    if (!q) return make_check("H(A) is the pair-induced structure", "three-structures-isomorphic", false,
                              "no pair homotopy for " + h.label(static_cast<int>(p)));
    to[p] = *q;
    from[*q] = static_cast<int>(p);
  }
  auto d1 = verify_morphism(h, pair.structure, to);
  auto d2 = verify_morphism(pair.structure, h, from);
  bool ok = d1.empty() && d2.empty() && is_identity(compose(from, to)) && is_identity(compose(to, from));
  return make_check("H(A) is the pair-induced structure", "three-structures-isomorphic", ok,
                    ok ? "" : (d1.empty() ? (d2.empty() ? "maps are not inverse" : d2.front().message) : d1.front().message));
}

std::vector<CheckRecord> arr_checks(const ArrWorkspace& w) {
  std::vector<CheckRecord> out;
  const Category& a = *w.base;
  const Category& arr = *w.arr;
  auto verdict = classify_ideal(arr, w.z1);
  std::vector<std::string> wit;
  if (verdict.witness) wit.push_back(arr.arrow_name(*verdict.witness));
  out.push_back(make_check("Z1(A) is a closed ideal", "arrow-ideal-closed", verdict.kind == IdealKind::closed, "", wit));

  Subset isos(arr.object_count());
  for (std::size_t x = 0; x < a.arrow_count(); ++x)
    if (a.is_iso(static_cast<int>(x))) isos.insert(static_cast<int>(x));
  out.push_back(make_check("trivial objects are the isomorphisms", "trivial-objects-are-isos",
                           trivial_objects(w.H()) == isos));

  auto dist = find_distinguished(a);
  auto preserve = [&](bool epi) {
    const Functor& f = epi ? w.D() : w.C();
    for (std::size_t t = 0; t < arr.arrow_count(); ++t) {
      ArrowId ti = static_cast<int>(t);
      bool src = epi ? is_epi(arr, ti) : is_mono(arr, ti);
      if (!src) continue;
      bool dst = epi ? is_epi(a, f.arr[ti]) : is_mono(a, f.arr[ti]);
      if (!dst) return std::optional<ArrowId>(ti);
    }
    return std::optional<ArrowId>();
  };
  auto record = [&](const std::string& name, const std::string& anchor, bool hyp, bool epi) {
    if (!hyp) {
      out.push_back({name, anchor, Verdict::not_applicable, epi ? "no terminal object" : "no initial object", {}});
      return;
    }
    auto bad = preserve(epi);
    std::vector<std::string> ws;
    if (bad) ws.push_back(arr.arrow_name(*bad));
    out.push_back(make_check(name, anchor, !bad, "", ws));
  };
  record("domain functor preserves epimorphisms", "terminal-domain-preserves-epis", dist.terminal.has_value(), true);
  record("codomain functor preserves monomorphisms", "initial-codomain-preserves-monos", dist.initial.has_value(), false);
  return out;
}

}  // namespace fincat
