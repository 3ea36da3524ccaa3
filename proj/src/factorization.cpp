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

#include "fincat/factorization.hpp"

#include <algorithm>

#include "fincat/caps.hpp"
#include "fincat/limits.hpp"

namespace fincat {

const char* to_string(FSLevel level) {
  switch (level) {
    case FSLevel::orthogonal:
      return "orthogonal";
    case FSLevel::weak:
      return "weak";
    case FSLevel::none:
      return "none";
  }
  return "?";
}

namespace {

std::size_t count_diagonals(const Category& c, ArrowId e, ArrowId m, ArrowId h, ArrowId h0, std::size_t stop,
                            std::vector<ArrowId>* out) {
  std::size_t n = 0;
  for (ArrowId l : c.hom(c.cod(e), c.dom(m)))
    if (c.compose_raw(l, e) == h && c.compose_raw(m, l) == h0) {
      ++n;
      if (out) out->push_back(l);
      if (n >= stop) break;
    }
  return n;
}

/// 0: some square has no diagonal, 1: diagonals exist, 2: they are unique.
int lifting_level(const Category& c, ArrowId e, ArrowId m) {
  int level = 2;
  for (ArrowId h : c.hom(c.dom(e), c.dom(m)))
    for (ArrowId h0 : c.hom(c.cod(e), c.cod(m))) {
      if (c.compose_raw(m, h) != c.compose_raw(h0, e)) continue;
      std::size_t n = count_diagonals(c, e, m, h, h0, 2, nullptr);
      if (n == 0) return 0;
      if (n > 1) level = 1;
    }
  return level;
}

std::string square_text(const Category& c, const LiftingSquare& s) {
  return "e=" + c.arrow_name(s.e) + " m=" + c.arrow_name(s.m) + " h=" + c.arrow_name(s.h) + " h0=" +
         c.arrow_name(s.h0) + " diagonals=" + std::to_string(s.diagonals.size());
}

Subset expand_orbits(const Category& c, unsigned long long mask) {
  Subset s(c.arrow_count());
  for (std::size_t o = 0; o < c.orbit_count(); ++o)
    if (mask >> o & 1ULL)
      for (ArrowId a : c.orbit_members(static_cast<int>(o))) s.insert(a);
  return s;
}

}  // namespace

OrthogonalityVerdict check_orthogonal(const Category& c, ArrowId e, ArrowId m, bool unique) {
  OrthogonalityVerdict v;
  for (ArrowId h : c.hom(c.dom(e), c.dom(m)))
    for (ArrowId h0 : c.hom(c.cod(e), c.cod(m))) {
      if (c.compose_raw(m, h) != c.compose_raw(h0, e)) continue;
      LiftingSquare sq{e, m, h, h0, {}};
      count_diagonals(c, e, m, h, h0, c.arrow_count() + 1, &sq.diagonals);
      if (sq.diagonals.empty() || (unique && sq.diagonals.size() > 1)) {
        v.ok = false;
        v.failure = std::move(sq);
        return v;
      }
    }
  return v;
}

std::vector<Factorization> factor_arrow(const Category& c, const FactorizationSystem& fs, ArrowId x) {
  std::vector<Factorization> out;
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    ObjectId mid = static_cast<int>(i);
    for (ArrowId e : c.hom(c.dom(x), mid)) {
      if (!fs.e.contains(e)) continue;
      for (ArrowId m : c.hom(mid, c.cod(x)))
        if (fs.m.contains(m) && c.compose_raw(m, e) == x) out.push_back({e, mid, m});
    }
  }
  if (out.empty()) throw Error("arrow " + c.arrow_name(x) + " has no factorization in " + fs.name);
  return out;
}

FSVerdict check_factorization_system(const ArrWorkspace& w, const FactorizationSystem& fs) {
  const Category& c = *w.base;
  const Category& arr = *w.arr;
  FSVerdict v;
  v.iso_stable = c.iso_closure_arrows(fs.e) == fs.e && c.iso_closure_arrows(fs.m) == fs.m;
  if (!v.iso_stable) {
    v.failure = "classes are not stable under composition with isomorphisms";
    return v;
  }
  std::vector<std::vector<Factorization>> facts(c.arrow_count());
  v.factorizes = true;
  for (std::size_t xi = 0; xi < c.arrow_count(); ++xi) {
    ArrowId x = static_cast<int>(xi);
    try {
      facts[xi] = factor_arrow(c, fs, x);
    } catch (const Error&) {
      v.factorizes = false;
      v.failure = "no factorization";
      v.witnesses = {c.arrow_name(x)};
      return v;
    }
  }
  int level = 2;
  for (ArrowId e : fs.e.members()) {
    for (ArrowId m : fs.m.members()) {
      auto ov = check_orthogonal(c, e, m, false);
      if (!ov.ok) {
        v.failure = "square without diagonal";
        v.witnesses = {square_text(c, *ov.failure)};
        return v;
      }
      if (level == 2) {
        auto uv = check_orthogonal(c, e, m, true);
        if (!uv.ok) {
          level = 1;
          v.failure = "square with several diagonals";
          v.witnesses = {square_text(c, *uv.failure)};
        }
      }
    }
  }
  v.level = level == 2 ? FSLevel::orthogonal : FSLevel::weak;

  bool epis = true, monos = true;
  for (ArrowId e : fs.e.members())
    if (!is_epi(c, e)) epis = false;
  for (ArrowId m : fs.m.members())
    if (!is_mono(c, m)) monos = false;
  v.proper = v.level == FSLevel::orthogonal && epis && monos;

  v.quasi_proper = true;
  for (ArrowId e : fs.e.members())
    if (!is_epi(arr, w.string.gamma().at(e))) v.quasi_proper = false;
  for (ArrowId m : fs.m.members())
    if (!is_mono(arr, w.string.beta().at(m))) v.quasi_proper = false;

  v.quasi_proper_squares = true;
  for (std::size_t xi = 0; xi < c.arrow_count() && v.quasi_proper_squares; ++xi) {
    ArrowId x = static_cast<int>(xi);
    for (const auto& f : facts[xi]) {
      ArrowId left = w.square(f.e, x, c.identity(c.dom(x)), f.m);
      ArrowId right = w.square(x, f.m, f.e, c.identity(c.cod(x)));
      if (!is_mono(arr, left) || !is_epi(arr, right)) {
        v.quasi_proper_squares = false;
        break;
      }
    }
  }
  return v;
}

std::vector<FactorizationSystem> enumerate_fs(const ArrWorkspace& w, FSLevel level) {
  return enumerate_fs(w, level, caps().fs_arrows);
}

std::vector<FactorizationSystem> enumerate_fs(const ArrWorkspace& w, FSLevel level, long long cap) {
  const Category& c = *w.base;
  require_cap("fs", cap, static_cast<long long>(c.arrow_count()));
  if (level == FSLevel::none) throw Error("enumeration level must be orthogonal or weak");
  int need = level == FSLevel::orthogonal ? 2 : 1;
  std::size_t k = c.orbit_count();
  std::vector<unsigned long long> allowed(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      bool ok = true;
      for (ArrowId e : c.orbit_members(static_cast<int>(a)))
        for (ArrowId m : c.orbit_members(static_cast<int>(b)))
          if (ok && lifting_level(c, e, m) < need) ok = false;
      if (ok) allowed[a] |= 1ULL << b;
    }
  // orbit pairs (e, m) through which each arrow factors
  std::vector<std::vector<std::pair<int, int>>> splits(c.arrow_count());
  for (std::size_t xi = 0; xi < c.arrow_count(); ++xi) {
    ArrowId x = static_cast<int>(xi);
    for (std::size_t i = 0; i < c.object_count(); ++i)
      for (ArrowId e : c.hom(c.dom(x), static_cast<int>(i)))
        for (ArrowId m : c.hom(static_cast<int>(i), c.cod(x)))
          if (c.compose_raw(m, e) == x) splits[xi].emplace_back(c.arrow_orbit(e), c.arrow_orbit(m));
  }
  auto factorizes = [&](unsigned long long em, unsigned long long mm) {
    for (const auto& sp : splits) {
      bool found = false;
      for (auto [a, b] : sp)
        if ((em >> a & 1ULL) && (mm >> b & 1ULL)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };

  std::vector<FactorizationSystem> out;
  unsigned long long full = k == 64 ? ~0ULL : (1ULL << k) - 1;
  for (unsigned long long em = 0; em <= full; ++em) {
    unsigned long long room = full;
    for (std::size_t a = 0; a < k; ++a)
      if (em >> a & 1ULL) room &= allowed[a];
    std::vector<unsigned long long> mms;
    for (unsigned long long mm = room;; mm = (mm - 1) & room) {
      mms.push_back(mm);
      if (mm == 0) break;
    }
    for (auto it = mms.rbegin(); it != mms.rend(); ++it) {
      if (!factorizes(em, *it)) continue;
      FactorizationSystem fs{"", expand_orbits(c, em), expand_orbits(c, *it)};
      if (check_factorization_system(w, fs).at_least(level)) {
        fs.name = "fs" + std::to_string(out.size());
        out.push_back(std::move(fs));
      }
    }
    if (em == full) break;
  }
  return out;
}

TorsionPair pair_of(const FactorizationSystem& fs) { return {fs.name, fs.e, fs.m}; }

FactorizationSystem system_of(const TorsionPair& p) { return {p.name, p.torsion, p.free}; }

TorsionPair fs_to_htt(const ArrWorkspace& w, const FactorizationSystem& fs, FSLevel level) {
  auto v = check_factorization_system(w, fs);
  if (!v.at_least(level))
    throw Error("system " + fs.name + " is not " + std::string(to_string(level)) + ": " + v.failure);
  TorsionPair p = pair_of(fs);
  TTLevel want = level == FSLevel::orthogonal ? TTLevel::strict : TTLevel::weak;
  auto tv = check_torsion_theory(w.H(), p);
  if (!tv.at_least(want)) throw Error("pair built from " + fs.name + " fails: " + tv.failure);
  return p;
}

FactorizationSystem htt_to_fs(const ArrWorkspace& w, const TorsionPair& p, TTLevel level) {
  auto tv = check_torsion_theory(w.H(), p);
  if (!tv.at_least(level))
    throw Error("pair " + p.name + " is not a " + std::string(to_string(level)) + " torsion theory: " + tv.failure);
  FactorizationSystem fs = system_of(p);
  FSLevel want = level == TTLevel::strict ? FSLevel::orthogonal : FSLevel::weak;
  auto v = check_factorization_system(w, fs);
  if (!v.at_least(want)) throw Error("system built from " + p.name + " fails: " + v.failure);
  return fs;
}

ArrowId diagonal_of(const ArrWorkspace& w, HomotopyId phi) {
  auto a = w.base->find_arrow(w.H().label(phi));
  if (!a) throw Error("homotopy without diagonal");
  return *a;
}

ExactPresentation presentation_of(const ArrWorkspace& w, ArrowId x, const Factorization& f) {
  const Category& c = *w.base;
  ExactPresentation p;
  p.t_object = f.e;
  p.t_arrow = w.square(f.e, x, c.identity(c.dom(x)), f.m);
  p.f_object = f.m;
  p.f_arrow = w.square(x, f.m, f.e, c.identity(c.cod(x)));
  p.witness = w.h_homotopy(w.arr->compose_raw(p.f_arrow, p.t_arrow), c.identity(f.mid));
  return p;
}

std::optional<Factorization> factorization_of(const ArrWorkspace& w, const ExactPresentation& p) {
  const Category& c = *w.base;
  const Square& t = w.squares[p.t_arrow];
  const Square& f = w.squares[p.f_arrow];
  ArrowId xi = diagonal_of(w, p.witness);
  if (!c.is_iso(t.g) || !c.is_iso(f.g0) || !c.is_iso(xi)) return std::nullopt;
  ArrowId e = c.compose({xi, p.t_object, c.inverse(t.g)});
  ArrowId m = c.compose(c.inverse(f.g0), p.f_object);
  return Factorization{e, c.cod(e), m};
}

}  // namespace fincat
