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

#pragma once

// Brute-force reference implementations used by the tests. They work from
// the definitions directly and share no search code with the library.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/dsl/parser.hpp"
#include "fincat/nullhomotopy.hpp"

namespace oracle {

using fincat::ArrowId;
using fincat::Category;
using fincat::HomotopyId;
using fincat::kNone;
using fincat::NullStructure;
using fincat::ObjectId;

inline std::shared_ptr<fincat::dsl::Workspace> fixture(const std::string& name) {
  static std::map<std::string, std::shared_ptr<fincat::dsl::Workspace>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto ws = fincat::dsl::parse_file(std::string(FINCAT_FIXTURES) + "/" + name + ".fincat");
  cache[name] = ws;
  return ws;
}

inline fincat::CategoryPtr category(const std::string& name) { return fixture(name)->category(name); }

inline ArrowId arrow(const Category& c, const std::string& name) { return *c.find_arrow(name); }
inline ObjectId object(const Category& c, const std::string& name) { return *c.find_object(name); }

inline std::vector<ArrowId> arrows_between(const Category& c, ObjectId x, ObjectId y) {
  std::vector<ArrowId> out;
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (c.dom(static_cast<int>(a)) == x && c.cod(static_cast<int>(a)) == y) out.push_back(static_cast<int>(a));
  return out;
}

inline std::vector<ArrowId> all_arrows(const Category& c) {
  std::vector<ArrowId> out;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) out.push_back(static_cast<int>(a));
  return out;
}

inline bool mono(const Category& c, ArrowId g) {
  for (ArrowId a : all_arrows(c))
    for (ArrowId b : all_arrows(c))
      if (c.cod(a) == c.dom(g) && c.cod(b) == c.dom(g) && c.dom(a) == c.dom(b) && a != b &&
          c.compose_raw(g, a) == c.compose_raw(g, b))
        return false;
  return true;
}

inline bool epi(const Category& c, ArrowId g) {
  for (ArrowId a : all_arrows(c))
    for (ArrowId b : all_arrows(c))
      if (c.dom(a) == c.cod(g) && c.dom(b) == c.cod(g) && c.cod(a) == c.cod(b) && a != b &&
          c.compose_raw(a, g) == c.compose_raw(b, g))
        return false;
  return true;
}

inline bool iso(const Category& c, ArrowId g) {
  for (ArrowId h : arrows_between(c, c.cod(g), c.dom(g)))
    if (c.compose_raw(h, g) == c.identity(c.dom(g)) && c.compose_raw(g, h) == c.identity(c.cod(g))) return true;
  return false;
}

/// Whether the structure satisfies typing, unit, action and interchange
/// laws, checked entry by entry.
inline bool structure_valid(const NullStructure& s) {
  const Category& c = s.base();
  auto as = all_arrows(c);
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    HomotopyId phi = static_cast<int>(p);
    ArrowId g = s.carrier(phi);
    if (s.left(c.identity(c.cod(g)), phi) != phi || s.right(phi, c.identity(c.dom(g))) != phi) return false;
    for (ArrowId h : as) {
      if (c.dom(h) != c.cod(g)) continue;
      HomotopyId hp = s.left(h, phi);
      if (hp == kNone || hp < 0 || static_cast<std::size_t>(hp) >= s.homotopy_count() ||
          s.carrier(hp) != c.compose_raw(h, g))
        return false;
      for (ArrowId k : as)
        if (c.dom(k) == c.cod(h) && s.left(k, hp) != s.left(c.compose_raw(k, h), phi)) return false;
    }
    for (ArrowId f : as) {
      if (c.cod(f) != c.dom(g)) continue;
      HomotopyId pf = s.right(phi, f);
      if (pf == kNone || pf < 0 || static_cast<std::size_t>(pf) >= s.homotopy_count() ||
          s.carrier(pf) != c.compose_raw(g, f))
        return false;
      for (ArrowId e : as)
        if (c.cod(e) == c.dom(f) && s.right(pf, e) != s.right(phi, c.compose_raw(f, e))) return false;
      for (ArrowId h : as)
        if (c.dom(h) == c.cod(g) && s.left(h, pf) != s.right(s.left(h, phi), f)) return false;
    }
  }
  return true;
}

/// A commutative square y.g = g0.x between arrows x and y of the base.
/// Universal property of (n, nu) read straight from the definition.
inline bool kernel_oracle(const NullStructure& s, ArrowId g, ArrowId n, HomotopyId nu) {
  const Category& c = s.base();
  if (c.cod(n) != c.dom(g) || s.carrier(nu) != c.compose_raw(g, n)) return false;
  for (ArrowId f : oracle::all_arrows(c)) {
    if (c.cod(f) != c.dom(g)) continue;
    for (HomotopyId phi : s.theta(c.compose_raw(g, f))) {
      int lifts = 0;
      for (ArrowId m : oracle::arrows_between(c, c.dom(f), c.dom(n)))
        if (c.compose_raw(n, m) == f && s.right(nu, m) == phi) ++lifts;
      if (lifts != 1) return false;
    }
  }
  return true;
}

struct Sq {
  ArrowId x, y, g, g0;
  auto key() const { return std::tie(x, y, g, g0); }
  bool operator<(const Sq& o) const { return key() < o.key(); }
  bool operator==(const Sq& o) const { return key() == o.key(); }
};

inline std::vector<Sq> squares(const Category& a) {
  std::vector<Sq> out;
  for (ArrowId x : all_arrows(a))
    for (ArrowId y : all_arrows(a))
      for (ArrowId g : arrows_between(a, a.dom(x), a.dom(y)))
        for (ArrowId g0 : arrows_between(a, a.cod(x), a.cod(y)))
          if (a.compose_raw(y, g) == a.compose_raw(g0, x)) out.push_back({x, y, g, g0});
  return out;
}

/// Diagonals l: cod x -> dom y with l.x = g and y.l = g0.
inline std::vector<ArrowId> diagonals(const Category& a, const Sq& s) {
  std::vector<ArrowId> out;
  for (ArrowId l : arrows_between(a, a.cod(s.x), a.dom(s.y)))
    if (a.compose_raw(l, s.x) == s.g && a.compose_raw(s.y, l) == s.g0) out.push_back(l);
  return out;
}

inline Sq compose(const Category& a, const Sq& t, const Sq& s) {
  return {s.x, t.y, a.compose_raw(t.g, s.g), a.compose_raw(t.g0, s.g0)};
}

using Mask = unsigned long long;

inline bool in(Mask m, int i) { return (m >> i) & 1ULL; }

inline bool iso_stable(const Category& c, Mask cls) {
  for (ArrowId g : all_arrows(c)) {
    if (!in(cls, g)) continue;
    for (ArrowId i : all_arrows(c)) {
      if (!iso(c, i)) continue;
      if (c.cod(i) == c.dom(g) && !in(cls, c.compose_raw(g, i))) return false;
      if (c.dom(i) == c.cod(g) && !in(cls, c.compose_raw(i, g))) return false;
    }
  }
  return true;
}

/// Every class pair (E, M) that is iso-stable, factorizes every arrow and
/// has the lifting property (unique diagonals when `unique`).
inline std::vector<std::pair<Mask, Mask>> factorization_systems(const Category& c, bool unique) {
  int n = static_cast<int>(c.arrow_count());
  std::vector<Mask> stable;
  for (Mask m = 0; m < (1ULL << n); ++m)
    if (iso_stable(c, m)) stable.push_back(m);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask e : stable)
    for (Mask m : stable) {
      bool ok = true;
      for (ArrowId x = 0; x < n && ok; ++x) {
        bool found = false;
        for (ArrowId ee : all_arrows(c))
          for (ArrowId mm : all_arrows(c))
            if (in(e, ee) && in(m, mm) && c.dom(ee) == c.dom(x) && c.cod(mm) == c.cod(x) && c.cod(ee) == c.dom(mm) &&
                c.compose_raw(mm, ee) == x)
              found = true;
        ok = found;
      }
      for (ArrowId ee = 0; ee < n && ok; ++ee)
        for (ArrowId mm = 0; mm < n && ok; ++mm) {
          if (!in(e, ee) || !in(m, mm)) continue;
          for (ArrowId h : arrows_between(c, c.dom(ee), c.dom(mm)))
            for (ArrowId h0 : arrows_between(c, c.cod(ee), c.cod(mm))) {
              if (c.compose_raw(mm, h) != c.compose_raw(h0, ee)) continue;
              auto d = diagonals(c, {ee, mm, h, h0});
              if (d.empty() || (unique && d.size() != 1)) ok = false;
            }
        }
      if (ok) out.emplace_back(e, m);
    }
  return out;
}

/// Strict torsion theories of the diagonal structure on Arr(A), checked from
/// the definition: repleteness, unique diagonals from T to F, and for every
/// object a presentation whose homotopy is both a kernel and a cokernel.
/// Objects of Arr(A) are numbered by base arrow id.
class ArrTorsionOracle {
 public:
  explicit ArrTorsionOracle(const Category& a) : a_(a), sq_(squares(a)) {
    for (const auto& s : sq_) from_[s.x].push_back(s);
  }

  bool arr_iso(const Sq& s) const { return iso(a_, s.g) && iso(a_, s.g0); }

  bool replete(Mask objs) const {
    for (const auto& s : sq_)
      if (in(objs, s.x) && arr_iso(s) && !in(objs, s.y)) return false;
    return true;
  }

  bool orthogonal(Mask t, Mask f) const {
    for (const auto& s : sq_)
      if (in(t, s.x) && in(f, s.y) && diagonals(a_, s).size() != 1) return false;
    return true;
  }

  /// t: T -> X, b: X -> F and xi a diagonal of b.t.
  bool is_kernel(const Sq& t, const Sq& b, ArrowId xi) const {
    for (const auto& c : sq_) {
      if (c.y != t.y) continue;
      Sq bc = compose(a_, b, c);
      for (ArrowId phi : diagonals(a_, bc)) {
        int lifts = 0;
        for (const auto& d : from_.at(c.x))
          if (d.y == t.x && compose(a_, t, d) == c && a_.compose_raw(xi, d.g0) == phi) ++lifts;
        if (lifts != 1) return false;
      }
    }
    return true;
  }

  bool is_cokernel(const Sq& t, const Sq& b, ArrowId xi) const {
    for (const auto& c : from_.at(b.x)) {
      Sq ct = compose(a_, c, t);
      for (ArrowId phi : diagonals(a_, ct)) {
        int lifts = 0;
        for (const auto& e : from_.at(b.y))
          if (e.y == c.y && compose(a_, e, b) == c && a_.compose_raw(e.g, xi) == phi) ++lifts;
        if (lifts != 1) return false;
      }
    }
    return true;
  }

  bool presented(Mask t, Mask f, ArrowId x) const {
    for (const auto& ts : sq_) {
      if (ts.y != x || !in(t, ts.x)) continue;
      for (const auto& fs : from_.at(x)) {
        if (!in(f, fs.y)) continue;
        for (ArrowId xi : diagonals(a_, compose(a_, fs, ts)))
          if (is_kernel(ts, fs, xi) && is_cokernel(ts, fs, xi)) return true;
      }
    }
    return false;
  }

  bool torsion_theory(Mask t, Mask f) const {
    if (!replete(t) || !replete(f) || !orthogonal(t, f)) return false;
    for (ArrowId x : all_arrows(a_))
      if (!presented(t, f, x)) return false;
    return true;
  }

  std::vector<std::pair<Mask, Mask>> enumerate() const {
    int n = static_cast<int>(a_.arrow_count());
    std::vector<Mask> rep;
    for (Mask m = 0; m < (1ULL << n); ++m)
      if (replete(m)) rep.push_back(m);
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask t : rep)
      for (Mask f : rep)
        if (torsion_theory(t, f)) out.emplace_back(t, f);
    return out;
  }

 private:
  const Category& a_;
  std::vector<Sq> sq_;
  std::map<ArrowId, std::vector<Sq>> from_;
};

inline Mask mask_of(const fincat::Subset& s) {
  Mask m = 0;
  for (int i : s.members()) m |= 1ULL << i;
  return m;
}

/// 2x2 matrices over F2 and friends, for the V2 fixture.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<int> bits;
  int at(int r, int c) const { return bits[r * cols + c]; }
  bool operator==(const Matrix&) const = default;
};

inline Matrix multiply(const Matrix& g, const Matrix& f) {
  Matrix out{g.rows, f.cols, std::vector<int>(g.rows * f.cols, 0)};
  for (int r = 0; r < g.rows; ++r)
    for (int c = 0; c < f.cols; ++c) {
      int v = 0;
      for (int k = 0; k < g.cols; ++k) v ^= g.at(r, k) & f.at(k, c);
      out.bits[r * f.cols + c] = v;
    }
  return out;
}

inline int rank(Matrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) p = i;
    if (p < 0) continue;
    for (int k = 0; k < m.cols; ++k) std::swap(m.bits[r * m.cols + k], m.bits[p * m.cols + k]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.at(i, c))
        for (int k = 0; k < m.cols; ++k) m.bits[i * m.cols + k] ^= m.bits[r * m.cols + k];
    ++r;
  }
  return r;
}

inline int dimension(const std::string& object) { return object == "0" ? 0 : object == "v1" ? 1 : 2; }

/// Reads the matrix of a V2 arrow from its name.
inline Matrix matrix_of(const Category& c, ArrowId a) {
  int rows = dimension(c.object_name(c.cod(a))), cols = dimension(c.object_name(c.dom(a)));
  Matrix m{rows, cols, std::vector<int>(rows * cols, 0)};
  const std::string& n = c.arrow_name(a);
  if (n.rfind("id_", 0) == 0) {
    for (int i = 0; i < rows; ++i) m.bits[i * cols + i] = 1;
  } else if (n.rfind("z_", 0) != 0) {
    std::string bits = n.substr(n.find('_') + 1);
    for (int i = 0; i < rows * cols; ++i) m.bits[i] = bits[i] - '0';
  }
  return m;
}

/// Torsion theories for the zero ideal on vector spaces of dimension 0, 1,
/// 2, as sets of dimensions: no nonzero maps T -> F, and every dimension n
/// splits as t + f with t in T and f in F.
inline std::vector<std::pair<std::set<int>, std::set<int>>> vector_space_theories() {
  std::vector<std::pair<std::set<int>, std::set<int>>> out;
  for (int tm = 0; tm < 8; ++tm)
    for (int fm = 0; fm < 8; ++fm) {
      std::set<int> t, f;
      for (int d = 0; d < 3; ++d) {
        if ((tm >> d) & 1) t.insert(d);
        if ((fm >> d) & 1) f.insert(d);
      }
      bool ok = true;
      for (int a : t)
        for (int b : f)
          if (a > 0 && b > 0) ok = false;
      for (int n = 0; n < 3 && ok; ++n) {
        bool split = false;
        for (int a : t)
          for (int b : f)
            if (a + b == n) split = true;
        ok = split;
      }
      if (ok) out.emplace_back(t, f);
    }
  return out;
}

}  // namespace oracle
