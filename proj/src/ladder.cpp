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

#include "fincat/ladder.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fincat/caps.hpp"
#include "fincat/limits.hpp"

namespace fincat {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::set<Key> keys(const std::vector<TorsionPair>& ps) {
  std::set<Key> out;
  for (const auto& p : ps) out.emplace(p.torsion.members(), p.free.members());
  return out;
}

CheckRecord na(std::string name, std::string anchor, std::string detail) {
  return {std::move(name), std::move(anchor), Verdict::not_applicable, std::move(detail), {}};
}

bool same_classes(const FactorizationSystem& a, const FactorizationSystem& b) { return a.e == b.e && a.m == b.m; }

bool same_pair(const TorsionPair& a, const TorsionPair& b) { return a.torsion == b.torsion && a.free == b.free; }

CheckRecord correspondence(const std::string& name, const std::string& anchor,
                           const std::vector<FactorizationSystem>& systems, const std::vector<TorsionPair>& theories) {
  std::vector<std::string> bad;
  std::vector<TorsionPair> images;
  for (const auto& fs : systems) {
    images.push_back(pair_of(fs));
    if (!same_classes(system_of(pair_of(fs)), fs)) bad.push_back(fs.name);
  }
  for (const auto& p : theories)
    if (!same_pair(pair_of(system_of(p)), p)) bad.push_back(p.name);
  bool match = keys(images) == keys(theories) && images.size() == theories.size();
  return make_check(name, anchor, match && bad.empty(),
                    count_of(systems.size(), "system", "systems") + ", " + count_of(theories.size(), "theory", "theories"),
                    bad);
}

bool has_presentation(const std::vector<ExactPresentation>& ps, const ExactPresentation& p) {
  for (const auto& q : ps)
    if (q.t_arrow == p.t_arrow && q.f_arrow == p.f_arrow && q.witness == p.witness) return true;
  return false;
}

}  // namespace

LadderReport verify_correspondence(const ArrWorkspace& w) { return verify_correspondence(w, caps().ladder_base_arrows); }

LadderReport verify_correspondence(const ArrWorkspace& w, long long cap) {
  const Category& a = *w.base;
  const Category& arr = *w.arr;
  const NullStructure& h = w.H();
  require_cap("ladder", cap, static_cast<long long>(a.arrow_count()));

  LadderReport r;
  r.orthogonal_systems = enumerate_fs(w, FSLevel::orthogonal);
  r.weak_systems = enumerate_fs(w, FSLevel::weak);
  r.strict_theories = enumerate_torsion_theories(h, TTLevel::strict);
  r.weak_theories = enumerate_torsion_theories(h, TTLevel::weak);
  r.discrete_theories = enumerate_z1_torsion_theories(arr, w.z1);

  auto dist = find_distinguished(a);
  bool one_end = dist.initial || dist.terminal;
  bool both_ends = dist.initial && dist.terminal;

  std::vector<FSVerdict> wv;
  std::vector<TTVerdict> wtv;
  for (const auto& fs : r.weak_systems) {
    wv.push_back(check_factorization_system(w, fs));
    wtv.push_back(check_torsion_theory(h, pair_of(fs)));
  }
  auto orthogonal_index = [&](std::size_t i) { return wv[i].level == FSLevel::orthogonal; };

  r.rungs.push_back(correspondence("orthogonal systems match torsion theories", "ofs-htt-correspondence",
                                   r.orthogonal_systems, r.strict_theories));
  r.rungs.push_back(correspondence("weakly orthogonal systems match weak torsion theories",
                                   "wofs-whtt-correspondence", r.weak_systems, r.weak_theories));

  {
    std::vector<std::string> bad;
    for (const auto& fs : r.orthogonal_systems)
      for (std::size_t x = 0; x < a.object_count(); ++x) {
        ArrowId id = a.identity(static_cast<int>(x));
        if (!fs.e.contains(id) || !fs.m.contains(id)) {
          bad.push_back(fs.name);
          break;
        }
      }
    r.rungs.push_back(make_check("orthogonal systems contain the identities", "ofs-contain-identities", bad.empty(),
                                 count_of(r.orthogonal_systems.size(), "system", "systems"), bad));
  }

  {
    std::vector<std::string> bad, bad_z;
    std::size_t found = 0, found_z = 0;
    for (std::size_t gi = 0; gi < arr.arrow_count(); ++gi) {
      ArrowId g = static_cast<int>(gi);
      if (auto q = search_homotopy_cokernel(h, g)) {
        ++found;
        if (!a.is_iso(w.C().on_arrow(q->arrow))) bad.push_back(arr.arrow_name(g));
      }
      if (auto q = z1_cokernel(arr, w.z1, g)) {
        ++found_z;
        if (!a.is_iso(w.C().on_arrow(q->arrow))) bad_z.push_back(arr.arrow_name(g));
      }
    }
    r.rungs.push_back(make_check("codomain of every homotopy cokernel arrow is invertible", "cokernel-codomain-iso",
                                 bad.empty(), count_of(found, "cokernel", "cokernels"), bad));
    r.rungs.push_back(make_check("codomain of every ideal cokernel arrow is invertible",
                                 "discrete-cokernel-codomain-iso", bad_z.empty(),
                                 count_of(found_z, "cokernel", "cokernels"), bad_z));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i)
      if (wv[i].proper && !wv[i].quasi_proper) bad.push_back(r.weak_systems[i].name);
    r.rungs.push_back(make_check("proper systems are quasi-proper", "proper-implies-quasi-proper", bad.empty(), "",
                                 bad));
  }

  if (one_end) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i)
      if (wv[i].quasi_proper && !orthogonal_index(i)) bad.push_back(r.weak_systems[i].name);
    r.rungs.push_back(make_check("quasi-proper weak systems are orthogonal", "quasi-proper-weak-is-orthogonal",
                                 bad.empty(), "", bad));
  } else {
    r.rungs.push_back(na("quasi-proper weak systems are orthogonal", "quasi-proper-weak-is-orthogonal",
                         "no initial or terminal object"));
  }
  if (both_ends) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i)
      if (wv[i].quasi_proper && !wv[i].proper) bad.push_back(r.weak_systems[i].name);
    r.rungs.push_back(make_check("quasi-proper weak systems are proper", "quasi-proper-weak-is-proper", bad.empty(),
                                 "", bad));
  } else {
    r.rungs.push_back(na("quasi-proper weak systems are proper", "quasi-proper-weak-is-proper",
                         "needs an initial and a terminal object"));
  }

  {
    std::vector<std::string> bad_weak, bad_orth;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i) {
      bool agree = wv[i].quasi_proper == wtv[i].quasi_proper && wtv[i].at_least(TTLevel::weak);
      if (!agree) bad_weak.push_back(r.weak_systems[i].name);
      if (orthogonal_index(i) && (!agree || wtv[i].level != TTLevel::strict)) bad_orth.push_back(r.weak_systems[i].name);
    }
    r.rungs.push_back(make_check("quasi-proper weak systems match quasi-proper weak theories",
                                 "quasi-proper-weak-correspondence", bad_weak.empty(), "", bad_weak));
    r.rungs.push_back(make_check("quasi-proper systems match quasi-proper theories", "quasi-proper-correspondence",
                                 bad_orth.empty(), "", bad_orth));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i)
      if (wv[i].quasi_proper != wv[i].quasi_proper_squares) bad.push_back(r.weak_systems[i].name);
    r.rungs.push_back(make_check("unit criterion agrees with the square criterion", "quasi-proper-square-criterion",
                                 bad.empty(), "", bad));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i) {
      const auto& fs = r.weak_systems[i];
      bool epis = true, monos = true;
      for (ArrowId e : fs.e.members()) epis = epis && is_epi(a, e);
      for (ArrowId m : fs.m.members()) monos = monos && is_mono(a, m);
      if ((epis || monos) && !orthogonal_index(i)) bad.push_back(fs.name);
    }
    r.rungs.push_back(make_check("epi or mono classes make weak systems orthogonal", "epi-or-mono-upgrades-weak",
                                 bad.empty(), "", bad));
  }

  {
    std::vector<std::string> bad;
    for (const auto& p : r.weak_theories) {
      auto tv = check_torsion_theory(h, p);
      if (tv.quasi_proper && !check_z1_torsion_theory(arr, w.z1, p).z1_tt) bad.push_back(p.name);
    }
    r.rungs.push_back(make_check("quasi-proper weak theories are ideal torsion theories",
                                 "quasi-proper-htt-to-discrete", bad.empty(), "", bad));
  }

  {
    std::vector<std::string> bad_weak, bad_strict;
    for (const auto& p : r.discrete_theories) {
      auto tv = check_torsion_theory(h, p);
      if (!tv.at_least(TTLevel::weak) || !tv.quasi_proper) bad_weak.push_back(p.name);
      if (tv.level != TTLevel::strict || !tv.quasi_proper) bad_strict.push_back(p.name);
    }
    r.rungs.push_back(make_check("ideal torsion theories are quasi-proper weak theories",
                                 "discrete-to-quasi-proper-weak-htt", bad_weak.empty(),
                                 count_of(r.discrete_theories.size(), "theory", "theories"), bad_weak));
    if (one_end)
      r.rungs.push_back(make_check("ideal torsion theories are quasi-proper theories", "discrete-to-quasi-proper-htt",
                                   bad_strict.empty(), "", bad_strict));
    else
      r.rungs.push_back(na("ideal torsion theories are quasi-proper theories", "discrete-to-quasi-proper-htt",
                           "no initial or terminal object"));
  }

  if (both_ends) {
    std::vector<TorsionPair> images;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i)
      if (wv[i].proper) images.push_back(pair_of(r.weak_systems[i]));
    bool ok = keys(images) == keys(r.discrete_theories);
    r.rungs.push_back(make_check("proper systems match ideal torsion theories", "proper-ofs-discrete-correspondence",
                                 ok,
                                 std::to_string(images.size()) + " proper systems, " +
                                     count_of(r.discrete_theories.size(), "theory", "theories")));
  } else {
    r.rungs.push_back(na("proper systems match ideal torsion theories", "proper-ofs-discrete-correspondence",
                         "needs an initial and a terminal object"));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < r.weak_systems.size(); ++i) {
      const auto& fs = r.weak_systems[i];
      for (std::size_t xi = 0; xi < a.arrow_count(); ++xi) {
        ArrowId x = static_cast<int>(xi);
        const auto& ps = wtv[i].presentations[xi];
        bool ok = true;
        for (const auto& f : factor_arrow(a, fs, x)) {
          auto p = presentation_of(w, x, f);
          auto back = factorization_of(w, p);
          if (!has_presentation(ps, p) || !back || back->e != f.e || back->m != f.m) ok = false;
        }
        for (const auto& p : ps) {
          auto f = factorization_of(w, p);
          if (!f || !fs.e.contains(f->e) || !fs.m.contains(f->m) || a.compose_raw(f->m, f->e) != x ||
              !presentations_isomorphic(arr, p, presentation_of(w, x, *f)))
            ok = false;
        }
        if (!ok) bad.push_back(fs.name + ":" + a.arrow_name(x));
      }
    }
    r.rungs.push_back(make_check("factorizations and presentations correspond", "factorization-presentation-bijection",
                                 bad.empty(), count_of(r.weak_systems.size(), "system", "systems"), bad));
  }
  return r;
}

}  // namespace fincat
