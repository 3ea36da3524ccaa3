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

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fincat/arrow_category.hpp"
#include "fincat/cud.hpp"
#include "fincat/factorization.hpp"
#include "fincat/ideal.hpp"
#include "fincat/kernel.hpp"
#include "fincat/ladder.hpp"
#include "fincat/pointed.hpp"
#include "fincat/dsl/report.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

const std::vector<std::string> kSmall = {"c1", "c2", "c3", "m2", "sq"};

/// Collects the reasons a criterion fails.
struct Outcome {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::shared_ptr<const NullStructure>> shipped_structures(const std::string& name) {
  auto ws = oracle::fixture(name);
  std::vector<std::shared_ptr<const NullStructure>> out{ws->structure("h(" + name + ")")};
  for (const auto& [n, s] : ws->structures) out.push_back(s);
  for (const auto& d : ws->ideal_decls) out.push_back(ws->structure("disc(" + d.name + ")"));
  return out;
}

std::size_t mutation_sweep(const NullStructure& s, Outcome& o) {
  const Category& c = s.base();
  std::size_t caught = 0;
  for (std::size_t p = 0; p < s.homotopy_count(); ++p) {
    HomotopyId phi = static_cast<int>(p);
    for (ArrowId a : oracle::all_arrows(c))
      for (std::size_t q = 0; q < s.homotopy_count(); ++q) {
        HomotopyId psi = static_cast<int>(q);
        for (int side = 0; side < 2; ++side) {
          bool fits = side == 0 ? c.dom(a) == c.cod(s.carrier(phi)) : c.cod(a) == c.dom(s.carrier(phi));
          HomotopyId current = side == 0 ? s.left(a, phi) : s.right(phi, a);
          if (!fits || current == psi) continue;
          NullStructure::Builder b(s);
          if (side == 0)
            b.set_left(a, phi, psi);
          else
            b.set_right(phi, a, psi);
          NullStructure m = b.build();
          bool flagged = !validate_structure(m).empty();
          o.require(flagged == !oracle::structure_valid(m), "mutant of " + s.name() + " misjudged");
          caught += flagged;
        }
      }
  }
  return caught;
}

Outcome structure_laws() {
  Outcome o;
  std::size_t checked = 0, induced = 0;
  auto check = [&](const NullStructure& s) {
    ++checked;
    o.require(validate_structure(s).empty(), s.name() + " fails validate_structure");
    o.require(oracle::structure_valid(s), s.name() + " fails the law oracle");
  };
  for (const auto& name : kSmall) {
    auto ws = oracle::fixture(name);
    for (const auto& s : shipped_structures(name)) check(*s);
    for (const auto& [tname, t] : ws->transformations) {
      auto id = identity_functor(ws->category(name));
      if (same_functor(t.target, id)) check(induce_from_preradical(t, tname + "_pre").structure), ++induced;
      if (same_functor(t.source, id)) check(induce_from_precoradical(t, tname + "_co").structure), ++induced;
    }
    auto w = ws->arr(name);
    check(induce_from_preradical(w->string.beta(), "beta(" + name + ")").structure);
    check(induce_from_precoradical(w->string.gamma(), "gamma(" + name + ")").structure);
    induced += 2;
  }
  std::size_t caught = 0;
  auto c2 = oracle::fixture("c2");
  for (const char* ref : {"h(c2)", "thetab", "thetagamma", "thetasub"}) caught += mutation_sweep(*c2->structure(ref), o);
  caught += mutation_sweep(*oracle::fixture("m2")->structure("h(m2)"), o);
  o.require(caught > 0, "no mutant was caught");
  o.summary = std::to_string(checked) + " structures (" + std::to_string(induced) + " induced), " +
              std::to_string(caught) + " mutants caught";
  return o;
}

bool comparison_iso(const NullStructure& s, const HomotopyKernel& k1, const HomotopyKernel& k2) {
  const Category& c = s.base();
  int found = 0;
  for (ArrowId a : oracle::arrows_between(c, k1.object, k2.object))
    if (c.compose_raw(k2.arrow, a) == k1.arrow && s.right(k2.witness, a) == k1.witness) {
      if (!oracle::iso(c, a)) return false;
      ++found;
    }
  return found == 1;
}

bool strong_oracle(const NullStructure& s, ArrowId g, const HomotopyKernel& k) {
  const Category& c = s.base();
  for (ArrowId f : oracle::all_arrows(c)) {
    if (c.cod(f) != k.object) continue;
    for (HomotopyId phi : s.theta(c.compose_raw(k.arrow, f))) {
      if (s.left(g, phi) != s.right(k.witness, f)) continue;
      int lifts = 0;
      for (HomotopyId p : s.theta(f)) lifts += s.left(k.arrow, p) == phi;
      if (lifts != 1) return false;
    }
  }
  return true;
}

bool kernel_exists(const NullStructure& s, ArrowId g) {
  const Category& c = s.base();
  for (ArrowId n : oracle::all_arrows(c)) {
    if (c.cod(n) != c.dom(g)) continue;
    for (HomotopyId nu : s.theta(c.compose_raw(g, n)))
      if (oracle::kernel_oracle(s, g, n, nu)) return true;
  }
  return false;
}

Outcome kernel_equivalence() {
  Outcome o;
  std::size_t squares = 0;
  std::vector<std::string> absent;
  for (std::string name : {"c1", "c2", "c3", "m2"}) {
    auto w = oracle::fixture(name)->arr(name);
    const NullStructure& h = w->H();
    for (ArrowId g : oracle::all_arrows(*w->arr)) {
      ++squares;
      std::string where = w->arr->arrow_name(g) + " in Arr(" + name + ")";
      auto searched = search_homotopy_kernel(h, g);
      auto pulled = kernel_via_pullback(h, g);
      auto direct = h_kernel_direct(*w, g);
      bool exists = kernel_exists(h, g);
      o.require(searched.has_value() == exists && pulled.has_value() == exists && direct.has_value() == exists,
                "existence disagrees for " + where);
      if (!exists || !searched || !pulled || !direct) {
        if (!exists) absent.push_back(where);
        continue;
      }
      for (const HomotopyKernel* k : {&*searched, &*pulled, &*direct}) {
        o.require(oracle::kernel_oracle(h, g, k->arrow, k->witness), "not a kernel: " + where);
        o.require(check_strong_kernel(h, g, *k).strong && strong_oracle(h, g, *k), "not strong: " + where);
      }
      o.require(comparison_iso(h, *pulled, *searched) && comparison_iso(h, *direct, *searched),
                "no comparison iso for " + where);
      auto a = kernel_comparison(h, *pulled, *searched);
      o.require(a && oracle::iso(*w->arr, *a), "kernel_comparison is not an iso for " + where);
    }
  }
  o.summary = std::to_string(squares) + " squares";
  if (!absent.empty())
    o.summary += "; " + std::to_string(absent.size()) + " squares of Arr(m2) have no kernel and all three "
                 "constructions report none (m2 lacks the pullback of e along e)";
  return o;
}

Subset from_mask(std::size_t n, unsigned long long m) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1ULL) s.insert(static_cast<int>(i));
  return s;
}

bool retract_closed(const Category& c, const Subset& objects) {
  for (int y : objects.members())
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      if (objects.contains(static_cast<int>(x))) continue;
      for (ArrowId s : oracle::arrows_between(c, static_cast<int>(x), y))
        for (ArrowId r : oracle::arrows_between(c, y, static_cast<int>(x)))
          if (c.compose_raw(r, s) == c.identity(static_cast<int>(x))) return false;
    }
  return true;
}

Outcome ideal_calculus() {
  Outcome o;
  std::size_t subsets = 0, structures = 0;
  for (std::string name : {"c2", "c3", "m2"}) {
    auto c = oracle::category(name);
    std::size_t n = c->object_count(), m = c->arrow_count();
    std::size_t retract_closed_count = 0, closed_ideal_count = 0;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask, ++subsets) {
      Subset z0 = from_mask(n, mask);
      Subset i = generated_ideal(*c, z0);
      Subset ti = trivial_objects(*c, i);
      o.require(is_closed_ideal(*c, i), "i(Z0) not closed on " + name);
      o.require(z0.subset_of(ti), "Z0 not inside t(i(Z0)) on " + name);
      o.require(retract_closed(*c, ti), "t(i(Z0)) not retract-closed on " + name);
      for (unsigned long long other = 0; other < (1ULL << n); ++other) {
        Subset s = from_mask(n, other);
        if (z0.subset_of(s) && retract_closed(*c, s))
          o.require(ti.subset_of(s), "t(i(Z0)) not the smallest retract-closed superset on " + name);
      }
      if (retract_closed(*c, z0)) ++retract_closed_count;
    }
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask, ++subsets) {
      Subset z1 = from_mask(m, mask);
      if (!is_ideal(*c, z1)) continue;
      o.require(generated_ideal(*c, trivial_objects(*c, z1)).subset_of(z1), "i(t(Z1)) escapes Z1 on " + name);
      if (is_closed_ideal(*c, z1)) {
        ++closed_ideal_count;
        o.require(generated_ideal(*c, trivial_objects(*c, z1)) == z1, "closed ideal not fixed on " + name);
      }
    }
    o.require(retract_closed_count == closed_ideal_count, "i and t are not a bijection on " + name);
  }
  for (const auto& name : kSmall)
    for (const auto& s : shipped_structures(name)) {
      ++structures;
      Subset z = ideal_of(*s);
      NullStructure d = discrete_structure(s->base_ptr(), z, "d");
      o.require(ideal_of(d) == z, "ideal of the discrete structure differs for " + s->name());
      auto m = collapse_onto(*s, d);
      o.require(m && verify_morphism(*s, d, *m).empty(), "no collapse morphism for " + s->name());
    }
  o.summary = std::to_string(subsets) + " subsets, " + std::to_string(structures) + " structures";
  return o;
}

Outcome structure_comparison() {
  Outcome o;
  std::vector<std::string> names = kSmall;
  names.push_back("v2");
  for (const auto& name : names) {
    auto w = oracle::fixture(name)->arr(name);
    CudReport r = cud_compare(w->string);
    for (const auto& c : r.checks)
      o.require(c.verdict != Verdict::fail, name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  o.summary = "six arrow categories";
  return o;
}

Outcome torsion_suite() {
  Outcome o;
  std::size_t theories = 0;
  for (std::string name : {"c2", "c3"}) {
    auto w = oracle::fixture(name)->arr(name);
    auto found = enumerate_torsion_theories(w->H(), TTLevel::strict);
    auto expected = oracle::ArrTorsionOracle(*w->base).enumerate();
    std::vector<std::pair<oracle::Mask, oracle::Mask>> got;
    for (const auto& p : found) got.emplace_back(oracle::mask_of(p.torsion), oracle::mask_of(p.free));
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    o.require(got == expected, "enumeration on H(" + name + ") differs from the definition");
    Subset isos(w->arr->object_count());
    for (ArrowId f : oracle::all_arrows(*w->base))
      if (oracle::iso(*w->base, f)) isos.insert(f);
    for (const auto& p : found) {
      ++theories;
      TTVerdict v = check_torsion_theory(w->H(), p);
      for (const auto& r : torsion_theory_checks(w->H(), p, v))
        o.require(r.verdict == Verdict::pass, name + ": " + r.name + " " + r.detail);
      o.require((p.torsion & p.free) == isos, name + ": T and F do not meet in the isomorphisms");
      o.require(verify_reflection(w->H(), p, v).ok(), name + ": reflections fail");
    }
  }
  o.summary = std::to_string(theories) + " strict theories";
  return o;
}

Outcome counting() {
  Outcome o;
  struct Expect {
    std::string name;
    std::size_t orthogonal;
  };
  std::vector<std::string> counts;
  for (const Expect& e : {Expect{"c2", 2}, Expect{"c3", 3}, Expect{"m2", 2}}) {
    auto w = oracle::fixture(e.name)->arr(e.name);
    auto ofs = enumerate_fs(*w, FSLevel::orthogonal);
    auto wfs = enumerate_fs(*w, FSLevel::weak);
    auto hand = oracle::factorization_systems(*w->base, true);
    counts.push_back(e.name + "=" + std::to_string(ofs.size()));
    o.require(ofs.size() == e.orthogonal, "enumerate_fs(" + e.name + ", orthogonal) = " + std::to_string(ofs.size()) +
                                              ", expected " + std::to_string(e.orthogonal) + " (lifting oracle finds " +
                                              std::to_string(hand.size()) + ")");
    if (e.name == "m2") o.require(wfs.size() == ofs.size(), "m2 has extra weak systems");
    auto htt = enumerate_torsion_theories(w->H(), TTLevel::strict);
    auto whtt = enumerate_torsion_theories(w->H(), TTLevel::weak);
    o.require(htt.size() == ofs.size(), e.name + ": theory count " + std::to_string(htt.size()) + " differs");
    o.require(whtt.size() == wfs.size(), e.name + ": weak theory count differs");
    std::set<std::pair<oracle::Mask, oracle::Mask>> images, listed;
    for (const auto& p : htt) listed.insert({oracle::mask_of(p.torsion), oracle::mask_of(p.free)});
    for (const auto& fs : ofs) {
      TorsionPair p = fs_to_htt(*w, fs, FSLevel::orthogonal);
      images.insert({oracle::mask_of(p.torsion), oracle::mask_of(p.free)});
      FactorizationSystem back = htt_to_fs(*w, p, TTLevel::strict);
      o.require(back.e == fs.e && back.m == fs.m, e.name + ": round trip through theories is not the identity");
    }
    o.require(images == listed && images.size() == ofs.size(), e.name + ": fs_to_htt is not a bijection");
    for (const auto& p : htt) {
      FactorizationSystem fs = htt_to_fs(*w, p, TTLevel::strict);
      TorsionPair back = fs_to_htt(*w, fs, FSLevel::orthogonal);
      o.require(back.torsion == p.torsion && back.free == p.free, e.name + ": round trip through systems fails");
    }
  }
  o.summary = "orthogonal systems " + join(counts, ", ");
  return o;
}

Outcome ladder() {
  Outcome o;
  std::set<std::string> expected_skips = {"quasi-proper-weak-is-orthogonal", "quasi-proper-weak-is-proper",
                                          "discrete-to-quasi-proper-htt", "proper-ofs-discrete-correspondence"};
  std::size_t rungs = 0;
  for (const auto& name : kSmall) {
    auto w = oracle::fixture(name)->arr(name);
    LadderReport r = verify_correspondence(*w);
    std::set<std::string> skipped;
    for (const auto& rung : r.rungs) {
      ++rungs;
      o.require(rung.verdict != Verdict::fail, name + ": " + rung.name);
      if (rung.verdict == Verdict::not_applicable) skipped.insert(rung.anchor);
    }
    if (name == "m2")
      o.require(skipped == expected_skips, "m2 skips the wrong rungs");
    else
      o.require(skipped.empty(), name + " skips rungs");
  }
  o.summary = std::to_string(rungs) + " rungs, 4 skipped on m2";
  return o;
}

std::set<int> dimensions(const Category& c, const Subset& objects) {
  std::set<int> out;
  for (int x : objects.members()) out.insert(oracle::dimension(c.object_name(x)));
  return out;
}

Outcome pointed() {
  Outcome o;
  PointedResult r = build_pointed(oracle::category("v2"));
  if (!r.workspace) {
    o.require(false, "build_pointed(v2) failed: " + r.failed_hypothesis);
    return o;
  }
  const PointedWorkspace& w = *r.workspace;
  const Category& a = w.base();
  for (const auto& c : w.checks) o.require(c.verdict == Verdict::pass, c.name);
  auto found = enumerate_z1_torsion_theories(a, w.z1_zero);
  auto expected = oracle::vector_space_theories();
  std::set<std::pair<std::set<int>, std::set<int>>> got;
  for (const auto& p : found) got.insert({dimensions(a, p.torsion), dimensions(a, p.free)});
  o.require(found.size() == 2 && got == std::set(expected.begin(), expected.end()),
            "zero-ideal theories differ from the dimension oracle");
  for (const auto& p : found) {
    LiftedTheory lt = lift_pointed_tt(w, p);
    o.require(lt.verdict.z1_tt, "lift of " + p.name + " is not a theory");
    o.require(lt.induced, "lift of " + p.name + " fails the induced criterion");
  }
  TorsionPair hand{"hand", Subset(a.arrow_count()), Subset(a.arrow_count())};
  for (ArrowId x : oracle::all_arrows(a)) {
    if (oracle::epi(a, x)) hand.torsion.insert(x);
    if (oracle::rank(oracle::matrix_of(a, x)) == 0) hand.free.insert(x);
  }
  o.require(check_z1_torsion_theory(w.arrows(), w.z1_lambda, hand).z1_tt, "hand-built theory is not a theory");
  o.require(!induced_by_base(w, hand), "hand-built theory passes the induced criterion");
  o.summary = std::to_string(w.arrows().arrow_count()) + " squares, 2 theories lifted";
  return o;
}

Outcome discrete_bridge() {
  Outcome o;
  std::size_t structures = 0, closed_theories = 0;
  std::vector<std::string> names = kSmall;
  names.push_back("v2");
  for (const auto& name : names) {
    auto ws = oracle::fixture(name);
    std::vector<std::shared_ptr<const NullStructure>> candidates;
    if (name == "v2")
      candidates.push_back(ws->structure("zero(v2)"));
    else
      candidates = shipped_structures(name);
    for (const auto& s : candidates) {
      if (!s->is_discrete()) continue;
      ++structures;
      Subset z = ideal_of(*s);
      auto pairs = enumerate_z1_torsion_theories(s->base(), z);
      for (const auto& d : ws->pair_decls)
        if (ws->structure(d.structure) == s)
          pairs.push_back({d.name, ws->pair_torsion.at(d.name), ws->pair_free.at(d.name)});
      for (const auto& r : discrete_bridge_checks(*s, pairs))
        o.require(r.verdict != Verdict::fail, s->name() + ": " + r.name);
      if (!is_closed_ideal(s->base(), z)) continue;
      for (const auto& p : enumerate_z1_torsion_theories(s->base(), z)) {
        ++closed_theories;
        auto v = check_z1_torsion_theory(s->base(), z, p);
        o.require(v.pretorsion && *v.pretorsion, s->name() + ": " + p.name + " is not a pretorsion theory");
        o.require(generated_ideal(s->base(), p.torsion & p.free) == z, s->name() + ": i(T n F) differs");
      }
    }
  }
  o.summary = std::to_string(structures) + " discrete structures, " + std::to_string(closed_theories) +
              " closed-ideal theories";
  return o;
}

struct Run {
  std::string output;
  int exit_code = -1;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(FINCAT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.output.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> cli_invocations() {
  std::vector<std::string> out;
  for (std::string name : {"c1", "c2", "c3", "m2", "sq", "v2"}) {
    auto ws = oracle::fixture(name);
    std::string in = "-i " + std::string(FINCAT_FIXTURES) + "/" + name + ".fincat --format json ";
    std::string h = "'h(" + name + ")'";
    out.push_back(in + "validate");
    out.push_back(in + "analyze " + name);
    out.push_back(in + "print");
    out.push_back(in + "arr " + name);
    auto w = ws->arr(name);
    for (ArrowId g = 0; g < static_cast<ArrowId>(std::min<std::size_t>(3, w->arr->arrow_count())); ++g) {
      out.push_back(in + "kernel " + h + " " + w->arr->arrow_name(g));
      out.push_back(in + "kernel " + h + " " + w->arr->arrow_name(g) + " --via-pullback --strong");
    }
    for (const auto& d : ws->pair_decls) {
      out.push_back(in + "check-htt '" + d.structure + "' " + d.name);
      out.push_back(in + "check-htt '" + d.structure + "' " + d.name + " --weak --quasi-proper");
      out.push_back(in + "convert htt-to-fs " + d.name);
    }
    for (const auto& d : ws->system_decls) {
      out.push_back(in + "check-fs " + name + " " + d.name);
      out.push_back(in + "check-fs " + name + " " + d.name + " --weak");
      out.push_back(in + "convert fs-to-htt " + d.name);
    }
    out.push_back(in + "enumerate fs " + name);
    out.push_back(in + "enumerate fs " + name + " --level weak");
    for (const char* lv : {"strict", "weak", "ideal"}) out.push_back(in + "enumerate htt " + h + " --level " + lv);
    out.push_back(in + "ladder " + name);
    out.push_back(in + "pointed " + name);
    for (const auto& d : ws->pair_decls)
      if (name == "v2") out.push_back(in + "pointed v2 --lift " + d.name);
  }
  return out;
}

Outcome determinism() {
  Outcome o;
  std::size_t runs = 0, reports = 0;
  for (const auto& args : cli_invocations()) {
    Run a = run_cli(args), b = run_cli(args);
    ++runs;
    o.require(a.exit_code >= 0 && a.exit_code <= 3, "bad exit code " + std::to_string(a.exit_code) + " for " + args);
    o.require(a.output == b.output && a.exit_code == b.exit_code, "output differs for " + args);
    if ((a.exit_code == 0 || a.exit_code == 1) && args.find(" print") == std::string::npos) {
      try {
        auto r = dsl::parse_report_json(a.output);
        o.require(dsl::emit_json(r) == a.output, "report does not round trip for " + args);
        ++reports;
      } catch (const Error& e) {
        o.require(false, "malformed report for " + args + ": " + e.what());
      }
    }
  }
  o.summary = std::to_string(runs) + " commands run twice, " + std::to_string(reports) + " json reports";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "structure laws and mutation tests", structure_laws},
      {2, "kernel constructions agree on Arr(c1), Arr(c2), Arr(c3), Arr(m2)", kernel_equivalence},
      {3, "ideal calculus on every subset", ideal_calculus},
      {4, "structure comparison on every arrow category", structure_comparison},
      {5, "strict torsion theory suite on H(c2), H(c3)", torsion_suite},
      {6, "factorization system and torsion theory counts", counting},
      {7, "correspondence ladder", ladder},
      {8, "pointed case on V2", pointed},
      {9, "discrete bridge", discrete_bridge},
      {10, "deterministic CLI reports", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.problems.empty();
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    if (!o.summary.empty()) line << " [" << o.summary << "]";
    line.precision(2);
    line << std::fixed << " (" << secs << "s)";
    std::cout << line.str() << "\n";
    for (std::size_t i = 0; i < o.problems.size() && i < 8; ++i) std::cout << "    " << o.problems[i] << "\n";
    if (o.problems.size() > 8) std::cout << "    ... " << o.problems.size() - 8 << " more\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
