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

#include "fincat/dsl/commands.hpp"

#include "fincat/caps.hpp"
#include "fincat/cud.hpp"
#include "fincat/factorization.hpp"
#include "fincat/ideal.hpp"
#include "fincat/kernel.hpp"
#include "fincat/ladder.hpp"
#include "fincat/limits.hpp"
#include "fincat/pointed.hpp"
#include "fincat/torsion.hpp"

namespace fincat::dsl {

using nlohmann::ordered_json;

const std::vector<std::string>& command_usage() {
  static const std::vector<std::string> lines = {
      "validate",
      "analyze <category>",
      "arr <category>",
      "kernel <structure> <arrow> [--via-pullback] [--strong]",
      "check-htt <structure> <pair> [--weak] [--quasi-proper]",
      "check-fs <category> <system> [--weak]",
      "convert fs-to-htt <system> [--weak] | convert htt-to-fs <pair> [--weak]",
      "enumerate fs <category> [--level orthogonal|weak] [--cap N]",
      "enumerate htt <structure> [--level strict|weak|ideal] [--cap N]",
      "ladder <category>",
      "pointed <category> [--lift <pair>]",
  };
  return lines;
}

namespace {

std::string first_message(const std::vector<Diagnostic>& ds) {
  return ds.empty() ? "" : ds.front().law + ": " + ds.front().message;
}

std::vector<std::string> diagnostic_witnesses(const Category& c, const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  if (ds.empty()) return out;
  for (ArrowId a : ds.front().witnesses) out.push_back(c.arrow_name(a));
  return out;
}

CheckRecord diagnostics_check(const std::string& name, const std::string& anchor, const Category& c,
                              const std::vector<Diagnostic>& ds) {
  return make_check(name, anchor, ds.empty(), first_message(ds), diagnostic_witnesses(c, ds));
}

void arity(const Invocation& inv, std::size_t n) {
  if (inv.args.size() != n)
    throw UsageError("'" + inv.command + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
}

std::shared_ptr<const NullStructure> structure_ref(const Workspace& ws, const std::string& ref) {
  try {
    return ws.structure(ref);
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

CategoryPtr category_ref(const Workspace& ws, const std::string& name) {
  auto it = ws.categories.find(name);
  if (it == ws.categories.end()) throw UsageError("unknown category '" + name + "'");
  return it->second;
}

const PairDecl& pair_decl(const Workspace& ws, const std::string& name) {
  for (const auto& d : ws.pair_decls)
    if (d.name == name) return d;
  throw UsageError("unknown pair '" + name + "'");
}

TorsionPair pair_ref(const Workspace& ws, const std::string& name) {
  pair_decl(ws, name);
  return TorsionPair{name, ws.pair_torsion.at(name), ws.pair_free.at(name)};
}

const SystemDecl& system_decl(const Workspace& ws, const std::string& name) {
  for (const auto& d : ws.system_decls)
    if (d.name == name) return d;
  throw UsageError("unknown system '" + name + "'");
}

FactorizationSystem system_ref(const Workspace& ws, const std::string& name) {
  system_decl(ws, name);
  return FactorizationSystem{name, ws.system_e.at(name), ws.system_m.at(name)};
}

std::vector<std::string> names_of(const Category& c, const Subset& s, bool objects) {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(objects ? c.object_name(i) : c.arrow_name(i));
  return out;
}

ordered_json pair_json(const Category& c, const TorsionPair& p) {
  ordered_json j;
  j["name"] = p.name;
  j["torsion"] = names_of(c, p.torsion, true);
  j["free"] = names_of(c, p.free, true);
  return j;
}

ordered_json system_json(const Category& c, const FactorizationSystem& fs) {
  ordered_json j;
  j["name"] = fs.name;
  j["e"] = names_of(c, fs.e, false);
  j["m"] = names_of(c, fs.m, false);
  return j;
}

std::string optional_object(const Category& c, const std::optional<ObjectId>& x) {
  return x ? c.object_name(*x) : "none";
}

/// The category a structure reference like h(CAT) is built from.
std::optional<std::string> h_category(const std::string& ref) {
  if (ref.size() > 3 && ref.rfind("h(", 0) == 0 && ref.back() == ')') return ref.substr(2, ref.size() - 3);
  return std::nullopt;
}

std::string count(std::size_t n, const std::string& one, const std::string& many = "") {
  return std::to_string(n) + " " + (n == 1 ? one : many.empty() ? one + "s" : many);
}

Report validate(const Workspace& ws) {
  Report r;
  for (const auto& d : ws.category_decls) {
    const Category& c = *ws.categories.at(d.name);
    r.facts["category " + d.name] = count(c.object_count(), "object") + ", " + count(c.arrow_count(), "arrow");
    r.checks.push_back(diagnostics_check("category " + d.name + " satisfies the category laws", "category-laws", c,
                                         validate_category(c)));
  }
  for (const auto& [name, s] : ws.structures) {
    auto it = ws.induced.find(name);
    std::string kind = it == ws.induced.end() ? "declared" : "induced";
    r.facts["structure " + name] = kind + ", " + count(s->homotopy_count(), "homotopy", "homotopies");
    r.checks.push_back(diagnostics_check("structure " + name + " satisfies the structure laws", "structure-laws",
                                         s->base(), validate_structure(*s)));
  }
  for (const auto& d : ws.ideal_decls) {
    const Category& c = *ws.categories.at(d.category);
    const Subset& z = ws.ideals.at(d.name);
    auto v = classify_ideal(c, z);
    std::vector<std::string> wit;
    if (v.witness) wit.push_back(c.arrow_name(*v.witness));
    if (v.escaping_composite) wit.push_back(c.arrow_name(*v.escaping_composite));
    const char* kind = v.kind == IdealKind::closed ? "closed ideal" : v.kind == IdealKind::ideal ? "ideal" : "not an ideal";
    r.facts["ideal " + d.name] = kind;
    r.checks.push_back(make_check("ideal " + d.name + " absorbs composition", "ideal", v.kind != IdealKind::not_ideal,
                                  kind, wit));
    if (v.kind != IdealKind::not_ideal) {
      auto s = ws.structure("disc(" + d.name + ")");
      r.checks.push_back(diagnostics_check("disc(" + d.name + ") satisfies the structure laws", "structure-laws", c,
                                           validate_structure(*s)));
    }
  }
  for (const auto& d : ws.functor_decls) {
    const Functor& f = ws.functors.at(d.name);
    r.checks.push_back(diagnostics_check("functor " + d.name + " preserves identities and composition",
                                         "functor-laws", *f.src, verify_functor(f)));
  }
  for (const auto& d : ws.transformation_decls) {
    const NatTrans& t = ws.transformations.at(d.name);
    r.checks.push_back(diagnostics_check("transformation " + d.name + " is natural", "naturality", *t.source.src,
                                         verify_nat_trans(t)));
  }
  for (const auto& d : ws.adjunction_decls) {
    const Adjunction& a = ws.adjunctions.at(d.name);
    auto ds = verify_adjunction(a);
    r.checks.push_back(make_check("adjunction " + d.name + " satisfies the triangle identities", "triangle-identities",
                                  ds.empty(), first_message(ds)));
  }
  for (const auto& d : ws.pair_decls) {
    const Category& c = ws.structure(d.structure)->base();
    r.facts["pair " + d.name] = "on " + d.structure + ", torsion " + describe(c, ws.pair_torsion.at(d.name)) +
                                ", free " + describe(c, ws.pair_free.at(d.name));
  }
  for (const auto& d : ws.system_decls) {
    r.facts["system " + d.name] = "on " + d.category + ", " + count(ws.system_e.at(d.name).members().size(), "arrow") +
                                  " in E, " + count(ws.system_m.at(d.name).members().size(), "arrow") + " in M";
  }
  return r;
}

Report analyze(const Workspace& ws, const Invocation& inv) {
  arity(inv, 1);
  CategoryPtr cp = category_ref(ws, inv.args[0]);
  const Category& c = *cp;
  Report r;
  r.facts["objects"] = c.object_count();
  r.facts["arrows"] = c.arrow_count();
  auto dist = find_distinguished(c);
  r.facts["initial"] = optional_object(c, dist.initial);
  r.facts["terminal"] = optional_object(c, dist.terminal);
  r.facts["zero"] = optional_object(c, dist.zero);
  ordered_json arrows = ordered_json::object();
  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    ArrowId g = static_cast<int>(i);
    auto k = classify_arrow(c, g);
    std::string s = c.object_name(c.dom(g)) + " -> " + c.object_name(c.cod(g)) + ":";
    if (k.iso())
      s += " iso";
    else {
      if (k.split_mono())
        s += " split-mono";
      else if (k.mono)
        s += " mono";
      if (k.split_epi())
        s += " split-epi";
      else if (k.epi)
        s += " epi";
    }
    arrows[c.arrow_name(g)] = s;
  }
  r.facts["classification"] = arrows;
  r.checks.push_back(diagnostics_check("category laws", "category-laws", c, validate_category(c)));
  return r;
}

Report arr(const Workspace& ws, const Invocation& inv) {
  arity(inv, 1);
  category_ref(ws, inv.args[0]);
  auto w = ws.arr(inv.args[0]);
  const Category& a = *w->arr;
  Report r;
  r.facts["base arrows"] = w->base->arrow_count();
  r.facts["objects"] = a.object_count();
  r.facts["squares"] = a.arrow_count();
  r.facts["homotopies"] = w->H().homotopy_count();
  r.facts["z1 squares"] = w->z1.members().size();
  r.facts["trivial objects"] = names_of(a, trivial_objects(w->H()), true);
  r.checks.push_back(diagnostics_check("string C -| U -| D", "prepointed-string", a, verify_string(w->string)));
  double work = validation_work(w->H());
  if (work <= induced_validation_budget)
    r.checks.push_back(diagnostics_check("H satisfies the structure laws", "structure-laws", a, validate_structure(w->H())));
  else
    r.checks.push_back({"H satisfies the structure laws", "structure-laws", Verdict::not_applicable,
                        "needs " + std::to_string(static_cast<long long>(work)) + " table lookups, over the budget of " +
                            std::to_string(static_cast<long long>(induced_validation_budget)),
                        {}});
  r.checks.push_back(h_matches_pair_structure(*w));
  for (auto& c : arr_checks(*w)) r.checks.push_back(std::move(c));
  for (auto& c : cud_compare(w->string).checks) r.checks.push_back(std::move(c));
  return r;
}

std::string kernel_text(const NullStructure& s, const HomotopyKernel& k) {
  const Category& c = s.base();
  return c.arrow_name(k.arrow) + ": " + c.object_name(c.dom(k.arrow)) + " -> " + c.object_name(c.cod(k.arrow)) +
         " with " + s.label(k.witness);
}

Report kernel(const Workspace& ws, const Invocation& inv) {
  arity(inv, 2);
  auto sp = structure_ref(ws, inv.args[0]);
  const NullStructure& s = *sp;
  const Category& c = s.base();
  auto g = c.find_arrow(inv.args[1]);
  if (!g) throw UsageError("unknown arrow '" + inv.args[1] + "' in " + c.name());
  Report r;
  r.facts["arrow"] = inv.args[1] + ": " + c.object_name(c.dom(*g)) + " -> " + c.object_name(c.cod(*g));
  auto k = search_homotopy_kernel(s, *g);
  r.facts["kernel"] = k ? kernel_text(s, *k) : "none";
  auto q = search_homotopy_cokernel(s, *g);
  r.facts["cokernel"] = q ? kernel_text(s, *q) : "none";
  r.checks.push_back(make_check("homotopy kernel exists", "homotopy-kernel", k.has_value()));
  if (!k) return r;
  auto agrees = [&](const std::optional<HomotopyKernel>& other) {
    if (!other) return false;
    auto a = kernel_comparison(s, *other, *k);
    return a && c.is_iso(*a);
  };
  if (inv.via_pullback) {
    auto p = kernel_via_pullback(s, *g);
    r.facts["kernel via pullback"] = p ? kernel_text(s, *p) : "none";
    r.checks.push_back(make_check("pullback kernel agrees with the searched kernel", "kernel-via-pullback", agrees(p),
                                  p ? "comparison is invertible" : "no pullback kernel"));
  }
  if (auto cat = h_category(inv.args[0])) {
    auto d = h_kernel_direct(*ws.arr(*cat), *g);
    r.facts["direct kernel"] = d ? kernel_text(s, *d) : "none";
    r.checks.push_back(make_check("direct kernel agrees with the searched kernel", "arr-kernel-direct", agrees(d)));
  }
  if (inv.strong) {
    auto v = check_strong_kernel(s, *g, *k);
    std::vector<std::string> wit;
    if (v.arrow) wit.push_back(c.arrow_name(*v.arrow));
    if (v.homotopy) wit.push_back(s.label(*v.homotopy));
    r.checks.push_back(make_check("kernel is strong", "strong-kernel", v.strong,
                                  v.strong ? "" : count_of(v.lifts, "lift", "lifts"), wit));
  }
  return r;
}

Report check_htt(const Workspace& ws, const Invocation& inv) {
  arity(inv, 2);
  auto sp = structure_ref(ws, inv.args[0]);
  const NullStructure& s = *sp;
  const Category& c = s.base();
  TorsionPair p = pair_ref(ws, inv.args[1]);
  const Category& pc = ws.structure(pair_decl(ws, p.name).structure)->base();
  if (pc.object_count() != c.object_count())
    throw UsageError("pair " + p.name + " lives on " + pc.name() + ", not on " + c.name());
  Report r;
  r.facts["pair"] = pair_json(c, p);
  auto v = check_torsion_theory(s, p);
  r.facts["level"] = to_string(v.level);
  r.facts["replete"] = v.replete;
  r.facts["quasi-proper"] = v.quasi_proper;
  TTLevel wanted = inv.weak ? TTLevel::weak : TTLevel::strict;
  r.checks.push_back(make_check(inv.weak ? "weak torsion theory" : "torsion theory", "homotopy-torsion-theory",
                                v.at_least(wanted), v.failure, v.witnesses));
  if (inv.quasi_proper)
    r.checks.push_back(make_check("quasi-proper", "quasi-proper-torsion-theory", v.quasi_proper));
  if (v.level == TTLevel::strict)
    for (auto& rec : torsion_theory_checks(s, p, v)) r.checks.push_back(std::move(rec));
  if (s.is_discrete())
    for (auto& rec : discrete_bridge_checks(s, {p})) r.checks.push_back(std::move(rec));
  return r;
}

Report check_fs(const Workspace& ws, const Invocation& inv) {
  arity(inv, 2);
  category_ref(ws, inv.args[0]);
  FactorizationSystem fs = system_ref(ws, inv.args[1]);
  if (system_decl(ws, fs.name).category != inv.args[0])
    throw UsageError("system " + fs.name + " is not declared on " + inv.args[0]);
  auto w = ws.arr(inv.args[0]);
  auto v = check_factorization_system(*w, fs);
  Report r;
  r.facts["system"] = system_json(*w->base, fs);
  r.facts["level"] = to_string(v.level);
  r.facts["iso-stable"] = v.iso_stable;
  r.facts["factorizes"] = v.factorizes;
  r.facts["proper"] = v.proper;
  r.facts["quasi-proper"] = v.quasi_proper;
  FSLevel wanted = inv.weak ? FSLevel::weak : FSLevel::orthogonal;
  r.checks.push_back(make_check(inv.weak ? "weakly orthogonal factorization system" : "orthogonal factorization system",
                                "factorization-system", v.at_least(wanted), v.failure, v.witnesses));
  return r;
}

Report convert(const Workspace& ws, const Invocation& inv) {
  arity(inv, 2);
  Report r;
  if (inv.args[0] == "fs-to-htt") {
    FactorizationSystem fs = system_ref(ws, inv.args[1]);
    auto w = ws.arr(system_decl(ws, fs.name).category);
    FSLevel level = inv.weak ? FSLevel::weak : FSLevel::orthogonal;
    TorsionPair p;
    try {
      p = fs_to_htt(*w, fs, level);
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      r.checks.push_back(make_check("system converts to a torsion theory", "ofs-htt-correspondence", false, e.what()));
      return r;
    }
    r.facts["system"] = system_json(*w->base, fs);
    r.facts["theory"] = pair_json(*w->arr, p);
    FactorizationSystem back = htt_to_fs(*w, p, inv.weak ? TTLevel::weak : TTLevel::strict);
    r.checks.push_back(make_check("system converts to a torsion theory", "ofs-htt-correspondence", true));
    r.checks.push_back(make_check("converting back returns the system", "ofs-htt-correspondence",
                                  back.e == fs.e && back.m == fs.m));
    return r;
  }
  if (inv.args[0] == "htt-to-fs") {
    TorsionPair p = pair_ref(ws, inv.args[1]);
    auto cat = h_category(pair_decl(ws, p.name).structure);
    if (!cat) throw UsageError("pair " + p.name + " must be declared on h(CATEGORY)");
    auto w = ws.arr(*cat);
    TTLevel level = inv.weak ? TTLevel::weak : TTLevel::strict;
    FactorizationSystem fs;
    try {
      fs = htt_to_fs(*w, p, level);
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      r.checks.push_back(make_check("theory converts to a factorization system", "ofs-htt-correspondence", false,
                                    e.what()));
      return r;
    }
    r.facts["theory"] = pair_json(*w->arr, p);
    r.facts["system"] = system_json(*w->base, fs);
    TorsionPair back = fs_to_htt(*w, fs, inv.weak ? FSLevel::weak : FSLevel::orthogonal);
    r.checks.push_back(make_check("theory converts to a factorization system", "ofs-htt-correspondence", true));
    r.checks.push_back(make_check("converting back returns the theory", "ofs-htt-correspondence",
                                  back.torsion == p.torsion && back.free == p.free));
    return r;
  }
  throw UsageError("convert takes fs-to-htt or htt-to-fs");
}

Report enumerate(const Workspace& ws, const Invocation& inv) {
  arity(inv, 2);
  Report r;
  if (inv.args[0] == "fs") {
    category_ref(ws, inv.args[1]);
    std::string lv = inv.level.value_or("orthogonal");
    FSLevel level;
    if (lv == "orthogonal")
      level = FSLevel::orthogonal;
    else if (lv == "weak")
      level = FSLevel::weak;
    else
      throw UsageError("enumerate fs takes --level orthogonal or weak");
    long long cap = inv.cap.value_or(caps().fs_arrows);
    require_cap("fs", cap, static_cast<long long>(ws.category(inv.args[1])->arrow_count()));
    auto w = ws.arr(inv.args[1]);
    auto list = enumerate_fs(*w, level, cap);
    r.facts["level"] = lv;
    r.facts["count"] = list.size();
    ordered_json items = ordered_json::array();
    for (const auto& fs : list) items.push_back(system_json(*w->base, fs));
    r.facts["systems"] = items;
    return r;
  }
  if (inv.args[0] == "htt") {
    auto sp = structure_ref(ws, inv.args[1]);
    std::string lv = inv.level.value_or("strict");
    long long cap = inv.cap.value_or(caps().tt_iso_classes);
    std::vector<TorsionPair> list;
    if (lv == "strict")
      list = enumerate_torsion_theories(*sp, TTLevel::strict, cap);
    else if (lv == "weak")
      list = enumerate_torsion_theories(*sp, TTLevel::weak, cap);
    else if (lv == "ideal")
      list = enumerate_z1_torsion_theories(sp->base(), ideal_of(*sp), cap);
    else
      throw UsageError("enumerate htt takes --level strict, weak or ideal");
    r.facts["level"] = lv;
    r.facts["count"] = list.size();
    ordered_json items = ordered_json::array();
    for (const auto& p : list) items.push_back(pair_json(sp->base(), p));
    r.facts["theories"] = items;
    return r;
  }
  throw UsageError("enumerate takes fs or htt");
}

Report ladder(const Workspace& ws, const Invocation& inv) {
  arity(inv, 1);
  category_ref(ws, inv.args[0]);
  require_cap("ladder", caps().ladder_base_arrows,
              static_cast<long long>(ws.category(inv.args[0])->arrow_count()));
  auto w = ws.arr(inv.args[0]);
  auto lr = verify_correspondence(*w);
  Report r;
  r.facts["orthogonal systems"] = lr.orthogonal_systems.size();
  r.facts["weak systems"] = lr.weak_systems.size();
  r.facts["torsion theories"] = lr.strict_theories.size();
  r.facts["weak torsion theories"] = lr.weak_theories.size();
  r.facts["ideal torsion theories"] = lr.discrete_theories.size();
  r.checks = std::move(lr.rungs);
  return r;
}

Report pointed(const Workspace& ws, const Invocation& inv) {
  arity(inv, 1);
  CategoryPtr cp = category_ref(ws, inv.args[0]);
  const Category& a = *cp;
  require_cap("arr", caps().arr_base_arrows, static_cast<long long>(a.arrow_count()));
  Report r;
  auto res = build_pointed(cp);
  if (!res.workspace) {
    r.checks.push_back(make_check("zero object, kernels and cokernels exist", "pointed-hypotheses", false,
                                  res.failed_hypothesis));
    return r;
  }
  const PointedWorkspace& w = *res.workspace;
  r.facts["zero"] = a.object_name(w.zero);
  r.facts["zero arrows"] = w.z1_zero.members().size();
  ordered_json kernels = ordered_json::object(), cokernels = ordered_json::object();
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    kernels[a.arrow_name(static_cast<int>(i))] = a.arrow_name(w.kernel[i]);
    cokernels[a.arrow_name(static_cast<int>(i))] = a.arrow_name(w.cokernel[i]);
  }
  r.facts["chosen kernels"] = kernels;
  r.facts["chosen cokernels"] = cokernels;
  r.facts["lambda squares"] = w.z1_lambda.members().size();
  r.checks.push_back(make_check("zero object, kernels and cokernels exist", "pointed-hypotheses", true));
  for (const auto& c : w.checks) r.checks.push_back(c);
  auto base_theories = enumerate_z1_torsion_theories(a, w.z1_zero);
  ordered_json items = ordered_json::array();
  for (const auto& p : base_theories) items.push_back(pair_json(a, p));
  r.facts["zero-ideal torsion theories"] = items;
  if (inv.lift) {
    TorsionPair p = pair_ref(ws, *inv.lift);
    const Category& pc = ws.structure(pair_decl(ws, p.name).structure)->base();
    if (pc.name() != a.name()) throw UsageError("pair " + p.name + " is not a pair on " + a.name());
    LiftedTheory lt;
    try {
      lt = lift_pointed_tt(w, p);
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      r.checks.push_back(make_check("base pair is a torsion theory for the zero arrows", "pointed-lift", false,
                                    e.what()));
      return r;
    }
    r.facts["lifted"] = pair_json(w.arrows(), lt.pair);
    r.facts["induced by the base"] = lt.induced;
    r.checks.push_back(make_check("lifted pair is a torsion theory for the lambda ideal", "pointed-lift",
                                  lt.verdict.z1_tt, lt.verdict.failure, lt.verdict.witnesses));
    r.checks.push_back(make_check("lifted pair satisfies the induced criterion", "pointed-induced-criterion",
                                  lt.induced));
  }
  return r;
}

std::string echo(const Invocation& inv) {
  std::string out = inv.command;
  for (const auto& a : inv.args) out += " " + a;
  if (inv.via_pullback) out += " --via-pullback";
  if (inv.strong) out += " --strong";
  if (inv.weak) out += " --weak";
  if (inv.quasi_proper) out += " --quasi-proper";
  if (inv.level) out += " --level " + *inv.level;
  if (inv.cap) out += " --cap " + std::to_string(*inv.cap);
  if (inv.lift) out += " --lift " + *inv.lift;
  return out;
}

}  // namespace

Report run_command(const Workspace& ws, const Invocation& inv) {
  Report r;
  const std::string& c = inv.command;
  if (c == "validate") {
    arity(inv, 0);
    r = validate(ws);
  } else if (c == "analyze") {
    r = analyze(ws, inv);
  } else if (c == "arr") {
    r = arr(ws, inv);
  } else if (c == "kernel") {
    r = kernel(ws, inv);
  } else if (c == "check-htt") {
    r = check_htt(ws, inv);
  } else if (c == "check-fs") {
    r = check_fs(ws, inv);
  } else if (c == "convert") {
    r = convert(ws, inv);
  } else if (c == "enumerate") {
    r = enumerate(ws, inv);
  } else if (c == "ladder") {
    r = ladder(ws, inv);
  } else if (c == "pointed") {
    r = pointed(ws, inv);
  } else {
    throw UsageError("unknown command '" + c + "'");
  }
  r.command = echo(inv);
  r.warnings = ws.warnings;
  r.status = status_of(r.checks);
  return r;
}

}  // namespace fincat::dsl
