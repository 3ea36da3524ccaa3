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

#include <doctest.h>

#include <algorithm>

#include "fincat/arrow_category.hpp"
#include "fincat/ideal.hpp"
#include "fincat/torsion.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

std::vector<std::pair<oracle::Mask, oracle::Mask>> masks(const std::vector<TorsionPair>& ps) {
  std::vector<std::pair<oracle::Mask, oracle::Mask>> out;
  for (const auto& p : ps) out.emplace_back(oracle::mask_of(p.torsion), oracle::mask_of(p.free));
  std::sort(out.begin(), out.end());
  return out;
}

TorsionPair pair_named(const Category& c, const std::vector<std::string>& t, const std::vector<std::string>& f) {
  TorsionPair p{"p", Subset(c.object_count()), Subset(c.object_count())};
  for (const auto& n : t) p.torsion.insert(*c.find_object(n));
  for (const auto& n : f) p.free.insert(*c.find_object(n));
  return p;
}

}  // namespace

TEST_CASE("strict theories on H(A) match the definition") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    auto expected = oracle::ArrTorsionOracle(*w->base).enumerate();
    std::sort(expected.begin(), expected.end());
    CHECK(masks(enumerate_torsion_theories(w->H(), TTLevel::strict)) == expected);
  }
}

TEST_CASE("the two theories on H(c2)") {
  auto w = oracle::fixture("c2")->arr("c2");
  const Category& arr = *w->arr;
  auto found = enumerate_torsion_theories(w->H(), TTLevel::strict);
  REQUIRE(found.size() == 2);
  CHECK(describe(arr, found[0].torsion) == "{id_a id_b}");
  CHECK(found[0].free == Subset::all(3));
  CHECK(found[1].torsion == Subset::all(3));
  CHECK(describe(arr, found[1].free) == "{id_a id_b}");
}

TEST_CASE("every strict theory passes the theory checks") {
  for (std::string name : {"c2", "c3"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    for (const TorsionPair& p : enumerate_torsion_theories(w->H(), TTLevel::strict)) {
      TTVerdict v = check_torsion_theory(w->H(), p);
      REQUIRE(v.level == TTLevel::strict);
      for (const auto& r : torsion_theory_checks(w->H(), p, v)) {
        CAPTURE(r.name);
        CHECK(r.verdict == Verdict::pass);
      }
      CHECK(verify_reflection(w->H(), p, v).ok());
      Subset both = p.torsion & p.free;
      CHECK(both == trivial_objects(w->H()));
    }
  }
}

TEST_CASE("weak theories contain the strict ones") {
  for (std::string name : {"c2", "c3", "m2"}) {
    auto w = oracle::fixture(name)->arr(name);
    auto strict = masks(enumerate_torsion_theories(w->H(), TTLevel::strict));
    auto weak = masks(enumerate_torsion_theories(w->H(), TTLevel::weak));
    CHECK(std::includes(weak.begin(), weak.end(), strict.begin(), strict.end()));
  }
}

TEST_CASE("the pair u over id_b on H(c2) is not a theory") {
  auto ws = oracle::fixture("c2");
  auto w = ws->arr("c2");
  TorsionPair p{"tu", ws->pair_torsion.at("tu"), ws->pair_free.at("tu")};
  TTVerdict v = check_torsion_theory(w->H(), p);
  CHECK(v.level == TTLevel::none);
  CHECK(v.failure == "no exact presentation");
  CHECK(v.witnesses == std::vector<std::string>{"id_a"});
  oracle::ArrTorsionOracle o(*w->base);
  CHECK_FALSE(o.torsion_theory(oracle::mask_of(p.torsion), oracle::mask_of(p.free)));
}

TEST_CASE("the split pair on H(c2) is strict") {
  auto ws = oracle::fixture("c2");
  TorsionPair p{"split", ws->pair_torsion.at("split"), ws->pair_free.at("split")};
  CHECK(check_torsion_theory(ws->arr("c2")->H(), p).level == TTLevel::strict);
}

TEST_CASE("theories on discrete structures agree with the ideal version") {
  for (std::string name : {"c2", "c3", "m2", "sq"}) {
    auto ws = oracle::fixture(name);
    for (const auto& d : ws->ideal_decls) {
      CAPTURE(d.name);
      auto s = ws->structure("disc(" + d.name + ")");
      Subset z = ideal_of(*s);
      auto pairs = enumerate_z1_torsion_theories(s->base(), z);
      for (const auto& r : discrete_bridge_checks(*s, pairs)) {
        CAPTURE(r.name);
        CHECK(r.verdict != Verdict::fail);
        if (!is_closed_ideal(s->base(), z) && r.name == "ideal torsion theories are pretorsion theories")
          CHECK(r.verdict == Verdict::not_applicable);
      }
      CHECK(masks(enumerate_torsion_theories(*s, TTLevel::strict)) == masks(pairs));
      for (const auto& p : pairs) {
        auto v = check_z1_torsion_theory(s->base(), z, p);
        CHECK(v.z1_tt);
        if (is_closed_ideal(s->base(), z)) {
          REQUIRE(v.pretorsion);
          CHECK(*v.pretorsion);
        }
      }
    }
  }
}

TEST_CASE("pretorsion identification on c3 with the corner ideal") {
  auto ws = oracle::fixture("c3");
  const Category& c = *ws->category("c3");
  Subset z = ws->ideals.at("corner");
  for (const auto& p : enumerate_z1_torsion_theories(c, z)) {
    auto v = check_z1_torsion_theory(c, z, p);
    if (!v.pretorsion) continue;
    Subset both = p.torsion & p.free;
    CHECK(*v.pretorsion == (generated_ideal(c, both) == z));
  }
  CHECK_FALSE(check_z1_torsion_theory(c, z, pair_named(c, {"0"}, {"0"})).z1_tt);
}
