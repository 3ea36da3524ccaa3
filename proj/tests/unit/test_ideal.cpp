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

#include "fincat/ideal.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

/// i(Z0): arrows factoring through an object of Z0.
Subset factor_through(const Category& c, const Subset& objects) {
  Subset out(c.arrow_count());
  for (ArrowId g : oracle::all_arrows(c))
    for (int z : objects.members())
      for (ArrowId f : oracle::arrows_between(c, c.dom(g), z))
        for (ArrowId h : oracle::arrows_between(c, z, c.cod(g)))
          if (c.compose_raw(h, f) == g) out.insert(g);
  return out;
}

/// t(Z1): objects whose identity lies in Z1.
Subset identities_in(const Category& c, const Subset& arrows) {
  Subset out(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (arrows.contains(c.identity(static_cast<int>(x)))) out.insert(static_cast<int>(x));
  return out;
}

bool retract_of(const Category& c, ObjectId x, ObjectId y) {
  for (ArrowId s : oracle::arrows_between(c, x, y))
    for (ArrowId r : oracle::arrows_between(c, y, x))
      if (c.compose_raw(r, s) == c.identity(x)) return true;
  return false;
}

bool retract_closed(const Category& c, const Subset& objects) {
  for (int y : objects.members())
    for (std::size_t x = 0; x < c.object_count(); ++x)
      if (retract_of(c, static_cast<int>(x), y) && !objects.contains(static_cast<int>(x))) return false;
  return true;
}

bool absorbs(const Category& c, const Subset& z) {
  for (int g : z.members())
    for (ArrowId f : oracle::all_arrows(c)) {
      if (c.cod(f) == c.dom(g) && !z.contains(c.compose_raw(g, f))) return false;
      if (c.dom(f) == c.cod(g) && !z.contains(c.compose_raw(f, g))) return false;
    }
  return true;
}

Subset subset_from_mask(std::size_t n, unsigned long long m) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1ULL) s.insert(static_cast<int>(i));
  return s;
}

}  // namespace

TEST_CASE("i and t on c2") {
  auto c = oracle::category("c2");
  Subset b = Subset::of(2, {oracle::object(*c, "b")});
  Subset ib = generated_ideal(*c, b);
  CHECK(ib == Subset::of(3, {oracle::arrow(*c, "id_b"), oracle::arrow(*c, "u")}));
  CHECK(trivial_objects(*c, ib) == b);
}

TEST_CASE("ideal classification examples") {
  auto c = oracle::category("c2");
  CHECK(classify_ideal(*c, Subset::of(3, {oracle::arrow(*c, "id_b"), oracle::arrow(*c, "u")})).kind ==
        IdealKind::closed);
  auto v = classify_ideal(*c, Subset::of(3, {oracle::arrow(*c, "u")}));
  CHECK(v.kind == IdealKind::ideal);
  REQUIRE(v.witness);
  CHECK(*v.witness == oracle::arrow(*c, "u"));
  auto n = classify_ideal(*c, Subset::of(3, {oracle::arrow(*c, "id_a")}));
  CHECK(n.kind == IdealKind::not_ideal);
  CHECK(is_closed_ideal(*oracle::category("c1"), Subset::all(1)));
}

TEST_CASE("the i/t laws hold on every subset") {
  for (std::string name : {"c2", "c3", "m2"}) {
    CAPTURE(name);
    auto c = oracle::category(name);
    std::size_t n = c->object_count(), m = c->arrow_count();
    std::vector<Subset> closed_ideals, retract_closed_sets;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
      Subset z0 = subset_from_mask(n, mask);
      Subset i = generated_ideal(*c, z0);
      CHECK(i == factor_through(*c, z0));
      CHECK(is_closed_ideal(*c, i));
      Subset ti = trivial_objects(*c, i);
      CHECK(ti == identities_in(*c, i));
      CHECK(z0.subset_of(ti));
      CHECK(ti == retract_closure(*c, z0));
      CHECK(retract_closed(*c, ti));
      for (unsigned long long other = 0; other < (1ULL << n); ++other) {
        Subset s = subset_from_mask(n, other);
        if (z0.subset_of(s) && retract_closed(*c, s)) CHECK(ti.subset_of(s));
      }
      CHECK(is_retract_closed(*c, z0) == retract_closed(*c, z0));
      if (retract_closed(*c, z0)) {
        retract_closed_sets.push_back(z0);
        CHECK(trivial_objects(*c, generated_ideal(*c, z0)) == z0);
      }
    }
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      Subset z1 = subset_from_mask(m, mask);
      CHECK(is_ideal(*c, z1) == absorbs(*c, z1));
      if (!absorbs(*c, z1)) continue;
      CHECK(generated_ideal(*c, trivial_objects(*c, z1)).subset_of(z1));
      if (is_closed_ideal(*c, z1)) {
        closed_ideals.push_back(z1);
        CHECK(generated_ideal(*c, trivial_objects(*c, z1)) == z1);
      }
    }
    CHECK(closed_ideals.size() == retract_closed_sets.size());
  }
}

TEST_CASE("discrete structures reflect every shipped structure") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    auto ws = oracle::fixture(name);
    std::vector<std::shared_ptr<const NullStructure>> all{ws->structure("h(" + name + ")")};
    for (const auto& [n, s] : ws->structures) all.push_back(s);
    for (const auto& d : ws->ideal_decls) all.push_back(ws->structure("disc(" + d.name + ")"));
    for (const auto& s : all) {
      CAPTURE(s->name());
      Subset z = ideal_of(*s);
      CHECK(is_ideal(s->base(), z));
      NullStructure d = discrete_structure(s->base_ptr(), z, "d");
      CHECK(d.is_discrete());
      CHECK(ideal_of(d) == z);
      auto m = collapse_onto(*s, d);
      REQUIRE(m);
      CHECK(verify_morphism(*s, d, *m).empty());
    }
  }
}

TEST_CASE("collapse needs a large enough ideal") {
  auto ws = oracle::fixture("c2");
  auto s = ws->structure("h(c2)");
  NullStructure empty = discrete_structure(s->base_ptr(), Subset(s->base().arrow_count()), "empty");
  CHECK_FALSE(collapse_onto(*s, empty).has_value());
}

TEST_CASE("discrete structure of all identities on c1 is terminal") {
  auto c = oracle::category("c1");
  NullStructure d = discrete_structure(c, Subset::all(1), "all");
  CHECK(validate_structure(d).empty());
  CHECK(d.theta(0).size() == 1);
}
