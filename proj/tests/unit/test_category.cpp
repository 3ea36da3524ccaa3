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

#include "fincat/error.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

/// Typing, unit and associativity read straight off the table.
bool laws_hold(const Category& c) {
  auto as = oracle::all_arrows(c);
  for (ArrowId g : as)
    for (ArrowId f : as) {
      if (c.cod(f) != c.dom(g)) continue;
      ArrowId h = c.compose_raw(g, f);
      if (h < 0 || c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g)) return false;
    }
  for (ArrowId g : as)
    if (c.compose_raw(g, c.identity(c.dom(g))) != g || c.compose_raw(c.identity(c.cod(g)), g) != g) return false;
  for (ArrowId h : as)
    for (ArrowId g : as)
      for (ArrowId f : as)
        if (c.cod(f) == c.dom(g) && c.cod(g) == c.dom(h) &&
            c.compose_raw(h, c.compose_raw(g, f)) != c.compose_raw(c.compose_raw(h, g), f))
          return false;
  return true;
}

}  // namespace

TEST_CASE("c2 fixture has one category with three arrows") {
  auto ws = oracle::fixture("c2");
  CHECK(ws->categories.size() == 1);
  CHECK(ws->category("c2")->arrow_count() == 3);
  CHECK(ws->category("c2")->object_count() == 2);
}

TEST_CASE("v2 hom-set sizes match the matrix count") {
  auto c = oracle::category("v2");
  CHECK(c->object_count() == 3);
  CHECK(c->arrow_count() == 31);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      int dx = oracle::dimension(c->object_name(static_cast<int>(x)));
      int dy = oracle::dimension(c->object_name(static_cast<int>(y)));
      CHECK(c->hom(static_cast<int>(x), static_cast<int>(y)).size() == (std::size_t{1} << (dx * dy)));
    }
}

TEST_CASE("v2 composition is matrix multiplication") {
  auto c = oracle::category("v2");
  for (ArrowId g : oracle::all_arrows(*c))
    for (ArrowId f : oracle::all_arrows(*c))
      if (c->cod(f) == c->dom(g))
        CHECK(oracle::matrix_of(*c, c->compose_raw(g, f)) ==
              oracle::multiply(oracle::matrix_of(*c, g), oracle::matrix_of(*c, f)));
}

TEST_CASE("every fixture passes validation") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq", "v2"}) {
    CAPTURE(name);
    auto c = oracle::category(name);
    CHECK(validate_category(*c).empty());
    CHECK(laws_hold(*c));
  }
}

TEST_CASE("redirecting u12.u01 to id_0 gives one dom/cod diagnostic") {
  auto c = oracle::category("c3");
  Category::Builder b(*c);
  b.set_composite(oracle::arrow(*c, "u12"), oracle::arrow(*c, "u01"), oracle::arrow(*c, "id_0"));
  Category bad = b.build();
  auto d = validate_category(bad);
  REQUIRE(d.size() == 1);
  CHECK(d.front().law == "dom/cod mismatch");
}

TEST_CASE("single composite edits are caught exactly when a law breaks") {
  int caught = 0;
  for (std::string name : {"c3", "m2", "sq"}) {
    CAPTURE(name);
    auto c = oracle::category(name);
    for (ArrowId g : oracle::all_arrows(*c))
      for (ArrowId f : oracle::all_arrows(*c)) {
        if (c->cod(f) != c->dom(g) || c->is_identity(f) || c->is_identity(g)) continue;
        for (ArrowId h : oracle::all_arrows(*c)) {
          if (h == c->compose_raw(g, f)) continue;
          Category::Builder b(*c);
          b.set_composite(g, f, h);
          Category m = b.build();
          bool flagged = !validate_category(m).empty();
          CHECK(flagged == !laws_hold(m));
          caught += flagged;
        }
      }
  }
  CHECK(caught > 0);
}

TEST_CASE("composing chains") {
  auto c3 = oracle::category("c3");
  CHECK(c3->compose({oracle::arrow(*c3, "u12"), oracle::arrow(*c3, "u01")}) == oracle::arrow(*c3, "u02"));
  auto c2 = oracle::category("c2");
  CHECK(c2->compose({oracle::arrow(*c2, "u")}) == oracle::arrow(*c2, "u"));
  auto m2 = oracle::category("m2");
  ArrowId e = oracle::arrow(*m2, "e");
  CHECK(m2->compose({e, e, e}) == e);
  CHECK_THROWS_AS(c3->compose(oracle::arrow(*c3, "u01"), oracle::arrow(*c3, "u12")), Error);
}

TEST_CASE("missing composites are rejected by the builder") {
  Category::Builder b("broken");
  ObjectId x = b.add_object("x");
  ObjectId y = b.add_object("y");
  ObjectId z = b.add_object("z");
  b.add_arrow("f", x, y);
  b.add_arrow("g", y, z);
  CHECK_THROWS_AS(b.build(), Error);
}

TEST_CASE("isomorphism closure and inverses in v2") {
  auto c = oracle::category("v2");
  for (ArrowId a : oracle::all_arrows(*c)) {
    CAPTURE(c->arrow_name(a));
    CHECK(c->is_iso(a) == oracle::iso(*c, a));
    if (c->is_iso(a)) CHECK(c->compose_raw(c->inverse(a), a) == c->identity(c->dom(a)));
  }
  // GL(2, F2) has six elements, GL(1, F2) one.
  int isos = 0;
  for (ArrowId a : oracle::all_arrows(*c)) isos += c->is_iso(a);
  CHECK(isos == 1 + 1 + 6);
  Subset one = Subset::of(c->arrow_count(), {oracle::arrow(*c, "v2v2_0110")});
  CHECK(c->iso_closure_arrows(one).count() == 6);
  CHECK(c->iso_class_count() == 3);
}

TEST_CASE("opposite category swaps domains") {
  auto c = oracle::category("c3");
  Category op = c->opposite();
  ArrowId u = oracle::arrow(*c, "u01");
  CHECK(op.dom(u) == c->cod(u));
  CHECK(op.compose_raw(oracle::arrow(*c, "u01"), oracle::arrow(*c, "u12")) == oracle::arrow(*c, "u02"));
  CHECK(validate_category(op).empty());
}
