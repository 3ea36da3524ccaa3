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

#include "fincat/arrow_category.hpp"
#include "fincat/ideal.hpp"
#include "fincat/nullhomotopy.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

std::vector<std::shared_ptr<const NullStructure>> shipped_structures() {
  std::vector<std::shared_ptr<const NullStructure>> out;
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    auto ws = oracle::fixture(name);
    out.push_back(ws->structure(std::string("h(") + name + ")"));
    for (const auto& [n, s] : ws->structures) out.push_back(s);
    for (const auto& d : ws->ideal_decls) out.push_back(ws->structure("disc(" + d.name + ")"));
  }
  return out;
}

}  // namespace

TEST_CASE("shipped structures satisfy the laws") {
  for (const auto& s : shipped_structures()) {
    CAPTURE(s->name());
    CHECK(validate_structure(*s).empty());
    CHECK(oracle::structure_valid(*s));
  }
}

TEST_CASE("single whisker edits are caught exactly when a law breaks") {
  auto ws = oracle::fixture("c2");
  for (const char* ref : {"h(c2)", "thetab", "thetagamma"}) {
    CAPTURE(ref);
    auto s = ws->structure(ref);
    const Category& c = s->base();
    int caught = 0, mutants = 0;
    for (std::size_t p = 0; p < s->homotopy_count(); ++p) {
      HomotopyId phi = static_cast<int>(p);
      for (ArrowId a : oracle::all_arrows(c)) {
        bool left = c.dom(a) == c.cod(s->carrier(phi));
        bool right = c.cod(a) == c.dom(s->carrier(phi));
        for (std::size_t q = 0; q < s->homotopy_count(); ++q) {
          HomotopyId psi = static_cast<int>(q);
          for (int side = 0; side < 2; ++side) {
            if ((side == 0 && (!left || s->left(a, phi) == psi)) || (side == 1 && (!right || s->right(phi, a) == psi)))
              continue;
            NullStructure::Builder b(*s);
            if (side == 0)
              b.set_left(a, phi, psi);
            else
              b.set_right(phi, a, psi);
            NullStructure m = b.build();
            bool flagged = !validate_structure(m).empty();
            CHECK(flagged == !oracle::structure_valid(m));
            caught += flagged;
            ++mutants;
          }
        }
      }
    }
    CHECK(mutants > 0);
    CHECK(caught > 0);
  }
}

TEST_CASE("a left whisker landing over the wrong arrow is a typing error") {
  auto c = oracle::category("c2");
  NullStructure::Builder b(c, "bad");
  HomotopyId p = b.add_homotopy(oracle::arrow(*c, "id_a"), "p");
  HomotopyId q = b.add_homotopy(oracle::arrow(*c, "id_b"), "q");
  HomotopyId r = b.add_homotopy(oracle::arrow(*c, "u"), "r");
  b.set_left(oracle::arrow(*c, "u"), p, q);
  b.set_right(q, oracle::arrow(*c, "u"), r);
  b.set_right(r, oracle::arrow(*c, "id_a"), r);
  auto d = validate_structure(b.build());
  REQUIRE_FALSE(d.empty());
  bool typing = false;
  for (const auto& x : d) typing = typing || x.law.find("typing") != std::string::npos;
  CHECK(typing);
}

TEST_CASE("left whiskering a diagonal in H(c3)") {
  auto ws = oracle::fixture("c3");
  auto w = ws->arr("c3");
  const Category& a = *w->base;
  ArrowId u01 = oracle::arrow(a, "u01"), u12 = oracle::arrow(a, "u12"), id1 = oracle::arrow(a, "id_1"),
          id2 = oracle::arrow(a, "id_2");
  ArrowId sq = w->square(u01, u12, u01, u12);
  REQUIRE(sq != kNone);
  HomotopyId phi = w->h_homotopy(sq, id1);
  REQUIRE(phi != kNone);
  ArrowId h = w->square(u12, id2, u12, id2);
  REQUIRE(h != kNone);
  HomotopyId r = w->H().whisker(h, phi, std::nullopt);
  CHECK(w->H().label(r) == "u12");
}

TEST_CASE("whisker rejects mistyped arrows") {
  auto ws = oracle::fixture("c2");
  auto s = ws->structure("thetab");
  const Category& c = s->base();
  HomotopyId q = *s->find(oracle::arrow(c, "u"), "q");
  CHECK_THROWS_AS(s->whisker(oracle::arrow(c, "u"), q, std::nullopt), Error);
  CHECK(s->whisker(std::nullopt, *s->find(oracle::arrow(c, "id_b"), "p"), oracle::arrow(c, "u")) == q);
}

TEST_CASE("H homotopies are the diagonals of each square") {
  for (std::string name : {"c2", "c3", "m2", "sq"}) {
    auto w = oracle::fixture(name)->arr(name);
    const Category& a = *w->base;
    for (const auto& s : oracle::squares(a)) {
      ArrowId id = w->square(s.x, s.y, s.g, s.g0);
      REQUIRE(id != kNone);
      auto diag = oracle::diagonals(a, s);
      CHECK(w->H().theta(id).size() == diag.size());
      for (ArrowId l : diag) CHECK(w->h_homotopy(id, l) != kNone);
    }
  }
}

TEST_CASE("identity structure morphisms and composition") {
  auto s = oracle::fixture("c3")->structure("h(c3)");
  auto id = identity_morphism(*s);
  CHECK(verify_morphism(*s, *s, id).empty());
  CHECK(is_identity(compose(id, id)));
}

TEST_CASE("the opposite of H(c3) is a valid structure") {
  auto s = oracle::fixture("c3")->structure("h(c3)");
  auto op = s->opposite();
  CHECK(validate_structure(op).empty());
}
