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
#include "fincat/functor.hpp"
#include "oracles.hpp"

using namespace fincat;

TEST_CASE("declared functors and transformations are valid") {
  for (std::string name : {"c2", "c3", "sq"}) {
    auto ws = oracle::fixture(name);
    for (const auto& [n, f] : ws->functors) CHECK(verify_functor(f).empty());
    for (const auto& [n, t] : ws->transformations) CHECK(verify_nat_trans(t).empty());
    for (const auto& [n, a] : ws->adjunctions) CHECK(verify_adjunction(a).empty());
  }
}

TEST_CASE("identity adjunction on c3") {
  auto c = oracle::category("c3");
  Functor id = identity_functor(c);
  NatTrans unit{"unit", id, id, {}};
  for (std::size_t x = 0; x < c->object_count(); ++x) unit.component.push_back(c->identity(static_cast<int>(x)));
  CHECK(verify_adjunction(Adjunction{"id", id, id, unit, unit}).empty());
}

TEST_CASE("the Arr(c2) string is a pair of adjunctions") {
  auto w = build_arr(oracle::category("c2"));
  CHECK(verify_adjunction(w.string.cu).empty());
  CHECK(verify_adjunction(w.string.ud).empty());
}

TEST_CASE("a mistyped counit component is reported") {
  auto w = build_arr(oracle::category("c2"));
  const Category& a = *w.base;
  Adjunction ud = w.string.ud;
  ObjectId u = oracle::object(*w.arr, "u");
  ArrowId uu = w.square(oracle::arrow(a, "u"), oracle::arrow(a, "u"), oracle::arrow(a, "id_a"), oracle::arrow(a, "id_b"));
  REQUIRE(uu != kNone);
  ud.counit.component[u] = uu;
  CHECK_FALSE(verify_adjunction(ud).empty());
}

TEST_CASE("a functor breaking composition is reported") {
  auto c = oracle::category("c3");
  Functor f = identity_functor(c);
  f.arr[oracle::arrow(*c, "u02")] = oracle::arrow(*c, "u01");
  CHECK_FALSE(verify_functor(f).empty());
}

TEST_CASE("composition and whiskering") {
  auto ws = oracle::fixture("c2");
  const Functor& r = ws->functors.at("r");
  const Functor& s = ws->functors.at("s");
  Functor sr = compose(s, r);
  CHECK(verify_functor(sr).empty());
  auto c = ws->category("c2");
  for (std::size_t x = 0; x < c->object_count(); ++x) CHECK(sr.obj[x] == oracle::object(*c, "b"));
  NatTrans wb = whisker(s, ws->transformations.at("beta"));
  CHECK(verify_nat_trans(wb).empty());
  NatTrans bw = whisker(ws->transformations.at("beta"), r);
  CHECK(verify_nat_trans(bw).empty());
}
