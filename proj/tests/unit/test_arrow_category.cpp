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
#include "fincat/cud.hpp"
#include "fincat/ideal.hpp"
#include "oracles.hpp"

using namespace fincat;

TEST_CASE("squares match a direct enumeration") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    const Category& a = *w->base;
    auto expected = oracle::squares(a);
    REQUIRE(w->squares.size() == expected.size());
    std::vector<oracle::Sq> got;
    for (const Square& s : w->squares) got.push_back({s.x, s.y, s.g, s.g0});
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    for (std::size_t i = 0; i < w->squares.size(); ++i) {
      const Square& s = w->squares[i];
      CHECK(w->square(s.x, s.y, s.g, s.g0) == static_cast<int>(i));
      CHECK(w->arr->dom(static_cast<int>(i)) == s.x);
      CHECK(w->arr->cod(static_cast<int>(i)) == s.y);
    }
  }
}

TEST_CASE("arrow category sizes") {
  CHECK(oracle::fixture("c2")->arr("c2")->squares.size() == 6);
  CHECK(oracle::fixture("c3")->arr("c3")->squares.size() == 20);
  CHECK(oracle::fixture("m2")->arr("m2")->squares.size() == 10);
  CHECK(oracle::fixture("sq")->arr("sq")->squares.size() == 36);
}

TEST_CASE("composition of squares is pasting") {
  for (std::string name : {"c2", "c3", "m2"}) {
    auto w = oracle::fixture(name)->arr(name);
    const Category& a = *w->base;
    const Category& arr = *w->arr;
    for (ArrowId s : oracle::all_arrows(arr))
      for (ArrowId t : oracle::all_arrows(arr)) {
        if (arr.cod(s) != arr.dom(t)) continue;
        const Square& ss = w->squares[s];
        const Square& ts = w->squares[t];
        oracle::Sq p = oracle::compose(a, {ts.x, ts.y, ts.g, ts.g0}, {ss.x, ss.y, ss.g, ss.g0});
        CHECK(arr.compose_raw(t, s) == w->square(p.x, p.y, p.g, p.g0));
      }
  }
}

TEST_CASE("H(A) homotopies are the diagonals") {
  for (std::string name : {"c2", "c3", "m2", "sq"}) {
    auto w = oracle::fixture(name)->arr(name);
    const Category& a = *w->base;
    for (std::size_t i = 0; i < w->squares.size(); ++i) {
      const Square& s = w->squares[i];
      auto ds = oracle::diagonals(a, {s.x, s.y, s.g, s.g0});
      REQUIRE(w->H().theta(static_cast<int>(i)).size() == ds.size());
      for (ArrowId l : ds) {
        HomotopyId phi = w->h_homotopy(static_cast<int>(i), l);
        REQUIRE(phi != kNone);
        CHECK(w->H().label(phi) == a.arrow_name(l));
      }
    }
  }
}

TEST_CASE("trivial objects of Arr(c3) are the identities") {
  auto w = oracle::fixture("c3")->arr("c3");
  const Category& a = *w->base;
  Subset t = trivial_objects(w->H());
  std::vector<std::string> names;
  for (int x : t.members()) names.push_back(a.arrow_name(x));
  CHECK(names == std::vector<std::string>{"id_0", "id_1", "id_2"});
}

TEST_CASE("arrow category facts hold on every fixture") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    for (const auto& r : arr_checks(*w)) {
      CAPTURE(r.name);
      CHECK(r.verdict != Verdict::fail);
    }
  }
}

TEST_CASE("structure comparison for the string C -| U -| D") {
  for (std::string name : {"c1", "c2", "c3", "m2", "sq"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    CudReport r = cud_compare(w->string);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      bool section = c.name == "section theta_gamma -> theta_A is a structure morphism";
      CHECK((c.verdict == Verdict::fail) == (section && name != "c1"));
    }
    auto four = std::find_if(r.checks.begin(), r.checks.end(),
                             [](const CheckRecord& c) { return c.anchor == "four-ideals-equal"; });
    REQUIRE(four != r.checks.end());
    CHECK(four->verdict == Verdict::pass);
  }
}

TEST_CASE("strings of adjunctions on the arrow category") {
  for (std::string name : {"c1", "c2", "sq"}) {
    auto w = oracle::fixture(name)->arr(name);
    CHECK(verify_string(w->string).empty());
    CHECK(verify_functor(w->C()).empty());
    CHECK(verify_functor(w->U()).empty());
    CHECK(verify_functor(w->D()).empty());
  }
}

TEST_CASE("arrow category cap") {
  auto v2 = oracle::category("v2");
  CHECK_THROWS_AS(build_arr(v2, 16), CapExceeded);
}
