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

#include <set>

#include "fincat/arrow_category.hpp"
#include "fincat/ladder.hpp"
#include "oracles.hpp"

using namespace fincat;

TEST_CASE("every rung holds on categories with initial and terminal objects") {
  for (std::string name : {"c1", "c2", "c3", "sq"}) {
    CAPTURE(name);
    auto w = oracle::fixture(name)->arr(name);
    LadderReport r = verify_correspondence(*w);
    for (const auto& rung : r.rungs) {
      CAPTURE(rung.name);
      CHECK(rung.verdict == Verdict::pass);
    }
    CHECK(r.orthogonal_systems.size() == oracle::factorization_systems(*w->base, true).size());
    CHECK(r.weak_systems.size() == oracle::factorization_systems(*w->base, false).size());
    CHECK(r.strict_theories.size() == oracle::ArrTorsionOracle(*w->base).enumerate().size());
  }
}

TEST_CASE("rungs needing initial and terminal objects are skipped on m2") {
  auto w = oracle::fixture("m2")->arr("m2");
  LadderReport r = verify_correspondence(*w);
  CHECK(r.passed());
  std::set<std::string> skipped;
  for (const auto& rung : r.rungs) {
    CHECK(rung.verdict != Verdict::fail);
    if (rung.verdict == Verdict::not_applicable) skipped.insert(rung.anchor);
  }
  CHECK(skipped == std::set<std::string>{"quasi-proper-weak-is-orthogonal", "quasi-proper-weak-is-proper",
                                         "discrete-to-quasi-proper-htt", "proper-ofs-discrete-correspondence"});
  CHECK(r.orthogonal_systems.size() == 2);
  CHECK(r.weak_systems.size() == 2);
  CHECK(r.discrete_theories.empty());
}

TEST_CASE("the ladder refuses large categories") {
  auto v2 = oracle::category("v2");
  CHECK_THROWS_AS(verify_correspondence(build_arr(v2), 16), CapExceeded);
}
