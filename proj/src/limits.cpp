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

#include "fincat/limits.hpp"

#include <algorithm>

#include "fincat/detail/view.hpp"

namespace fincat {

namespace {

template <bool Dual>
bool left_cancellable(const detail::View<Dual>& v, ArrowId g) {
  std::vector<char> seen(v.arrow_count(), 0);
  for (std::size_t w = 0; w < v.object_count(); ++w) {
    const auto& hs = v.hom(static_cast<int>(w), v.dom(g));
    std::vector<ArrowId> touched;
    bool ok = true;
    for (ArrowId h : hs) {
      ArrowId gh = v.comp(g, h);
      if (seen[gh]) {
        ok = false;
        break;
      }
      seen[gh] = 1;
      touched.push_back(gh);
    }
    for (ArrowId t : touched) seen[t] = 0;
    if (!ok) return false;
  }
  return true;
}

template <bool Dual>
std::size_t count_cones(const detail::View<Dual>& v, ObjectId a, ArrowId x, ArrowId y) {
  std::size_t n = 0;
  for (ArrowId f : v.hom(a, v.dom(x)))
    for (ArrowId g : v.hom(a, v.dom(y)))
      if (v.comp(x, f) == v.comp(y, g)) ++n;
  return n;
}

template <bool Dual>
std::optional<PullbackResult> check_square(const detail::View<Dual>& v, ArrowId x, ArrowId y, ArrowId p1,
                                           ArrowId p2) {
  if (v.cod(p1) != v.dom(x) || v.cod(p2) != v.dom(y) || v.dom(p1) != v.dom(p2)) return std::nullopt;
  if (v.comp(x, p1) != v.comp(y, p2)) return std::nullopt;
  ObjectId p = v.dom(p1);
  PullbackResult r{p, p1, p2, {}};
  for (std::size_t a = 0; a < v.object_count(); ++a) {
    const auto& ms = v.hom(static_cast<int>(a), p);
    if (ms.size() != count_cones(v, static_cast<int>(a), x, y)) return std::nullopt;
    std::vector<Mediator> local;
    for (ArrowId m : ms) local.push_back({v.comp(p1, m), v.comp(p2, m), m});
    std::sort(local.begin(), local.end(),
              [](const Mediator& s, const Mediator& t) { return std::tie(s.left, s.right) < std::tie(t.left, t.right); });
    for (std::size_t i = 1; i < local.size(); ++i)
      if (local[i].left == local[i - 1].left && local[i].right == local[i - 1].right) return std::nullopt;
    r.mediators.insert(r.mediators.end(), local.begin(), local.end());
  }
  std::sort(r.mediators.begin(), r.mediators.end(),
            [](const Mediator& s, const Mediator& t) { return std::tie(s.left, s.right) < std::tie(t.left, t.right); });
  return r;
}

template <bool Dual>
std::optional<PullbackResult> search(const detail::View<Dual>& v, ArrowId x, ArrowId y) {
  if (v.cod(x) != v.cod(y)) throw Error("pullback: arrows do not share a codomain");
  std::vector<std::size_t> cones(v.object_count());
  for (std::size_t a = 0; a < v.object_count(); ++a) cones[a] = count_cones(v, static_cast<int>(a), x, y);
  for (std::size_t p = 0; p < v.object_count(); ++p) {
    bool profile = true;
    for (std::size_t a = 0; a < v.object_count() && profile; ++a)
      profile = v.hom(static_cast<int>(a), static_cast<int>(p)).size() == cones[a];
    if (!profile) continue;
    for (ArrowId p1 : v.hom(static_cast<int>(p), v.dom(x)))
      for (ArrowId p2 : v.hom(static_cast<int>(p), v.dom(y)))
        if (auto r = check_square(v, x, y, p1, p2)) return r;
  }
  return std::nullopt;
}

template <bool Dual>
std::optional<ObjectId> universal_object(const detail::View<Dual>& v) {
  for (std::size_t x = 0; x < v.object_count(); ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < v.object_count() && ok; ++y) ok = v.hom(static_cast<int>(x), static_cast<int>(y)).size() == 1;
    if (ok) return static_cast<int>(x);
  }
  return std::nullopt;
}

}  // namespace

ArrowId PullbackResult::mediator_for(ArrowId left, ArrowId right) const {
  auto it = std::lower_bound(mediators.begin(), mediators.end(), std::make_pair(left, right),
                             [](const Mediator& m, const std::pair<ArrowId, ArrowId>& k) {
                               return std::tie(m.left, m.right) < std::tie(k.first, k.second);
                             });
  if (it == mediators.end() || it->left != left || it->right != right) return kNone;
  return it->mediator;
}

bool is_mono(const Category& c, ArrowId g) { return left_cancellable(detail::View<false>{c}, g); }
bool is_epi(const Category& c, ArrowId g) { return left_cancellable(detail::View<true>{c}, g); }

ArrowClassification classify_arrow(const Category& c, ArrowId g) {
  ArrowClassification r;
  r.mono = is_mono(c, g);
  r.epi = is_epi(c, g);
  ObjectId x = c.dom(g), y = c.cod(g);
  for (ArrowId s : c.hom(y, x)) {
    if (!r.left_inverse && c.compose_raw(s, g) == c.identity(x)) r.left_inverse = s;
    if (!r.right_inverse && c.compose_raw(g, s) == c.identity(y)) r.right_inverse = s;
  }
  if (c.is_iso(g)) r.inverse = c.inverse(g);
  return r;
}

std::optional<PullbackResult> pullback(const Category& c, ArrowId x, ArrowId y) {
  return search(detail::View<false>{c}, x, y);
}

std::optional<PullbackResult> pushout(const Category& c, ArrowId x, ArrowId y) {
  return search(detail::View<true>{c}, x, y);
}

std::optional<PullbackResult> verify_pullback(const Category& c, ArrowId x, ArrowId y, ArrowId p1, ArrowId p2) {
  return check_square(detail::View<false>{c}, x, y, p1, p2);
}

std::optional<PullbackResult> verify_pushout(const Category& c, ArrowId x, ArrowId y, ArrowId q1, ArrowId q2) {
  return check_square(detail::View<true>{c}, x, y, q1, q2);
}

DistinguishedObjects find_distinguished(const Category& c) {
  DistinguishedObjects d;
  d.initial = universal_object(detail::View<false>{c});
  d.terminal = universal_object(detail::View<true>{c});
  if (d.initial && d.terminal) {
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      bool ok = true;
      for (std::size_t y = 0; y < c.object_count() && ok; ++y)
        ok = c.hom(static_cast<int>(x), static_cast<int>(y)).size() == 1 &&
             c.hom(static_cast<int>(y), static_cast<int>(x)).size() == 1;
      if (ok) {
        d.zero = static_cast<int>(x);
        break;
      }
    }
  }
  return d;
}

}  // namespace fincat
