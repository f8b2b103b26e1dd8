// Copyright 2026 The tiltfock Authors
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

#include "tiltfock/alcove.hpp"
#include "tiltfock/pattern.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace tiltfock;

namespace {

Weight X(std::vector<Coord> x, int l) { return Weight::from_shifted(x, l); }

// Every dominant weight of rank m at level l with x_1 - x_m <= spread.
std::vector<Weight> dominant_weights(int m, int l, Coord spread) {
  std::vector<Weight> out;
  std::vector<Coord> x(m);
  x[m - 1] = 1;
  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(Weight::from_shifted(x, l));
      return;
    }
    for (Coord v = x[i + 1] + 1; v <= 1 + spread; ++v) {
      x[i] = v;
      self(self, i - 1);
    }
  };
  rec(rec, m - 2);
  return out;
}

// Points of the closed fundamental alcove: x weakly decreasing, x_1 - x_m <= l.
std::vector<Weight> fundamental_points(int m, int l) {
  std::vector<Weight> out;
  std::vector<Coord> x(m);
  x[m - 1] = 1;
  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(Weight::from_shifted(x, l));
      return;
    }
    for (Coord v = x[i + 1]; v <= 1 + l; ++v) {
      x[i] = v;
      self(self, i - 1);
    }
  };
  rec(rec, m - 2);
  return out;
}

// Raises x_1 of b until its coordinate sum is congruent to that of f mod the rank.
Weight same_block_bound(const Weight& b, const Weight& f) {
  auto x = b.shifted();
  const auto y = f.shifted();
  const Coord m = b.rank();
  const Coord d = std::accumulate(y.begin(), y.end(), Coord{0}) - std::accumulate(x.begin(), x.end(), Coord{0});
  x.front() += ((d % m) + m) % m;
  return Weight::from_shifted(x, b.level());
}

// Orbit points sigma(x) + l*t (sum t = 0), built without the Orbit class.
std::set<Weight> orbit_by_translation(const Weight& w, Coord range) {
  const int m = w.rank();
  const int l = w.level();
  auto x = w.shifted();
  std::sort(x.begin(), x.end());
  std::set<Weight> out;
  std::vector<Coord> t(m);
  do {
    auto rec = [&](auto&& self, int i, Coord sum) -> void {
      if (i == m - 1) {
        t[i] = -sum;
        if (std::abs(t[i]) > range) return;
        std::vector<Coord> y(m);
        for (int k = 0; k < m; ++k) y[k] = x[k] + l * t[k];
        const Coord shift = 1 - y[m - 1];
        for (Coord& v : y) v += shift;
        out.insert(Weight::from_shifted(y, l));
        return;
      }
      for (Coord v = -range; v <= range; ++v) {
        t[i] = v;
        self(self, i + 1, sum + v);
      }
    };
    rec(rec, 0, 0);
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

}  // namespace

TEST_CASE("weights") {
  const Weight w({2, 1, 0}, 3);
  CHECK(w.shifted() == std::vector<Coord>{5, 3, 1});
  CHECK(w.to_string() == "[2,1,0]");
  CHECK(Weight({5, 4, 3}, 3) == w);  // block equivalence
  CHECK(Weight::parse("[3, 2, 1]", 3) == w);
  CHECK(X({9, 6, 3}, 3) == Weight({6, 4, 2}, 3));
  CHECK_THROWS_AS(Weight::parse("[3,x]", 3), std::invalid_argument);
  CHECK_THROWS_AS(Weight({1, 0}, 0), std::invalid_argument);
}

TEST_CASE("walls and sides") {
  CHECK(walls_through(X({3, 1}, 2)) == std::vector<Hyperplane>{{1, 2, 1}});
  CHECK(walls_through(X({2, 1}, 2)).empty());
  CHECK(wall_count(X({9, 6, 3}, 3)) == 3);
  CHECK(side(X({3, 1}, 2), {1, 2, 1}) == Side::On);
  CHECK(side(X({4, 1}, 2), {1, 2, 1}) == Side::Above);
  CHECK(side(X({2, 1}, 2), {1, 2, 1}) == Side::Below);
  // sides do not see the normalization
  CHECK(side(Weight({7, 7, 4}, 3), {1, 3, 1}) == side(Weight({3, 3, 0}, 3), {1, 3, 1}));
}

TEST_CASE("dominance") {
  CHECK(is_dominant(X({3, 2, 1}, 3)));
  CHECK_FALSE(is_dominant(X({2, 2, 1}, 3)));
  CHECK_FALSE(is_dominant(Weight({0, 1, 0}, 3)));
  Pattern p;
  CHECK(kill_nondominant(p).is_zero());
  p.add_term(X({2, 2, 1}, 3), 1);
  p.add_term(X({4, 2, 1}, 3), LaurentPoly::q());
  const Pattern k = kill_nondominant(p);
  CHECK(k.terms.size() == 1);
  CHECK(k.coeff(X({4, 2, 1}, 3)) == LaurentPoly::q());
}

TEST_CASE("orbits") {
  const Orbit regular(X({3, 2, 1}, 3));
  CHECK(regular.is_regular());
  CHECK(regular.stabilizer_order() == 1);
  CHECK(regular.hyperplanes_through() == 0);
  CHECK(regular.wall_type() == std::vector<bool>{false, false, false});

  const Orbit full(X({7, 4, 1}, 3));
  CHECK_FALSE(full.is_regular());
  CHECK(full.class_sizes() == std::vector<int>{3});
  CHECK(full.stabilizer_order() == 6);
  CHECK(full.hyperplanes_through() == 3);
  CHECK(full.contains(X({13, 7, 1}, 3)));
  CHECK_FALSE(full.contains(X({10, 4, 1}, 3)));  // coordinate sum off by one translation
  CHECK_FALSE(full.contains(X({8, 4, 1}, 3)));
  CHECK(regular.less_singular_than(full));
  CHECK_FALSE(full.less_singular_than(regular));

  const Orbit wall(X({4, 2, 1}, 3));  // x_1 - x_3 = 3
  CHECK(wall.class_sizes() == std::vector<int>{2, 1});
  CHECK(wall.stabilizer_order() == 2);
  CHECK(wall.wall_type() == std::vector<bool>{true, false, false});
  CHECK(Orbit(X({8, 7, 1}, 3)) == wall);
  CHECK(regular.less_singular_than(wall));
  CHECK(wall.less_singular_than(Orbit(X({4, 4, 1}, 3))));
  // the stabilizers of (4,2,1) and (4,4,4) are not nested
  CHECK_FALSE(wall.less_singular_than(full));
}

TEST_CASE("orbit points agree with a translation-lattice enumeration") {
  for (int l = 2; l <= 3; ++l)
    for (const Weight& f : fundamental_points(3, l)) {
      const Orbit o(f);
      CHECK(o.fundamental() == f);
      const std::set<Weight> all = orbit_by_translation(f, 7);
      for (const Weight& b : {X({10, 5, 1}, l), X({9, 7, 1}, l), X({12, 4, 1}, l)}) {
        const Weight bound = same_block_bound(b, f);
        const auto got = orbit_points_below(o, bound);
        std::set<Weight> expected;
        for (const Weight& w : all)
          if (is_dominant(w) && weight_leq(w, bound)) expected.insert(w);
        CHECK(std::set<Weight>(got.begin(), got.end()) == expected);
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const Weight& a, const Weight& b) { return weight_compare(a, b) > 0; }));
        for (const Weight& w : got) {
          CHECK(o.contains(w));
          CHECK(Orbit(w) == o);  // regenerating from a member gives the same orbit
        }
      }
    }
}

TEST_CASE("projection onto facette closures") {
  for (int m = 2; m <= 4; ++m)
    for (int l = m; l <= m + 1; ++l) {
      std::vector<Orbit> orbits;
      for (const Weight& f : fundamental_points(m, l)) orbits.emplace_back(f);
      for (const Weight& lam : dominant_weights(m, l, 3 * l)) {
        if (!Orbit(lam).is_regular()) continue;
        for (const Orbit& g : orbits) {
          const Weight mu = project(lam, g);
          CHECK(g.contains(mu));
          // no hyperplane separates lam from mu
          const auto xl = lam.shifted();
          const auto xm = mu.shifted();
          for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
              const Coord a = xl[i] - xl[j];
              const Coord b = xm[i] - xm[j];
              CHECK(std::abs(a - b) <= l);
              for (Coord k = -4; k <= 8; ++k) {
                if (a < k * l) CHECK(b <= k * l);
                if (a > k * l) CHECK(b >= k * l);
              }
            }
          const int u = u_count(lam, g);
          const int o = o_count(lam, g);
          CHECK(u + o == wall_count(mu) - wall_count(lam));
          int below = 0;
          int above = 0;
          for (const Hyperplane& h : walls_through(mu)) {
            const Side sd = side(lam, h);
            CHECK(sd != Side::On);
            (sd == Side::Below ? below : above) += 1;
          }
          CHECK(u == below);
          CHECK(o == above);
          CHECK(u_count(mu, g) == 0);
          CHECK(o_count(mu, g) == 0);
          const auto star = star_points(mu, Orbit(lam));
          CHECK(std::find(star.begin(), star.end(), lam) != star.end());
        }
      }
    }
}

TEST_CASE("projection errors") {
  // a point on a wall cannot reach a more regular orbit
  CHECK_THROWS_AS(project(X({4, 2, 1}, 3), Orbit(X({3, 2, 1}, 3))), ProjectionError);
  CHECK(project(X({3, 2, 1}, 3), Orbit(X({3, 2, 1}, 3))) == X({3, 2, 1}, 3));
}

TEST_CASE("weight order") {
  CHECK_THROWS_AS(weight_leq(X({4, 2, 1}, 3), X({5, 2, 1}, 3)), std::invalid_argument);
  CHECK(weight_leq(X({5, 3, 1}, 3), X({6, 2, 1}, 3)));
  CHECK_FALSE(weight_leq(X({6, 2, 1}, 3), X({5, 3, 1}, 3)));
  CHECK(weight_compare(X({6, 2, 1}, 3), X({5, 3, 1}, 3)) > 0);
  CHECK(weight_compare(X({6, 2, 1}, 3), X({6, 2, 1}, 3)) == 0);
  // (3,0,0) lifts to (4,1,1), incomparable with (3,3,0)
  CHECK_FALSE(weight_leq(Weight({3, 0, 0}, 3), Weight({3, 3, 0}, 3)));
  CHECK_FALSE(weight_leq(Weight({3, 3, 0}, 3), Weight({3, 0, 0}, 3)));
}
