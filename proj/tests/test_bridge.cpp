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

#include "tiltfock/bridge.hpp"

#include <doctest.h>

using namespace tiltfock;

namespace {

Partition Pt(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partitions as weights") {
  CHECK(weight_of(Partition(), 3, 2) == Weight({0, 0, 0}, 2));
  CHECK(weight_of(Pt({2, 1}), 3, 2).coords() == std::vector<Coord>{2, 1, 0});
  CHECK_THROWS_AS(weight_of(Pt({1, 1, 1}), 2, 2), std::invalid_argument);
  for (int n = 0; n <= 7; ++n)
    for (const Partition& p : enumerate_partitions(n)) CHECK(partition_of(weight_of(p, n + 1, 3)) == p);
  // m parts: the full columns are absorbed by the normalization
  CHECK(weight_of(Pt({3, 2, 1}), 3, 2) == Weight({2, 1, 0}, 2));
}

TEST_CASE("end residues") {
  CHECK(end_residue(Pt({1}), 1, 3) == 0);
  CHECK(end_residue(Pt({3, 2}), 2, 3) == 0);
  CHECK(end_residue(Partition(), 1, 2) == 1);
  CHECK(end_residue(Partition(), 1, 3) == 2);
}

TEST_CASE("walls are rows with equal end residues") {
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 8; ++n)
      for (const Partition& p : enumerate_partitions(n)) {
        const Report r = check_wall_dictionary(p, n + 1, l);
        CHECK(r.ok());
      }
}

TEST_CASE("scaling") {
  const Weight w({3, 1, 0}, 2);
  CHECK(scale(w, 1) == w);
  const Weight s = scale(w, 3);
  CHECK(s.level() == 6);
  auto x = w.shifted();
  auto y = s.shifted();
  const Coord shift = y.back() - 3 * x.back();
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(y[k] == 3 * x[k] + shift);
  CHECK_THROWS_AS(scale(w, 0), std::invalid_argument);
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& p : enumerate_partitions(n)) {
        if (p.length() > 3) continue;
        const Weight v = weight_of(p, 4, l);
        for (int r = 1; r <= 3; ++r) CHECK(walls_through(scale(v, r)) == walls_through(v));
      }
}

TEST_CASE("f_i against one translation") {
  CHECK(check_theorem1(Partition(), 0, 2).ok());
  Report all;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& p : enumerate_partitions(n))
        for (int i = 0; i < l; ++i) all.merge(check_theorem1(p, i, l));
  CHECK(all.checked == 150);
  CHECK(all.ok());
  // negative control: counting nodes in later rows breaks the correspondence
  Report bad;
  for (int n = 0; n <= 3; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int i = 0; i < 2; ++i) bad.merge(check_theorem1(p, i, 2, NodeOrder::LaterRows));
  CHECK_FALSE(bad.ok());
}

TEST_CASE("divided powers against one translation") {
  Report all;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n)
      for (const Partition& p : enumerate_partitions(n))
        for (int i = 0; i < l; ++i)
          for (int k = 1; k <= 3; ++k) all.merge(check_theorem2(p, i, k, l));
  CHECK(all.ok());
  // the level four example: two 1-nodes added to (9,6,3)
  CHECK(check_theorem2(Pt({9, 6, 3}), 1, 2, 4).ok());
  const FockVector v = apply_f_divided(1, 2, FockVector::basis(Pt({9, 6, 3}), 4));
  CHECK(v.coeff(Pt({10, 7, 3})) == LaurentPoly(1));
  CHECK(v.coeff(Pt({10, 6, 4})) == LaurentPoly::q());
  CHECK(v.coeff(Pt({9, 7, 4})) == LaurentPoly::monomial(1, 2));
}

TEST_CASE("decomposition numbers against tilting patterns") {
  const Report r = check_main(2, 2);
  CHECK(r.checked == 1);
  CHECK(r.ok());
  CHECK(check_main(2, 0).ok());
  CHECK(check_main(3, 1).ok());
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n) CHECK(check_main(l, n).ok());
}

TEST_CASE("shift statistics from the partition and from the geometry") {
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& p : enumerate_partitions(n))
        for (int i = 0; i < l; ++i)
          for (const Node& g : addable_nodes(p, i, l)) {
            const auto [u, o] = theta_shift_counts(p, i, g.row, l, n + 2);
            const ShiftCounts s = node_shift_counts(p, i, g.row, l);
            CHECK(u - o == s.addable_earlier - s.removable_earlier);
            CHECK(u == s.ends_before_earlier);
            CHECK(o == s.ends_at_earlier);
            CHECK(u - o == f_exponent(p, i, l, g.row));
          }
  // u alone is not the number of earlier addable i-nodes: row 2 of (1,1)
  // ends in residue 1 but (2,2) is not addable
  const auto [u, o] = theta_shift_counts(Pt({1, 1}), 0, 3, 2, 4);
  const ShiftCounts s = node_shift_counts(Pt({1, 1}), 0, 3, 2);
  CHECK(u == 1);
  CHECK(o == 1);
  CHECK(s.addable_earlier == 0);
  CHECK(s.removable_earlier == 0);
}

TEST_CASE("sum identity at q = 1") {
  Report r;
  int tested = 0;
  for (int m = 2; m <= 4; ++m)
    for (int l = 2; l <= 3; ++l)
      for (int n = 0; n <= 6; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
          if (p.length() >= m) continue;
          const Weight w = weight_of(p, m, l);
          if (Orbit(w).is_regular()) continue;
          r.merge(check_corollary1(w));
          ++tested;
        }
  CHECK(tested > 50);
  CHECK(r.ok());
}

TEST_CASE("path independence") {
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n)
      for (const Partition& p : enumerate_partitions(n)) {
        const Report r = check_path_independence(p, l, 10, 99);
        CHECK(r.checked == 10);
        CHECK(r.ok());
      }
  // some seeds reach a dead end; the first success is reproducible
  std::uint64_t seed = 0;
  auto path = random_path(Pt({3, 1}), 2, seed);
  while (!path && seed < 50) path = random_path(Pt({3, 1}), 2, ++seed);
  REQUIRE(path.has_value());
  CHECK(path->front() == Partition());
  CHECK(path->back() == Pt({3, 1}));
  CHECK(random_path(Pt({3, 1}), 2, seed) == path);
  const auto wp = random_weight_path(Weight({2, 2, 0}, 2), 3);
  REQUIRE(wp.has_value());
  CHECK(wp->back() == Weight({2, 2, 0}, 2));
  CHECK(is_base_weight(wp->front()));
}
