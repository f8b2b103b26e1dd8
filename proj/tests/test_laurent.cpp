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

#include "tiltfock/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace tiltfock;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::vector<LaurentPoly::Term> t;
  const int n = static_cast<int>(rng() % 5);
  for (int k = 0; k < n; ++k) t.emplace_back(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 7) - 3);
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("addition") {
  CHECK(P("q") + P("q^-1") == P("q + q^-1"));
  CHECK(P("2 - q^3") + LaurentPoly() == P("2 - q^3"));
  const LaurentPoly s = P("1 - q") + P("q");
  CHECK(s == LaurentPoly(1));
  CHECK(s.terms().size() == 1);
}

TEST_CASE("multiplication") {
  CHECK(LaurentPoly::q() * LaurentPoly::monomial(1, -1) == LaurentPoly(1));
  CHECK(P("q + q^-1") * P("q + q^-1") == P("q^2 + 2 + q^-2"));
  CHECK((P("3*q^5 - 1") * LaurentPoly()).is_zero());
}

TEST_CASE("bar") {
  CHECK(LaurentPoly::q().bar() == LaurentPoly::monomial(1, -1));
  CHECK(P("q + q^-1").bar() == P("q + q^-1"));
  CHECK(P("2*q^3 - q^-2 + 7").bar().bar() == P("2*q^3 - q^-2 + 7"));
}

TEST_CASE("q-integers and factorials") {
  CHECK(q_int(1) == LaurentPoly(1));
  CHECK(q_int(2) == P("q + q^-1"));
  CHECK(q_int(3) == P("q^2 + 1 + q^-2"));
  CHECK(q_factorial(0) == LaurentPoly(1));
  CHECK(q_factorial(2) == P("q + q^-1"));
  CHECK(q_factorial(3) == P("q + q^-1") * P("q^2 + 1 + q^-2"));
  CHECK(q_factorial(3) == P("q^3 + 2*q + 2*q^-1 + q^-3"));
  for (int n = 1; n <= 8; ++n) {
    CHECK(q_int(n).bar() == q_int(n));
    CHECK(q_factorial(n).bar() == q_factorial(n));
    CHECK(q_int(n).at_one() == n);
  }
  CHECK_THROWS_AS(q_int(0), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("q^2 + 2 + q^-2"), P("q + q^-1")) == P("q + q^-1"));
  CHECK(exact_divide(P("5*q^-3 + q"), LaurentPoly(1)) == P("5*q^-3 + q"));
  CHECK_THROWS_AS(exact_divide(LaurentPoly::q(), P("q + q^-1")), DivisionError);
  CHECK_THROWS_AS(exact_divide(P("3"), P("2")), DivisionError);
  CHECK_THROWS_AS(exact_divide(P("1"), LaurentPoly()), std::invalid_argument);
}

TEST_CASE("symmetric completion") {
  CHECK(symmetric_completion(P("q^-1 + 3 + q^3")) == P("q + q^-1 + 3"));
  CHECK(symmetric_completion(P("q^2")).is_zero());
  CHECK(symmetric_completion(P("q + q^-1")) == P("q + q^-1"));
  CHECK(symmetric_completion(P("-2*q^-2 + q")) == P("-2*q^-2 - 2*q^2"));
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
    const LaurentPoly g = symmetric_completion(a);
    CHECK(g.bar() == g);
    CHECK((a - g).in_q_zq());
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    for (const auto& [e, v] : (a * b).terms()) CHECK(v != 0);
  }
}

TEST_CASE("text round trip") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("q^-2 + 3 - 2*q").to_string() == "-2*q + 3 + q^-2");
  CHECK(P("q").to_string() == "q");
  CHECK(P("-q^2").to_string() == "-q^2");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng);
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
  CHECK_THROWS_AS(P("q^"), std::invalid_argument);
  CHECK_THROWS_AS(P("2q"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
}

TEST_CASE("large coefficients do not overflow") {
  LaurentPoly p = P("q + 1");
  LaurentPoly acc = 1;
  for (int k = 0; k < 80; ++k) acc *= p;
  // the middle binomial coefficient of 80
  CHECK(acc.coeff(40).str() == "107507208733336176461620");
  CHECK(acc.at_one().str() == "1208925819614629174706176");
}
