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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiltfock {

using Integer = boost::multiprecision::cpp_int;

class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Z[q, q^-1].  Terms are kept sorted by ascending exponent with
/// no zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;  // (exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiplication by q^k
  Integer at_one() const;

  // True iff every exponent is >= 1, i.e. the element lies in qZ[q].
  bool in_q_zq() const;
  // True iff every exponent is >= 0.
  bool in_zq() const;
  bool is_bar_invariant() const { return bar() == *this; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // "c*q^k + ..." with exponents descending; "0" for the zero element.
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void add_scaled(const LaurentPoly& o, int sign);
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar(const LaurentPoly& a);

/// Balanced quantum integer q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly q_int(int n);
LaurentPoly q_factorial(int n);

/// c with b*c == a; throws DivisionError when no such Laurent polynomial exists.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// The bar-invariant gamma with c - gamma in qZ[q].
LaurentPoly symmetric_completion(const LaurentPoly& c);

}  // namespace tiltfock
