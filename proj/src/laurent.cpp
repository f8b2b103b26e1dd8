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

#include <algorithm>
#include <sstream>

namespace tiltfock {

LaurentPoly::LaurentPoly(int c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

bool LaurentPoly::in_q_zq() const { return terms_.empty() || terms_.front().first >= 1; }

bool LaurentPoly::in_zq() const { return terms_.empty() || terms_.front().first >= 0; }

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.emplace_back(x.first + y.first, x.second * y.second);
  return LaurentPoly::from_terms(std::move(raw));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->second;
    const int e = it->first;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  if (s == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed Laurent polynomial: " + text);
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^')) ++end;
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) throw std::invalid_argument("malformed Laurent polynomial: " + text);
    Integer c = 1;
    int e = 0;
    const auto qpos = tok.find('q');
    try {
      if (qpos == std::string::npos) {
        c = Integer(tok);
      } else {
        std::string cs = tok.substr(0, qpos);
        if (!cs.empty()) {
          if (cs.back() != '*') throw std::invalid_argument("missing '*'");
          cs.pop_back();
          c = Integer(cs);
        }
        const std::string rest = tok.substr(qpos + 1);
        if (rest.empty()) {
          e = 1;
        } else if (rest[0] == '^') {
          std::size_t used = 0;
          e = std::stoi(rest.substr(1), &used);
          if (used != rest.size() - 1) throw std::invalid_argument("bad exponent");
        } else {
          throw std::invalid_argument("bad exponent");
        }
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed Laurent polynomial: " + text);
    }
    terms.emplace_back(e, sign * c);
    pos = end;
  }
  return from_terms(std::move(terms));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

LaurentPoly q_int(int n) {
  if (n < 1) throw std::invalid_argument("q_int requires n >= 1");
  std::vector<LaurentPoly::Term> t;
  for (int e = n - 1; e >= 1 - n; e -= 2) t.emplace_back(e, 1);
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k) r *= q_int(k);
  return r;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  const int lowest = a.min_exponent() - b.min_exponent();
  const int eb = b.max_exponent();
  const Integer cb = b.coeff(eb);
  LaurentPoly rem = a;
  std::vector<LaurentPoly::Term> quot;
  while (!rem.is_zero()) {
    const int er = rem.max_exponent();
    const Integer cr = rem.coeff(er);
    const int e = er - eb;
    if (e < lowest || cr % cb != 0)
      throw DivisionError("not divisible: (" + a.to_string() + ") / (" + b.to_string() + ")");
    const LaurentPoly t = LaurentPoly::monomial(cr / cb, e);
    rem -= t * b;
    quot.emplace_back(e, cr / cb);
  }
  return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly symmetric_completion(const LaurentPoly& c) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [e, v] : c.terms()) {
    if (e > 0) break;
    t.emplace_back(e, v);
    if (e < 0) t.emplace_back(-e, v);
  }
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace tiltfock
