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

#include "tiltfock/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tiltfock {

LaurentPoly Pattern::coeff(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? LaurentPoly() : it->second;
}

void Pattern::add_term(const Weight& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Pattern& Pattern::operator+=(const Pattern& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

Pattern& Pattern::operator-=(const Pattern& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

Pattern Pattern::scaled(const LaurentPoly& c) const {
  Pattern out;
  out.top = top;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : terms) out.terms.emplace(w, a * c);
  return out;
}

std::vector<Weight> Pattern::support_descending() const {
  std::vector<Weight> out;
  for (const auto& [w, c] : terms) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return weight_compare(a, b) > 0; });
  return out;
}

bool Pattern::is_indecomposable() const {
  if (coeff(top) != LaurentPoly(1)) return false;
  for (const auto& [w, c] : terms)
    if (w != top && !c.in_q_zq()) return false;
  return true;
}

std::map<Weight, Integer> Pattern::at_one() const {
  std::map<Weight, Integer> out;
  for (const auto& [w, c] : terms) {
    Integer v = c.at_one();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

void Pattern::retop() {
  if (!terms.empty()) top = support_descending().front();
}

std::string Pattern::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Weight& w : support_descending()) {
    if (!first) os << " + ";
    first = false;
    const LaurentPoly& c = terms.at(w);
    if (c != LaurentPoly(1)) os << "(" << c.to_string() << ")";
    os << w.to_string();
  }
  return os.str();
}

Pattern kill_nondominant(const Pattern& p) {
  Pattern out;
  out.top = p.top;
  for (const auto& [w, c] : p.terms)
    if (is_dominant(w)) out.terms.emplace(w, c);
  return out;
}

Pattern reduce_to_indecomposable(Pattern p, const KnownPatterns& known, std::vector<Subtraction>* log) {
  if (p.coeff(p.top) != LaurentPoly(1))
    throw std::invalid_argument("pattern to reduce must have top coefficient 1 at " + p.top.to_string());
  for (;;) {
    const Weight* offender = nullptr;
    for (const auto& [w, c] : p.terms) {
      if (w == p.top || c.in_q_zq()) continue;
      if (offender == nullptr || weight_compare(w, *offender) > 0) offender = &w;
    }
    if (offender == nullptr) break;
    const Weight nu = *offender;
    if (weight_compare(nu, p.top) >= 0)
      throw std::logic_error("offending weight " + nu.to_string() + " is not below the top " + p.top.to_string());
    const Pattern q = known(nu);
    if (q.top != nu || q.coeff(nu) != LaurentPoly(1))
      throw std::logic_error("known pattern for " + nu.to_string() + " is not indecomposable");
    const LaurentPoly gamma = symmetric_completion(p.coeff(nu));
    p -= q.scaled(gamma);
    if (log != nullptr) log->push_back({nu, gamma});
  }
  return p;
}

}  // namespace tiltfock
