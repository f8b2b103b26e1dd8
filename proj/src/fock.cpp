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

#include "tiltfock/fock.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace tiltfock {

FockVector FockVector::basis(const Partition& p, int level, LaurentPoly c) {
  FockVector v(level);
  v.add_term(p, c);
  return v;
}

LaurentPoly FockVector::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add_term(const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
  FockVector out(level_);
  if (c.is_zero()) return out;
  for (const auto& [p, a] : terms_) out.add_term(p, a * c);
  return out;
}

FockVector FockVector::coefficientwise_bar() const {
  FockVector out(level_);
  for (const auto& [p, a] : terms_) out.terms_.emplace(p, a.bar());
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != LaurentPoly(1)) os << "(" << it->second.to_string() << ")";
    os << "|" << it->first.to_string() << ">";
  }
  return os.str();
}

int f_exponent(const Partition& p, int i, int l, int r, NodeOrder order) {
  int n = 0;
  auto counted = [&](int row) { return order == NodeOrder::EarlierRows ? row < r : row > r; };
  for (const Node& a : addable_nodes(p, i, l))
    if (counted(a.row)) ++n;
  for (const Node& b : removable_nodes(p, i, l))
    if (counted(b.row)) --n;
  return n;
}

FockVector apply_f(int i, const FockVector& v, NodeOrder order) {
  const int l = v.level();
  FockVector out(l);
  for (const auto& [p, c] : v.terms())
    for (const Node& g : addable_nodes(p, i, l))
      out.add_term(p.with_node_added(g.row), c.shifted(f_exponent(p, i, l, g.row, order)));
  return out;
}

FockVector apply_f_divided(int i, int n, const FockVector& v, NodeOrder order) {
  if (n < 1) throw std::invalid_argument("divided power needs n >= 1");
  FockVector w = v;
  for (int k = 0; k < n; ++k) w = apply_f(i, w, order);
  if (n == 1) return w;
  const LaurentPoly fact = q_factorial(n);
  FockVector out(v.level());
  for (const auto& [p, c] : w.terms()) out.add_term(p, exact_divide(c, fact));
  return out;
}

FockVector apply_e(int i, const FockVector& v) {
  const int l = v.level();
  FockVector out(l);
  for (const auto& [p, c] : v.terms()) {
    for (const Node& g : removable_nodes(p, i, l)) {
      int n = 0;
      for (const Node& a : addable_nodes(p, i, l))
        if (a.row > g.row) ++n;
      for (const Node& b : removable_nodes(p, i, l))
        if (b.row > g.row) --n;
      out.add_term(p.with_node_removed(g.row), c.shifted(-n));
    }
  }
  return out;
}

FockVector apply_word(const FWord& w, int l, NodeOrder order) {
  FockVector v = FockVector::basis(Partition(), l);
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_f_divided(it->residue, it->count, v, order);
  return v;
}

WBasis::WBasis(int l, int n) : l_(l), n_(n) {
  for (const Partition& nu : enumerate_partitions(n, true, l)) {
    FockVector w = apply_word(ladder_word(nu, l), l);
    if (w.coeff(nu) != LaurentPoly(1) || w.terms().rbegin()->first != nu)
      throw std::logic_error("ladder word of " + nu.to_string() + " does not lead with it");
    w_.emplace(nu, std::move(w));
  }
}

std::map<Partition, LaurentPoly> WBasis::express(const FockVector& v) const {
  std::map<Partition, LaurentPoly> out;
  FockVector rest = v;
  while (!rest.is_zero()) {
    const auto& [top, c] = *rest.terms().rbegin();
    auto it = w_.find(top);
    if (it == w_.end()) throw std::domain_error("vector is not in the span of the w-basis: residual at " + top.to_string());
    const LaurentPoly a = c;
    out.emplace(top, a);
    rest -= it->second.scaled(a);
  }
  return out;
}

FockVector WBasis::expand(const std::map<Partition, LaurentPoly>& coeffs) const {
  FockVector out(l_);
  for (const auto& [nu, a] : coeffs) out += w_.at(nu).scaled(a);
  return out;
}

std::map<Partition, LaurentPoly> express_in_w_basis(const FockVector& v, const WBasis& basis) {
  return basis.express(v);
}

FockVector bar_involution(const FockVector& v, const WBasis& basis) {
  auto coeffs = basis.express(v);
  for (auto& [nu, a] : coeffs) a = a.bar();
  return basis.expand(coeffs);
}

namespace {

struct Store {
  std::shared_mutex mu;
  std::map<std::pair<int, int>, std::shared_ptr<const WBasis>> bases;
  std::map<std::pair<int, int>, std::shared_ptr<const std::vector<CanonicalBasisElement>>> canon;
};

Store& store() {
  static Store s;
  return s;
}

std::shared_ptr<const WBasis> cached_basis(int l, int n) {
  auto& s = store();
  {
    std::shared_lock lock(s.mu);
    auto it = s.bases.find({l, n});
    if (it != s.bases.end()) return it->second;
  }
  auto b = std::make_shared<const WBasis>(l, n);
  std::unique_lock lock(s.mu);
  return s.bases.try_emplace({l, n}, b).first->second;
}

std::vector<CanonicalBasisElement> compute_canonical_basis(int l, int n) {
  const auto basis = cached_basis(l, n);
  std::vector<Partition> regular = enumerate_partitions(n, true, l);
  std::vector<CanonicalBasisElement> out;
  std::map<Partition, FockVector> known;
  for (auto it = regular.rbegin(); it != regular.rend(); ++it) {
    const Partition& lambda = *it;
    FockVector v = basis->vectors().at(lambda);
    for (auto mu_it = known.rbegin(); mu_it != known.rend(); ++mu_it) {
      const Partition& mu = mu_it->first;
      const LaurentPoly c = v.coeff(mu);
      if (c.in_q_zq()) continue;
      if (!dominance_leq(mu, lambda))
        throw std::logic_error("offending " + mu.to_string() + " is not dominated by " + lambda.to_string());
      v -= mu_it->second.scaled(symmetric_completion(c));
    }
    for (const auto& [mu, c] : v.terms()) {
      if (mu == lambda ? c != LaurentPoly(1) : !c.in_q_zq())
        throw std::logic_error("canonical basis invariant fails for " + lambda.to_string() + " at " + mu.to_string());
      if (!dominance_leq(mu, lambda))
        throw std::logic_error("canonical basis element " + lambda.to_string() + " is not triangular");
    }
    known.emplace(lambda, v);
    out.push_back({lambda, std::move(v)});
  }
  return out;
}

}  // namespace

FockVector bar_involution(const FockVector& v) {
  if (v.is_zero()) return v;
  const int n = v.terms().begin()->first.size();
  return bar_involution(v, *cached_basis(v.level(), n));
}

std::vector<CanonicalBasisElement> canonical_basis(int l, int n) {
  if (l < 2) throw std::invalid_argument("level must be at least 2");
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  auto& s = store();
  {
    std::shared_lock lock(s.mu);
    auto it = s.canon.find({l, n});
    if (it != s.canon.end()) return *it->second;
  }
  auto result = std::make_shared<const std::vector<CanonicalBasisElement>>(compute_canonical_basis(l, n));
  std::unique_lock lock(s.mu);
  return *s.canon.try_emplace({l, n}, result).first->second;
}

const FockVector& canonical_element(const Partition& lambda, int l) {
  canonical_basis(l, lambda.size());
  auto& s = store();
  std::shared_lock lock(s.mu);
  for (const auto& g : *s.canon.at({l, lambda.size()}))
    if (g.label == lambda) return g.expansion;
  throw std::invalid_argument(lambda.to_string() + " is not " + std::to_string(l) + "-regular");
}

DecompositionMatrix decomposition_matrix(int l, int n) {
  DecompositionMatrix d;
  d.l = l;
  d.n = n;
  d.rows = enumerate_partitions(n, true, l);
  d.cols = enumerate_partitions(n);
  const auto basis = canonical_basis(l, n);
  std::map<Partition, const FockVector*> by_label;
  for (const auto& g : basis) by_label.emplace(g.label, &g.expansion);
  for (const Partition& lambda : d.rows) {
    std::vector<LaurentPoly> row;
    for (const Partition& mu : d.cols) row.push_back(by_label.at(lambda)->coeff(mu));
    d.entries.push_back(std::move(row));
  }
  return d;
}

void clear_canonical_cache() {
  auto& s = store();
  std::unique_lock lock(s.mu);
  s.bases.clear();
  s.canon.clear();
}

}  // namespace tiltfock
