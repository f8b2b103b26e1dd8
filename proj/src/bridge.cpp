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

#include "tiltfock/soergel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tiltfock {

namespace {

Coord floor_mod(Coord a, Coord b) {
  const Coord r = a % b;
  return r < 0 ? r + b : r;
}

std::string terms_string(const std::map<Weight, LaurentPoly>& t) {
  Pattern p;
  p.terms = t;
  return p.to_string();
}

std::string case_name(const Partition& lambda, int i, int n, int l) {
  std::ostringstream os;
  os << "l=" << l << " lambda=" << lambda.to_string() << " i=" << i;
  if (n != 1) os << " n=" << n;
  return os.str();
}

}  // namespace

Weight weight_of(const Partition& p, int m, int l) {
  if (p.length() > m) throw std::invalid_argument(p.to_string() + " has more than " + std::to_string(m) + " parts");
  std::vector<Coord> c(m, 0);
  for (int r = 1; r <= p.length(); ++r) c[r - 1] = p.row(r);
  return Weight(std::move(c), l);
}

Partition partition_of(const Weight& w) {
  std::vector<int> parts;
  for (Coord c : w.coords()) {
    if (c < 0) throw std::invalid_argument(w.to_string() + " is not a partition");
    parts.push_back(static_cast<int>(c));
  }
  return Partition(parts);
}

int end_residue(const Partition& p, int row, int l) { return mod(static_cast<long long>(p.row(row)) - row, l); }

Coord adding_class(int i, int m, int l) { return floor_mod(static_cast<Coord>(i) + m, l); }

Weight scale(const Weight& w, int r) {
  if (r < 1) throw std::invalid_argument("scale factor must be positive");
  auto x = w.shifted();
  for (Coord& v : x) v *= r;
  return Weight::from_shifted(x, w.level() * r);
}

void Report::record(bool good, Failure f) {
  ++checked;
  if (good) {
    ++passed;
  } else {
    failures.push_back(std::move(f));
  }
}

Report& Report::merge(const Report& o) {
  checked += o.checked;
  passed += o.passed;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  return *this;
}

Pattern fock_as_pattern(const FockVector& v, int m) {
  Pattern p;
  for (const auto& [mu, c] : v.terms()) p.add_term(weight_of(mu, m, v.level()), c);
  p.retop();
  return p;
}

namespace {

Report compare_step(const Partition& lambda, int i, int n, int l, NodeOrder order) {
  const int m = lambda.size() + n + 1;
  const FockVector v = FockVector::basis(lambda, l);
  const FockVector fv = n == 1 ? apply_f(i, v, order) : apply_f_divided(i, n, v, order);
  const Pattern lhs = fock_as_pattern(fv, m);
  const Weight w = weight_of(lambda, m, l);
  std::map<Weight, LaurentPoly> rhs;
  if (const auto target = add_to_class(w, adding_class(i, m, l), n)) {
    rhs = theta_general(BlockPattern::single(w), *target).terms;
  }
  Report r;
  r.record(lhs.terms == rhs, {case_name(lambda, i, n, l), terms_string(lhs.terms), terms_string(rhs)});
  return r;
}

}  // namespace

Report check_theorem1(const Partition& lambda, int i, int l, NodeOrder order) {
  return compare_step(lambda, i, 1, l, order);
}

Report check_theorem2(const Partition& lambda, int i, int n, int l, NodeOrder order) {
  return compare_step(lambda, i, n, l, order);
}

Report check_main(int l, int n) {
  const int m = n + 1;
  Report r;
  const DecompositionMatrix d = decomposition_matrix(l, n);
  for (std::size_t row = 0; row < d.rows.size(); ++row) {
    std::map<Weight, LaurentPoly> lhs;
    for (std::size_t col = 0; col < d.cols.size(); ++col)
      if (!d.entries[row][col].is_zero()) lhs.emplace(weight_of(d.cols[col], m, l), d.entries[row][col]);
    const BlockPattern p = compute_pattern(weight_of(d.rows[row], m, l));
    r.record(lhs == p.terms, {"l=" + std::to_string(l) + " lambda=" + d.rows[row].to_string(), terms_string(lhs),
                              terms_string(p.terms)});
  }
  return r;
}

ShiftCounts node_shift_counts(const Partition& lambda, int i, int row, int l) {
  ShiftCounts s;
  for (const Node& a : addable_nodes(lambda, i, l))
    if (a.row < row) ++s.addable_earlier;
  for (const Node& b : removable_nodes(lambda, i, l))
    if (b.row < row) ++s.removable_earlier;
  for (int r = 1; r < row; ++r) {
    if (end_residue(lambda, r, l) == mod(i - 1, l)) ++s.ends_before_earlier;
    if (end_residue(lambda, r, l) == mod(i, l)) ++s.ends_at_earlier;
  }
  return s;
}

std::pair<int, int> theta_shift_counts(const Partition& lambda, int i, int row, int l, int m) {
  if (end_residue(lambda, row, l) != mod(i - 1, l)) throw std::invalid_argument("row does not take an i-node");
  const auto x = weight_of(lambda, m, l).shifted();
  const int l2 = 2 * l;
  std::vector<Coord> y(m);
  std::vector<Coord> z(m);
  for (int k = 0; k < m; ++k) y[k] = z[k] = 2 * x[k] - 1;
  z[row - 1] += 2;
  std::vector<Coord> mid = y;
  mid[row - 1] += 1;
  const Weight yw = Weight::from_shifted(y, l2);
  const Weight zw = Weight::from_shifted(z, l2);
  const Weight mw = Weight::from_shifted(mid, l2);
  if (project(mw, Orbit(yw)) != yw || project(mw, Orbit(zw)) != zw)
    throw std::logic_error("intermediate weight does not project back");
  return {u_count_at(mw, yw), o_count_at(mw, zw)};
}

Report check_corollary1(const Weight& mu) {
  const int m = mu.rank();
  const int l = mu.level();
  const int r = m;
  const Weight mu_scaled = scale(mu, r);
  auto x = mu_scaled.shifted();
  for (int k = 0; k < m; ++k) x[k] += m - 1 - k;
  const Weight lambda = Weight::from_shifted(x, r * l);
  const Orbit target(mu_scaled);
  const Integer n_gamma = target.stabilizer_order();

  std::map<Weight, Integer> regular_sum;
  for (const auto& [w, c] : regular_pattern(lambda).terms) {
    const Weight y = project(w, target);
    if (!is_dominant(y)) continue;
    regular_sum[y] += c.at_one();
  }
  std::map<Weight, Integer> lhs;
  for (const auto& [w, v] : compute_pattern(mu).at_one()) lhs.emplace(scale(w, r), v);

  Report rep;
  std::set<Weight> keys;
  for (const auto& [w, v] : lhs) keys.insert(w);
  for (const auto& [w, v] : regular_sum)
    if (v != 0) keys.insert(w);
  bool good = true;
  std::ostringstream ls;
  std::ostringstream rs;
  for (const Weight& w : keys) {
    const Integer a = lhs.count(w) ? lhs.at(w) : Integer(0);
    const Integer b = regular_sum.count(w) ? regular_sum.at(w) : Integer(0);
    if (b % n_gamma != 0 || b / n_gamma != a) good = false;
    ls << w.to_string() << ":" << a << " ";
    rs << w.to_string() << ":" << b << "/" << n_gamma << " ";
  }
  rep.record(good, {"l=" + std::to_string(l) + " mu=" + mu.to_string(), ls.str(), rs.str()});
  return rep;
}

Report check_wall_dictionary(const Partition& lambda, int m, int l) {
  const Weight w = weight_of(lambda, m, l);
  std::vector<Hyperplane> expected;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (end_residue(lambda, a, l) == end_residue(lambda, b, l))
        expected.push_back({a, b, (static_cast<Coord>(lambda.row(a)) - a - lambda.row(b) + b) / l});
  const auto got = walls_through(w);
  auto show = [](const std::vector<Hyperplane>& hs) {
    std::ostringstream os;
    for (const auto& h : hs) os << "(" << h.i << "," << h.j << "," << h.k << ")";
    return os.str();
  };
  Report r;
  r.record(got == expected, {"l=" + std::to_string(l) + " lambda=" + lambda.to_string(), show(got), show(expected)});
  return r;
}

std::optional<std::vector<Partition>> random_path(const Partition& lambda, int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Partition nu;
  std::vector<Partition> path{nu};
  while (nu != lambda) {
    std::vector<std::pair<int, int>> moves;  // (residue, count)
    for (int i = 0; i < l; ++i) {
      const auto add = addable_nodes(nu, i, l);
      for (std::size_t n = 1; n <= add.size(); ++n) {
        const Node& g = add[n - 1];
        if (g.col > lambda.row(g.row)) break;
        moves.emplace_back(i, static_cast<int>(n));
      }
    }
    if (moves.empty()) return std::nullopt;
    const auto [i, n] = moves[rng() % moves.size()];
    const auto add = addable_nodes(nu, i, l);
    for (int k = 0; k < n; ++k) nu = nu.with_node_added(add[k].row);
    path.push_back(nu);
  }
  return path;
}

std::vector<Weight> path_weights(const std::vector<Partition>& path, int m, int l) {
  std::vector<Weight> out;
  for (const Partition& p : path) out.push_back(weight_of(p, m, l));
  return out;
}

std::optional<std::vector<Weight>> random_weight_path(const Weight& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Weight> path{w};
  while (!is_base_weight(path.back())) {
    const auto preds = admissible_predecessors(path.back());
    if (preds.empty()) return std::nullopt;
    path.push_back(preds[rng() % preds.size()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Report check_path_independence(const Partition& lambda, int l, int pairs, std::uint64_t seed) {
  const int m = lambda.size() + 1;
  const Weight w = weight_of(lambda, m, l);
  const BlockPattern reference = compute_pattern(w);
  const bool node_paths = is_l_regular(lambda, l);
  Report r;
  int found = 0;
  for (std::uint64_t attempt = 0; found < pairs && attempt < static_cast<std::uint64_t>(pairs) * 50; ++attempt) {
    // regular partitions alternate between node-by-node and weight paths
    std::optional<std::vector<Weight>> path;
    if (node_paths && attempt % 2 == 0) {
      if (const auto nodes = random_path(lambda, l, seed + attempt)) path = path_weights(*nodes, m, l);
    } else {
      path = random_weight_path(w, seed + attempt);
    }
    if (!path) continue;
    BlockPattern p;
    try {
      p = compute_pattern(w, *path);
    } catch (const PathError&) {
      continue;
    }
    ++found;
    std::ostringstream in;
    in << "l=" << l << " lambda=" << lambda.to_string() << " path=";
    for (const Weight& s : *path) in << s.to_string();
    r.record(p == reference, {in.str(), p.to_string(), reference.to_string()});
  }
  if (found < pairs)
    r.record(false, {"l=" + std::to_string(l) + " lambda=" + lambda.to_string(),
                     "admissible paths found: " + std::to_string(found), "wanted: " + std::to_string(pairs)});
  return r;
}

}  // namespace tiltfock
