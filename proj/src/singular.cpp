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

#include "tiltfock/singular.hpp"

#include "tiltfock/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <mutex>
#include <shared_mutex>

namespace tiltfock {

namespace {

Coord floor_mod(Coord a, Coord b) {
  const Coord r = a % b;
  return r < 0 ? r + b : r;
}

Weight rescale(const Weight& w, Coord num, Coord offset, int level) {
  auto x = w.shifted();
  for (Coord& v : x) v = num * v + offset;
  return Weight::from_shifted(x, level);
}

Weight halve(const Weight& w, int level) {
  auto x = w.shifted();
  for (Coord& v : x) {
    if (floor_mod(v, 2) != 1) throw std::logic_error("halving an even coordinate of " + w.to_string());
    v = (v + 1) / 2;
  }
  return Weight::from_shifted(x, level);
}

bool connectable(const std::vector<Coord>& xs, const std::vector<Coord>& xt, int level) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Coord a = std::min(xs[i] - xs[j], xt[i] - xt[j]);
      const Coord b = std::max(xs[i] - xs[j], xt[i] - xt[j]);
      if (a - floor_mod(a, level) + level < b) return false;
    }
  }
  return true;
}

}  // namespace

BlockPattern BlockPattern::single(const Weight& w) {
  BlockPattern p;
  p.block = Orbit(w);
  p.top = w;
  p.add_term(w, 1);
  return p;
}

BlockPattern theta_down(const BlockPattern& p, const Orbit& target) {
  if (!p.block.less_singular_than(target))
    throw std::invalid_argument("translation onto the " + target.to_string() + " from the less singular " +
                                p.block.to_string() + " is not defined");
  BlockPattern out;
  out.block = target;
  for (const auto& [w, c] : p.terms) {
    const Weight y = project(w, target);
    if (is_dominant(y)) out.add_term(y, c.shifted(-o_count_at(w, y)));
  }
  out.top = p.top;
  out.retop();
  return out;
}

BlockPattern theta_up(const BlockPattern& p, const Orbit& target) {
  if (!target.less_singular_than(p.block))
    throw std::invalid_argument("translation out of the " + p.block.to_string() + " into the " + target.to_string() +
                                " is not defined");
  BlockPattern out;
  out.block = target;
  for (const auto& [y, c] : p.terms)
    for (const Weight& x : star_points(y, target))
      if (is_dominant(x)) out.add_term(x, c.shifted(u_count_at(x, y)));
  out.top = p.top;
  out.retop();
  return out;
}

BlockPattern theta_general(const BlockPattern& p, const Weight& target) {
  const Orbit target_block(target);
  if (target_block == p.block) return p;
  if (target.rank() != p.top.rank() || target.level() != p.top.level())
    throw PathError("target " + target.to_string() + " has a different rank or level");
  const int level = target.level();
  const auto xs = p.top.shifted();
  const auto xt = target.shifted();
  const int m = target.rank();
  if (!connectable(xs, xt, level))
    throw PathError(p.top.to_string() + " and " + target.to_string() + " are separated by a hyperplane");
  const int level2 = 2 * level;
  BlockPattern doubled;
  doubled.block = Orbit(rescale(p.top, 2, -1, level2));
  doubled.top = rescale(p.top, 2, -1, level2);
  for (const auto& [w, c] : p.terms) doubled.add_term(rescale(w, 2, -1, level2), c);
  std::vector<Coord> xm(m);
  for (int i = 0; i < m; ++i) xm[i] = xs[i] + xt[i] - 1;
  const Orbit middle(Weight::from_shifted(xm, level2));
  const Orbit target2(rescale(target, 2, -1, level2));
  BlockPattern up = theta_up(doubled, middle);
  BlockPattern down = theta_down(up, target2);
  BlockPattern out;
  out.block = target_block;
  for (const auto& [w, c] : down.terms) out.add_term(halve(w, level), c);
  out.top = target;
  out.retop();
  return out;
}

BlockPattern reduce_singular(const BlockPattern& p, const KnownPatterns& known, std::vector<Subtraction>* log) {
  for (const auto& [w, c] : p.terms)
    if (!p.block.contains(w)) throw std::invalid_argument(w.to_string() + " is not in the " + p.block.to_string());
  BlockPattern out;
  out.block = p.block;
  static_cast<Pattern&>(out) = reduce_to_indecomposable(p, known, log);
  return out;
}

bool is_base_weight(const Weight& w) {
  const auto x = w.shifted();
  if (x.front() - x.back() <= w.level()) return true;
  return orbit_points_below(Orbit(w), w).size() == 1;
}

std::optional<Weight> add_to_class(const Weight& w, Coord c, int n) {
  auto x = w.shifted();
  int added = 0;
  for (int b = 0; b < w.rank() && added < n; ++b) {
    if (floor_mod(x[b] - c, w.level()) == 0) {
      ++x[b];
      ++added;
    }
  }
  if (added < n) return std::nullopt;
  return Weight::from_shifted(x, w.level());
}

namespace {

struct SingularStore {
  std::shared_mutex mu;
  std::map<Weight, BlockPattern> memo;
  std::map<Weight, std::vector<Weight>> paths;
};

SingularStore& singular_store() {
  static SingularStore s;
  return s;
}

Partition partition_of_weight(const Weight& w) {
  std::vector<int> parts;
  for (Coord c : w.coords()) parts.push_back(static_cast<int>(c));
  return Partition(parts);
}

Weight weight_of_partition(const Partition& p, int rank, int level) {
  std::vector<Coord> c(rank, 0);
  for (int r = 1; r <= p.length(); ++r) c[r - 1] = p.row(r);
  return Weight(c, level);
}

std::vector<Weight> ladder_path(const Weight& w) {
  const Partition lambda = partition_of_weight(w);
  const int l = w.level();
  std::map<int, std::vector<int>> ladders;  // ladder -> rows of its nodes
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) ladders[(l - 1) * (c - 1) + (r - 1)].push_back(r);
  std::vector<int> parts(lambda.length(), 0);
  std::vector<Weight> path{weight_of_partition(Partition(), w.rank(), l)};
  for (const auto& [ladder, rows] : ladders) {
    for (int r : rows) ++parts[r - 1];
    path.push_back(weight_of_partition(Partition(parts), w.rank(), l));
  }
  return path;
}

// One admissible translation step BlockPattern(nu) -> target, or nullopt.
std::optional<BlockPattern> try_step(const BlockPattern& from, const Weight& target) {
  BlockPattern q;
  try {
    q = theta_general(from, target);
  } catch (const PathError&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (q.coeff(target) != LaurentPoly(1)) return std::nullopt;
  for (const auto& [v, c] : q.terms)
    if (v != target && (!weight_leq(v, target))) return std::nullopt;
  q.top = target;
  return q;
}

// Lower dominant weights nu = w - delta (delta_m = 0, entries at most l) in a
// common alcove closure with w, smallest steps first.
std::vector<Weight> predecessor_candidates(const Weight& w) {
  const int m = w.rank();
  const int level = w.level();
  const auto x = w.shifted();
  std::vector<std::vector<Coord>> deltas;
  std::vector<Coord> d(m, 0);
  auto gen = [&](auto&& self, int i) -> void {
    if (i == m - 1) {
      if (std::any_of(d.begin(), d.end(), [](Coord v) { return v != 0; })) deltas.push_back(d);
      return;
    }
    for (Coord v = 0; v <= level; ++v) {
      d[i] = v;
      self(self, i + 1);
    }
    d[i] = 0;
  };
  gen(gen, 0);
  auto total = [](const std::vector<Coord>& v) { return std::accumulate(v.begin(), v.end(), Coord{0}); };
  std::stable_sort(deltas.begin(), deltas.end(), [&](const auto& a, const auto& b) {
    const Coord ta = total(a);
    const Coord tb = total(b);
    return ta != tb ? ta < tb : a > b;
  });
  std::vector<Weight> out;
  for (const auto& delta : deltas) {
    auto y = x;
    for (int k = 0; k < m; ++k) y[k] -= delta[k];
    const Weight nu = Weight::from_shifted(y, level);
    if (is_dominant(nu) && connectable(y, x, level)) out.push_back(nu);
  }
  return out;
}

bool admissible_from(const Weight& nu, const Weight& w) {
  try {
    return try_step(compute_pattern(nu), w).has_value();
  } catch (const PathError&) {
    return false;
  }
}

// The first admissible predecessor, preceded by its own canonical path.
std::vector<Weight> searched_path(const Weight& w) {
  if (is_base_weight(w)) return {w};
  auto& st = singular_store();
  {
    std::shared_lock lock(st.mu);
    auto it = st.paths.find(w);
    if (it != st.paths.end()) return it->second;
  }
  for (const Weight& nu : predecessor_candidates(w)) {
    if (!admissible_from(nu, w)) continue;
    std::vector<Weight> path = canonical_path(nu);
    path.push_back(w);
    std::unique_lock lock(st.mu);
    return st.paths.try_emplace(w, std::move(path)).first->second;
  }
  throw PathError("no admissible path reaches " + w.to_string());
}

}  // namespace

std::vector<Weight> canonical_path(const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument(w.to_string() + " is not dominant");
  if (is_l_regular(partition_of_weight(w), w.level())) return ladder_path(w);
  return searched_path(w);
}

BlockPattern compute_pattern(const Weight& w, const std::optional<std::vector<Weight>>& path) {
  if (!is_dominant(w)) throw std::invalid_argument(w.to_string() + " is not dominant");
  auto& st = singular_store();
  if (!path) {
    std::shared_lock lock(st.mu);
    auto it = st.memo.find(w);
    if (it != st.memo.end()) return it->second;
  }
  std::vector<Weight> steps;
  if (path) {
    steps = *path;
  } else if (is_base_weight(w)) {
    steps = {w};
  } else {
    steps = canonical_path(w);
  }
  if (steps.empty() || steps.back() != w) throw PathError("path does not end at " + w.to_string());
  for (const Weight& s : steps)
    if (s.rank() != w.rank() || s.level() != w.level() || !is_dominant(s))
      throw PathError("path weight " + s.to_string() + " is not a dominant weight of the right rank and level");
  if (!is_base_weight(steps.front())) throw PathError("path starts at " + steps.front().to_string() + ", not a base weight");

  const KnownPatterns known = [](const Weight& nu) -> Pattern { return compute_pattern(nu); };
  BlockPattern p = BlockPattern::single(steps.front());
  std::size_t t = 1;
  if (!path && steps.size() > 2) {
    // the canonical path of the predecessor is usually a prefix of ours
    const std::vector<Weight> prefix(steps.begin(), steps.end() - 1);
    if (canonical_path(prefix.back()) == prefix) {
      p = compute_pattern(prefix.back());
      t = steps.size() - 1;
    }
  }
  for (; t < steps.size(); ++t) {
    auto q = try_step(p, steps[t]);
    if (!q) throw PathError("step " + p.top.to_string() + " -> " + steps[t].to_string() + " is not admissible");
    p = reduce_singular(*q, known);
  }
  if (!p.is_indecomposable()) throw std::logic_error("pattern of " + w.to_string() + " is not indecomposable");
  if (!path) {
    std::unique_lock lock(st.mu);
    return st.memo.try_emplace(w, std::move(p)).first->second;
  }
  return p;
}

std::vector<Weight> admissible_predecessors(const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument(w.to_string() + " is not dominant");
  std::vector<Weight> out;
  for (const Weight& nu : predecessor_candidates(w))
    if (admissible_from(nu, w)) out.push_back(nu);
  return out;
}

void clear_singular_cache() {
  auto& st = singular_store();
  std::unique_lock lock(st.mu);
  st.memo.clear();
  st.paths.clear();
}

}  // namespace tiltfock
