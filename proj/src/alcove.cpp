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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tiltfock {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord floor_mod(Coord a, Coord b) { return a - b * floor_div(a, b); }

// Facette data of a shifted point: x = L*a + r with 0 <= r < L.
struct FacetteData {
  std::vector<Coord> a;
  std::vector<Coord> r;
};

FacetteData facette_data(const std::vector<Coord>& x, int level) {
  FacetteData f;
  for (Coord v : x) {
    f.a.push_back(floor_div(v, level));
    f.r.push_back(floor_mod(v, level));
  }
  return f;
}

// Coordinates grouped by equal r, groups ordered by increasing r.
std::vector<std::vector<int>> residue_groups(const std::vector<Coord>& r) {
  std::map<Coord, std::vector<int>> by;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) by[r[i]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [res, idx] : by) out.push_back(std::move(idx));
  return out;
}

// All orbit points of the form L*a + Z where Z is constant on each group,
// weakly increasing along the group order and of total spread at most L.
// This set is the orbit's intersection with the closure of the facette
// described by (a, groups).
std::vector<Weight> closure_points(const std::vector<Coord>& a, const std::vector<std::vector<int>>& groups,
                                   const Orbit& orbit) {
  const int level = orbit.level();
  const int m = orbit.rank();
  std::vector<int> orbit_count(level, 0);
  for (Coord v : orbit.fundamental().shifted()) ++orbit_count[floor_mod(v, level)];

  std::set<Weight> found;
  std::vector<Coord> z(groups.size(), 0);
  std::vector<int> avail(level, 0);
  auto emit = [&]() {
    std::vector<Coord> y(m);
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (int i : groups[g]) y[i] = level * a[i] + z[g];
    Weight w = Weight::from_shifted(y, level);
    if (orbit.contains(w)) found.insert(w);
  };
  auto dfs = [&](auto&& self, std::size_t g, Coord lo) -> void {
    if (g == groups.size()) {
      emit();
      return;
    }
    const int need = static_cast<int>(groups[g].size());
    for (Coord v = lo; v <= (g == 0 ? 0 : level); ++v) {
      const int res = static_cast<int>(floor_mod(v, level));
      if (avail[res] < need) continue;
      avail[res] -= need;
      z[g] = v;
      self(self, g + 1, v);
      avail[res] += need;
    }
  };
  for (int s = 0; s < level; ++s) {
    if (orbit_count[s] == 0) continue;
    for (int t = 0; t < level; ++t) avail[t] = orbit_count[(t + s) % level];
    dfs(dfs, 0, 0);
  }
  return {found.begin(), found.end()};
}

std::vector<int> shifted_residue_counts(const std::vector<Coord>& x, int level, Coord shift) {
  std::vector<int> c(level, 0);
  for (Coord v : x) ++c[floor_mod(v - shift, level)];
  return c;
}

}  // namespace

Weight::Weight(std::vector<Coord> coords, int level) : coords_(std::move(coords)), level_(level) {
  if (coords_.empty()) throw std::invalid_argument("weight needs at least one coordinate");
  if (level_ < 1) throw std::invalid_argument("level must be positive");
  const Coord last = coords_.back();
  for (Coord& c : coords_) c -= last;
}

Weight Weight::from_shifted(const std::vector<Coord>& x, int level) {
  const int m = static_cast<int>(x.size());
  std::vector<Coord> c(m);
  for (int i = 0; i < m; ++i) c[i] = x[i] - (m - i);
  return Weight(std::move(c), level);
}

std::vector<Coord> Weight::shifted() const {
  const int m = rank();
  std::vector<Coord> x(m);
  for (int i = 0; i < m; ++i) x[i] = coords_[i] + (m - i);
  return x;
}

Coord Weight::sum() const { return std::accumulate(coords_.begin(), coords_.end(), Coord{0}); }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << coords_[i];
  os << "]";
  return os.str();
}

Weight Weight::parse(const std::string& text, int level) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    if (s.size() < 2 || (s.back() != ']' && s.back() != ')')) throw std::invalid_argument("malformed weight: " + text);
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Coord> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    try {
      c.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight: " + text);
    }
    if (used != tok.size()) throw std::invalid_argument("malformed weight: " + text);
  }
  if (c.empty()) throw std::invalid_argument("malformed weight: " + text);
  return Weight(std::move(c), level);
}

std::vector<Hyperplane> walls_through(const Weight& w) {
  const auto x = w.shifted();
  std::vector<Hyperplane> out;
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j)
      if (floor_mod(x[i] - x[j], w.level()) == 0) out.push_back({i + 1, j + 1, (x[i] - x[j]) / w.level()});
  return out;
}

int wall_count(const Weight& w) { return static_cast<int>(walls_through(w).size()); }

Side side(const Weight& w, const Hyperplane& h) {
  if (h.i < 1 || h.j > w.rank() || h.i >= h.j) throw std::invalid_argument("hyperplane does not match weight rank");
  const auto x = w.shifted();
  const Coord d = x[h.i - 1] - x[h.j - 1] - h.k * w.level();
  return d > 0 ? Side::Above : (d < 0 ? Side::Below : Side::On);
}

bool is_dominant(const Weight& w) {
  for (int i = 0; i + 1 < w.rank(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

std::vector<Coord> lifted(const Weight& w, Coord target_sum) {
  const Coord diff = w.sum() - target_sum;
  if (floor_mod(diff, w.rank()) != 0) throw std::invalid_argument("weights " + w.to_string() + " lie in different blocks");
  const Coord c = diff / w.rank();
  std::vector<Coord> out = w.coords();
  for (Coord& v : out) v -= c;
  return out;
}

bool weight_leq(const Weight& a, const Weight& b) {
  const auto la = lifted(a, b.sum());
  Coord pa = 0;
  Coord pb = 0;
  for (int i = 0; i < a.rank(); ++i) {
    pa += la[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

int weight_compare(const Weight& a, const Weight& b) {
  const auto la = lifted(a, b.sum());
  for (int i = 0; i < a.rank(); ++i)
    if (la[i] != b[i]) return la[i] < b[i] ? -1 : 1;
  return 0;
}

Orbit::Orbit(const Weight& representative) {
  auto x = representative.shifted();
  const int level = representative.level();
  std::sort(x.begin(), x.end(), std::greater<>());
  while (x.front() - x.back() > level) {
    const Coord hi = x.front();
    x.front() = x.back() + level;
    x.back() = hi - level;
    std::sort(x.begin(), x.end(), std::greater<>());
  }
  fundamental_ = Weight::from_shifted(x, level);
}

bool Orbit::contains(const Weight& w) const {
  if (w.rank() != rank() || w.level() != level()) return false;
  const auto xw = w.shifted();
  const auto xf = fundamental_.shifted();
  const Coord diff = std::accumulate(xw.begin(), xw.end(), Coord{0}) - std::accumulate(xf.begin(), xf.end(), Coord{0});
  if (floor_mod(diff, rank()) != 0) return false;
  return shifted_residue_counts(xw, level(), diff / rank()) == shifted_residue_counts(xf, level(), 0);
}

std::vector<int> Orbit::class_sizes() const {
  std::vector<int> sizes;
  for (int c : shifted_residue_counts(fundamental_.shifted(), level(), 0))
    if (c > 0) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

Integer Orbit::stabilizer_order() const {
  Integer n = 1;
  for (int s : class_sizes())
    for (int k = 2; k <= s; ++k) n *= k;
  return n;
}

int Orbit::hyperplanes_through() const {
  int n = 0;
  for (int s : class_sizes()) n += s * (s - 1) / 2;
  return n;
}

bool Orbit::is_regular() const {
  for (int s : class_sizes())
    if (s > 1) return false;
  return true;
}

std::vector<bool> Orbit::wall_type() const {
  const auto x = fundamental_.shifted();
  std::vector<bool> j(rank(), false);
  j[0] = x.front() - x.back() == level();
  for (int i = 1; i < rank(); ++i) j[i] = x[i - 1] == x[i];
  return j;
}

bool Orbit::less_singular_than(const Orbit& other) const {
  if (rank() != other.rank() || level() != other.level()) return false;
  const auto a = wall_type();
  const auto b = other.wall_type();
  for (int i = 0; i < rank(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::string Orbit::to_string() const {
  return "orbit of " + fundamental_.to_string() + " at level " + std::to_string(level());
}

Weight project(const Weight& w, const Orbit& orbit) {
  if (w.rank() != orbit.rank() || w.level() != orbit.level())
    throw std::invalid_argument("weight and orbit have different rank or level");
  const auto f = facette_data(w.shifted(), w.level());
  const auto pts = closure_points(f.a, residue_groups(f.r), orbit);
  if (pts.empty()) throw ProjectionError("facette closure of " + w.to_string() + " misses the " + orbit.to_string());
  if (pts.size() > 1) throw std::logic_error("facette closure of " + w.to_string() + " meets an orbit twice");
  return pts.front();
}

std::vector<Weight> star_points(const Weight& w, const Orbit& orbit) {
  if (w.rank() != orbit.rank() || w.level() != orbit.level())
    throw std::invalid_argument("weight and orbit have different rank or level");
  const int m = w.rank();
  const auto y = w.shifted();
  const auto f = facette_data(y, w.level());
  // Some alcove with w in its closure: break residue ties by index.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return f.r[i] < f.r[j]; });
  std::vector<std::vector<int>> singletons;
  for (int i : order) singletons.push_back({i});
  const auto base = closure_points(f.a, singletons, orbit);
  if (base.size() != 1) throw ProjectionError("no point of the " + orbit.to_string() + " near " + w.to_string());
  // Every other alcove around w is an image under the stabilizer of w, which
  // permutes the offsets within each residue class of w.
  const auto x0 = base.front().shifted();
  std::vector<Coord> d(m);
  for (int i = 0; i < m; ++i) d[i] = x0[i] - y[i];
  const auto classes = residue_groups(f.r);
  std::set<Weight> out;
  auto rec = [&](auto&& self, std::size_t c, std::vector<Coord>& cur) -> void {
    if (c == classes.size()) {
      std::vector<Coord> x(m);
      for (int i = 0; i < m; ++i) x[i] = y[i] + cur[i];
      out.insert(Weight::from_shifted(x, w.level()));
      return;
    }
    std::vector<Coord> vals;
    for (int i : classes[c]) vals.push_back(d[i]);
    std::sort(vals.begin(), vals.end());
    do {
      for (std::size_t k = 0; k < vals.size(); ++k) cur[classes[c][k]] = vals[k];
      self(self, c + 1, cur);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  std::vector<Coord> cur(m, 0);
  rec(rec, 0, cur);
  return {out.begin(), out.end()};
}

int u_count_at(const Weight& w, const Weight& target) {
  const auto x = w.shifted();
  const auto y = target.shifted();
  int n = 0;
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j)
      if (floor_mod(y[i] - y[j], w.level()) == 0 && x[i] - x[j] < y[i] - y[j]) ++n;
  return n;
}

int o_count_at(const Weight& w, const Weight& target) {
  const auto x = w.shifted();
  const auto y = target.shifted();
  int n = 0;
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j)
      if (floor_mod(y[i] - y[j], w.level()) == 0 && x[i] - x[j] > y[i] - y[j]) ++n;
  return n;
}

int u_count(const Weight& w, const Orbit& orbit) { return u_count_at(w, project(w, orbit)); }

int o_count(const Weight& w, const Orbit& orbit) { return o_count_at(w, project(w, orbit)); }

std::vector<Weight> orbit_points_below(const Orbit& orbit, const Weight& bound) {
  if (bound.rank() != orbit.rank() || bound.level() != orbit.level())
    throw std::invalid_argument("bound and orbit have different rank or level");
  const int m = orbit.rank();
  const int level = orbit.level();
  const auto xb = bound.shifted();
  const auto xf = orbit.fundamental().shifted();
  const Coord total = std::accumulate(xb.begin(), xb.end(), Coord{0});
  const Coord diff = total - std::accumulate(xf.begin(), xf.end(), Coord{0});
  if (floor_mod(diff, m) != 0) return {};
  std::vector<int> avail = shifted_residue_counts(xf, level, -(diff / m));
  std::vector<Coord> prefix(m);
  std::partial_sum(xb.begin(), xb.end(), prefix.begin());

  std::vector<Weight> out;
  std::vector<Coord> x(m);
  auto dfs = [&](auto&& self, int i, Coord partial) -> void {
    if (i == m - 1) {
      const Coord v = total - partial;
      if ((m == 1 || v < x[i - 1]) && avail[floor_mod(v, level)] > 0) {
        x[i] = v;
        out.push_back(Weight::from_shifted(x, level));
      }
      return;
    }
    Coord hi = prefix[i] - partial;
    if (i > 0) hi = std::min(hi, x[i - 1] - 1);
    const Coord k = m - 1 - i;
    for (Coord v = hi;; --v) {
      // The remaining k coordinates are strictly below v.
      if (total - partial - v > k * v - k * (k + 1) / 2) break;
      const int res = static_cast<int>(floor_mod(v, level));
      if (avail[res] == 0) continue;
      --avail[res];
      x[i] = v;
      self(self, i + 1, partial + v);
      ++avail[res];
    }
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return weight_compare(a, b) > 0; });
  return out;
}

}  // namespace tiltfock
