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

#include "tiltfock/soergel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace tiltfock {

namespace {

Coord floor_mod(Coord a, Coord b) {
  const Coord r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

RegularBlock::RegularBlock(const Weight& representative) : orbit_(representative) {
  if (!orbit_.is_regular())
    throw std::invalid_argument(representative.to_string() + " is not a regular weight at level " +
                                std::to_string(representative.level()));
  r_ = orbit_.fundamental().shifted();
}

std::vector<Coord> RegularBlock::mirror_shifted(const Weight& a, int s) const {
  if (!orbit_.contains(a)) throw std::invalid_argument(a.to_string() + " is not in the " + orbit_.to_string());
  if (s < 0 || s >= rank()) throw std::invalid_argument("wall label out of range");
  const int m = rank();
  const int level = this->level();
  auto x = a.shifted();
  const Coord c = (std::accumulate(x.begin(), x.end(), Coord{0}) - std::accumulate(r_.begin(), r_.end(), Coord{0})) / m;
  // label[t] = coordinate of x carrying the residue of r_t
  std::vector<int> label(m, -1);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < m; ++t)
      if (floor_mod(x[i] - c - r_[t], level) == 0) label[t] = i;
  if (s == 0) {
    const Coord d = level - (r_.front() - r_.back());
    x[label.front()] += d;
    x[label.back()] -= d;
  } else {
    const Coord d = r_[s] - r_[s - 1];
    x[label[s - 1]] += d;
    x[label[s]] -= d;
  }
  return x;
}

Weight RegularBlock::mirror(const Weight& a, int s) const { return Weight::from_shifted(mirror_shifted(a, s), level()); }

int RegularBlock::mirror_direction(const Weight& a, int s) const {
  const auto y = mirror_shifted(a, s);
  const auto x = a.shifted();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()) ? 1 : -1;
}

int RegularBlock::alcove_length(const Weight& a) const {
  if (!is_dominant(a)) throw std::invalid_argument(a.to_string() + " is not dominant");
  const auto x = a.shifted();
  int n = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) n += static_cast<int>((x[i] - x[j]) / level());
  return n;
}

Pattern theta_s(const Pattern& p, int s, const RegularBlock& block) {
  Pattern out;
  for (const auto& [a, c] : p.terms) {
    const Weight as = block.mirror(a, s);
    if (!is_dominant(as)) continue;
    out.add_term(as, c);
    out.add_term(a, c.shifted(block.mirror_direction(a, s)));
  }
  out.top = p.top;
  out.retop();
  return out;
}

namespace {

struct RegularStore {
  std::shared_mutex mu;
  std::map<Weight, Pattern> memo;
};

RegularStore& regular_store() {
  static RegularStore s;
  return s;
}

}  // namespace

Pattern regular_pattern(const Weight& a) {
  auto& st = regular_store();
  {
    std::shared_lock lock(st.mu);
    auto it = st.memo.find(a);
    if (it != st.memo.end()) return it->second;
  }
  if (!is_dominant(a)) throw std::invalid_argument(a.to_string() + " is not dominant");
  const RegularBlock block(a);
  Pattern result;
  result.top = a;
  if (block.alcove_length(a) == 0) {
    result.add_term(a, 1);
  } else {
    int wall = -1;
    for (int s = 0; s < block.rank() && wall < 0; ++s) {
      const Weight as = block.mirror(a, s);
      if (is_dominant(as) && block.mirror_direction(a, s) < 0) wall = s;
    }
    if (wall < 0) throw std::logic_error("no lower wall for the dominant alcove of " + a.to_string());
    Pattern p = theta_s(regular_pattern(block.mirror(a, wall)), wall, block);
    p.top = a;
    result = reduce_to_indecomposable(std::move(p), regular_pattern);
    if (!result.is_indecomposable()) throw std::logic_error("regular pattern of " + a.to_string() + " is not indecomposable");
  }
  std::unique_lock lock(st.mu);
  return st.memo.try_emplace(a, std::move(result)).first->second;
}

std::vector<Weight> dominant_alcoves(const RegularBlock& block, int max_length) {
  std::set<Weight> seen{block.fundamental()};
  std::vector<Weight> frontier{block.fundamental()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& a : frontier) {
      for (int s = 0; s < block.rank(); ++s) {
        const Weight b = block.mirror(a, s);
        if (!is_dominant(b) || block.alcove_length(b) > max_length) continue;
        if (seen.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    return block.alcove_length(x) < block.alcove_length(y);
  });
  return out;
}

void clear_regular_cache() {
  auto& st = regular_store();
  std::unique_lock lock(st.mu);
  st.memo.clear();
}

}  // namespace tiltfock
