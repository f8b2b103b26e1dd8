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

#include "tiltfock/laurent.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltfock {

using Coord = long long;

class ProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight (lambda_1, ..., lambda_m) for SL_m at level l.  Weights that
/// differ by a constant vector are identified; the stored representative
/// has lambda_m = 0.  The shifted point x = lambda + rho uses
/// rho = (m, m-1, ..., 1), so x_m = 1.
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<Coord> coords, int level);
  static Weight from_shifted(const std::vector<Coord>& x, int level);

  int rank() const { return static_cast<int>(coords_.size()); }
  int level() const { return level_; }
  const std::vector<Coord>& coords() const { return coords_; }
  Coord operator[](int i) const { return coords_[i]; }
  std::vector<Coord> shifted() const;
  Coord sum() const;

  std::string to_string() const;  // "[2,1,0]"
  static Weight parse(const std::string& text, int level);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Coord> coords_;
  int level_ = 2;
};

/// The locus x_i - x_j = k*l, with 1-based i < j.
struct Hyperplane {
  int i = 1;
  int j = 2;
  Coord k = 0;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

enum class Side { Below, On, Above };

std::vector<Hyperplane> walls_through(const Weight& w);
int wall_count(const Weight& w);
Side side(const Weight& w, const Hyperplane& h);
bool is_dominant(const Weight& w);

/// Coordinates of w shifted by a constant so that their sum equals target_sum.
/// Throws when the two sums are not congruent modulo the rank.
std::vector<Coord> lifted(const Weight& w, Coord target_sum);
/// Dominance order between weights of one block.
bool weight_leq(const Weight& a, const Weight& b);
/// Lexicographic comparison of lifted coordinates; a linear extension of
/// weight_leq.  Returns <0, 0, >0.
int weight_compare(const Weight& a, const Weight& b);

/// An orbit of the affine Weyl group, i.e. a block, described by its unique
/// point in the closed fundamental alcove.
class Orbit {
 public:
  Orbit() = default;
  explicit Orbit(const Weight& representative);

  const Weight& fundamental() const { return fundamental_; }
  int rank() const { return fundamental_.rank(); }
  int level() const { return fundamental_.level(); }
  bool contains(const Weight& w) const;
  // Sizes of the residue classes of x mod l, descending.
  std::vector<int> class_sizes() const;
  Integer stabilizer_order() const;
  int hyperplanes_through() const;
  bool is_regular() const;
  // Walls of the fundamental alcove containing the fundamental point;
  // entry 0 is the affine wall, entry j the wall x_j = x_{j+1}.
  std::vector<bool> wall_type() const;
  // True iff the stabilizer of this orbit is contained in that of other.
  bool less_singular_than(const Orbit& other) const;

  std::string to_string() const;
  friend auto operator<=>(const Orbit&, const Orbit&) = default;
  friend bool operator==(const Orbit&, const Orbit&) = default;

 private:
  Weight fundamental_;
};

/// The unique point of the orbit in the closure of the facette of w.
Weight project(const Weight& w, const Orbit& orbit);
/// Points x of the orbit whose facette closure contains w, i.e. the orbit
/// points in the open star of w.  Not filtered by dominance.
std::vector<Weight> star_points(const Weight& w, const Orbit& orbit);

int u_count(const Weight& w, const Orbit& orbit);
int o_count(const Weight& w, const Orbit& orbit);
// u and o against an already projected point.
int u_count_at(const Weight& w, const Weight& target);
int o_count_at(const Weight& w, const Weight& target);

/// Dominant orbit points below bound in the dominance order, descending.
std::vector<Weight> orbit_points_below(const Orbit& orbit, const Weight& bound);

}  // namespace tiltfock
