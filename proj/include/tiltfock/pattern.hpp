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

#include "tiltfock/alcove.hpp"
#include "tiltfock/laurent.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tiltfock {

/// Finitely supported Weight -> LaurentPoly map with a distinguished top
/// weight.  Houses the tilting patterns of both the regular and the
/// singular combinatorics.
struct Pattern {
  Weight top;
  std::map<Weight, LaurentPoly> terms;

  LaurentPoly coeff(const Weight& w) const;
  void add_term(const Weight& w, const LaurentPoly& c);
  Pattern& operator+=(const Pattern& o);
  Pattern& operator-=(const Pattern& o);
  Pattern scaled(const LaurentPoly& c) const;
  bool is_zero() const { return terms.empty(); }

  // Support sorted by the lifted lexicographic order, largest first.
  std::vector<Weight> support_descending() const;
  // Top coefficient 1, every other coefficient in qZ[q].
  bool is_indecomposable() const;
  // Evaluation of every coefficient at q = 1.
  std::map<Weight, Integer> at_one() const;
  // Makes the largest support weight the top; no-op on zero patterns.
  void retop();

  std::string to_string() const;
  friend bool operator==(const Pattern& a, const Pattern& b) { return a.top == b.top && a.terms == b.terms; }
};

/// Removes weights off the dominant chamber, including its walls.
Pattern kill_nondominant(const Pattern& p);

struct Subtraction {
  Weight weight;
  LaurentPoly gamma;
};

using KnownPatterns = std::function<Pattern(const Weight&)>;

/// Subtracts bar-invariant multiples of known indecomposable patterns until
/// only the top coefficient has a constant or negative-degree part.
Pattern reduce_to_indecomposable(Pattern p, const KnownPatterns& known, std::vector<Subtraction>* log = nullptr);

}  // namespace tiltfock
