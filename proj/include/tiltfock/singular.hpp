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
#include "tiltfock/pattern.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tiltfock {

class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pattern together with the block all of its weights belong to.
struct BlockPattern : Pattern {
  Orbit block;

  static BlockPattern single(const Weight& w);
  friend bool operator==(const BlockPattern& a, const BlockPattern& b) {
    return a.block == b.block && static_cast<const Pattern&>(a) == static_cast<const Pattern&>(b);
  }
};

/// Translation onto a more singular block: nu -> q^{-o} nu_Pi.
BlockPattern theta_down(const BlockPattern& p, const Orbit& target);
/// Translation out of a wall: mu -> sum over preimages lambda of q^{u} lambda.
BlockPattern theta_up(const BlockPattern& p, const Orbit& target);
/// Composite translation from the block of p to the block of target,
/// through the facette between p.top and target realised at twice the level.
BlockPattern theta_general(const BlockPattern& p, const Weight& target);

BlockPattern reduce_singular(const BlockPattern& p, const KnownPatterns& known, std::vector<Subtraction>* log = nullptr);

/// True iff the pattern of w is w itself: w lies in the closure of the
/// fundamental alcove or is the lowest dominant weight of its block.
bool is_base_weight(const Weight& w);

/// The path of weights followed when no path is supplied: cumulative ladder
/// truncations for weights whose partition is regular, and otherwise a
/// chain found by taking the first admissible predecessor at each step.
std::vector<Weight> canonical_path(const Weight& w);

/// Tilting pattern of a dominant weight.  With a path, the pattern is built
/// along it (first entry a base weight, last entry w); throws PathError if a
/// step is not admissible.
BlockPattern compute_pattern(const Weight& w, const std::optional<std::vector<Weight>>& path = std::nullopt);

/// Dominant nu below w, with nu_i <= w_i and w_i - nu_i <= l, from which the
/// translation to w is an admissible step.  Smallest steps first.
std::vector<Weight> admissible_predecessors(const Weight& w);

/// Target of adding one node to each of the first n coordinates whose
/// shifted value is congruent to c mod the level, or nullopt if there are
/// fewer than n of them.
std::optional<Weight> add_to_class(const Weight& w, Coord c, int n);

void clear_singular_cache();

}  // namespace tiltfock
