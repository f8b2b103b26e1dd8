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

#include <vector>

namespace tiltfock {

/// A regular orbit.  Each dominant alcove is represented by its unique
/// point of the orbit; wall s of an alcove is labelled like the wall of
/// the fundamental alcove it is conjugate to (0 is the affine wall).
class RegularBlock {
 public:
  explicit RegularBlock(const Weight& representative);

  const Orbit& orbit() const { return orbit_; }
  int rank() const { return orbit_.rank(); }
  int level() const { return orbit_.level(); }
  const Weight& fundamental() const { return orbit_.fundamental(); }

  /// The point of the alcove adjacent to that of a across its wall s.
  Weight mirror(const Weight& a, int s) const;
  /// +1 if the mirror across s lies above a, -1 if below.
  int mirror_direction(const Weight& a, int s) const;
  /// Number of hyperplanes separating the alcove of a dominant a from the
  /// fundamental alcove.
  int alcove_length(const Weight& a) const;

 private:
  std::vector<Coord> mirror_shifted(const Weight& a, int s) const;
  Orbit orbit_;
  std::vector<Coord> r_;  // fundamental point, shifted, strictly decreasing
};

Pattern theta_s(const Pattern& p, int s, const RegularBlock& block);
Pattern regular_pattern(const Weight& a);
/// Dominant alcoves of the block whose length is at most max_length, in
/// increasing order of length and then lexicographically.
std::vector<Weight> dominant_alcoves(const RegularBlock& block, int max_length);

void clear_regular_cache();

}  // namespace tiltfock
