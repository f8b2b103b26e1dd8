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
#include "tiltfock/fock.hpp"
#include "tiltfock/partition.hpp"
#include "tiltfock/singular.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tiltfock {

/// Weight of a partition in rank m: its parts padded with zeros.  A
/// partition with exactly m parts is reduced by its full columns.
Weight weight_of(const Partition& p, int m, int l);
Partition partition_of(const Weight& w);
/// (lambda_i - i) mod l, the residue of the last node of row i.
int end_residue(const Partition& p, int row, int l);
/// Residue class mod l of the shifted coordinates that receive an i-node.
Coord adding_class(int i, int m, int l);
/// r*lambda + (r-1)*rho at level r*l.
Weight scale(const Weight& w, int r);

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty() && checked == passed; }
  void record(bool good, Failure f);
  Report& merge(const Report& o);
};

/// Fock vector rewritten as weights of rank m.
Pattern fock_as_pattern(const FockVector& v, int m);

/// f_i|lambda> against the translation of lambda to the block of
/// lambda + (an i-node).
Report check_theorem1(const Partition& lambda, int i, int l, NodeOrder order = NodeOrder::EarlierRows);
/// f_i^(n)|lambda> against the translation adding n i-nodes at once.
Report check_theorem2(const Partition& lambda, int i, int n, int l, NodeOrder order = NodeOrder::EarlierRows);
/// Decomposition matrix rows against singular tilting patterns.
Report check_main(int l, int n);

/// Counting statistics for adding an i-node in row b of lambda.
struct ShiftCounts {
  int addable_earlier = 0;   // addable i-nodes in rows before b
  int removable_earlier = 0;  // removable i-nodes in rows before b
  int ends_before_earlier = 0;  // rows before b whose last node has residue i-1
  int ends_at_earlier = 0;  // rows before b whose last node has residue i
};
ShiftCounts node_shift_counts(const Partition& lambda, int i, int row, int l);
/// The u and o statistics of the translation that adds an i-node in row b,
/// measured in the doubled geometry.
std::pair<int, int> theta_shift_counts(const Partition& lambda, int i, int row, int l, int m);

/// At q = 1: the singular pattern of mu times the stabilizer order equals
/// the projection of the regular pattern of a weight just above the scaled mu.
Report check_corollary1(const Weight& mu);

/// Wall correspondence: walls through weight_of(lambda) against equal end residues.
Report check_wall_dictionary(const Partition& lambda, int m, int l);

/// Random chain from the empty partition to lambda, each step adding the
/// first n addable i-nodes of the current partition.  Deterministic in seed.
std::optional<std::vector<Partition>> random_path(const Partition& lambda, int l, std::uint64_t seed);
std::vector<Weight> path_weights(const std::vector<Partition>& path, int m, int l);

/// Random chain of admissible steps from a base weight to w, walking down
/// through admissible_predecessors.  Deterministic in seed.
std::optional<std::vector<Weight>> random_weight_path(const Weight& w, std::uint64_t seed);

/// Compares the canonical pattern of lambda with patterns along `pairs`
/// random admissible paths: node-by-node paths (regular lambda only) and
/// weight paths.
Report check_path_independence(const Partition& lambda, int l, int pairs, std::uint64_t seed);

}  // namespace tiltfock
