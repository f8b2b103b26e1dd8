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

#include <compare>
#include <string>
#include <vector>

namespace tiltfock {

/// Weakly decreasing sequence of positive integers.  Rows are addressed
/// 1-based throughout, matching the usual English diagram convention.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // Length of row r (1-based); zero past the last part.
  int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }

  Partition with_node_added(int r) const;
  Partition with_node_removed(int r) const;

  std::string to_string() const;  // "[3,1,1]", "[]" for the empty partition
  static Partition parse(const std::string& text);

  // Lexicographic order on parts; a linear extension of dominance on
  // partitions of fixed size.
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Node {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct FStep {
  int residue = 0;
  int count = 1;
  friend bool operator==(const FStep&, const FStep&) = default;
};

/// f_{i_1}^{(n_1)} ... f_{i_k}^{(n_k)}, stored in written order; the last
/// step is applied to the empty partition first.
using FWord = std::vector<FStep>;

int mod(long long a, int l);
int residue(const Node& node, int l);

std::vector<Node> addable_nodes(const Partition& p, int i, int l);
std::vector<Node> removable_nodes(const Partition& p, int i, int l);
std::vector<Node> all_addable_nodes(const Partition& p);
std::vector<Node> all_removable_nodes(const Partition& p);

/// lambda <= mu in dominance: every partial sum of mu is at least that of lambda.
bool dominance_leq(const Partition& lambda, const Partition& mu);
bool is_l_regular(const Partition& p, int l);

FWord ladder_word(const Partition& p, int l);
std::string word_to_string(const FWord& w);

/// Partitions of n in descending lexicographic order, optionally only the
/// l-regular ones.
std::vector<Partition> enumerate_partitions(int n, bool regular_only = false, int l = 2);

}  // namespace tiltfock
