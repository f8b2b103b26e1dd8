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
#include "tiltfock/partition.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tiltfock {

class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(int level) : level_(level) {}
  static FockVector basis(const Partition& p, int level, LaurentPoly c = 1);

  int level() const { return level_; }
  const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& p) const;

  void add_term(const Partition& p, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector scaled(const LaurentPoly& c) const;
  // Applies bar to every coefficient (not the involution of the module).
  FockVector coefficientwise_bar() const;

  std::string to_string() const;
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

 private:
  int level_ = 2;
  std::map<Partition, LaurentPoly> terms_;
};

/// Which nodes are counted in the exponent of f_i.  EarlierRows is the
/// convention that makes the canonical basis exist; LaterRows is kept for
/// negative controls only.
enum class NodeOrder { EarlierRows, LaterRows };

/// Exponent of q in f_i|p> for the addable node in row r.
int f_exponent(const Partition& p, int i, int l, int r, NodeOrder order = NodeOrder::EarlierRows);

FockVector apply_f(int i, const FockVector& v, NodeOrder order = NodeOrder::EarlierRows);
FockVector apply_f_divided(int i, int n, const FockVector& v, NodeOrder order = NodeOrder::EarlierRows);
FockVector apply_e(int i, const FockVector& v);
FockVector apply_word(const FWord& w, int l, NodeOrder order = NodeOrder::EarlierRows);

/// The vectors w_nu for all l-regular nu of size n, with the triangular
/// elimination needed to express elements of M_n in that basis.
class WBasis {
 public:
  WBasis(int l, int n);
  int level() const { return l_; }
  int size() const { return n_; }
  const std::map<Partition, FockVector>& vectors() const { return w_; }
  std::map<Partition, LaurentPoly> express(const FockVector& v) const;
  FockVector expand(const std::map<Partition, LaurentPoly>& coeffs) const;

 private:
  int l_;
  int n_;
  std::map<Partition, FockVector> w_;
};

std::map<Partition, LaurentPoly> express_in_w_basis(const FockVector& v, const WBasis& basis);
FockVector bar_involution(const FockVector& v, const WBasis& basis);
FockVector bar_involution(const FockVector& v);

struct CanonicalBasisElement {
  Partition label;
  FockVector expansion;
};

struct DecompositionMatrix {
  int l = 2;
  int n = 0;
  std::vector<Partition> rows;  // l-regular partitions, descending
  std::vector<Partition> cols;  // all partitions, descending
  std::vector<std::vector<LaurentPoly>> entries;
};

/// G(lambda) for every l-regular lambda of n, in ascending lexicographic
/// order of the label.  Results are memoised per (l, n).
std::vector<CanonicalBasisElement> canonical_basis(int l, int n);
const FockVector& canonical_element(const Partition& lambda, int l);
DecompositionMatrix decomposition_matrix(int l, int n);

void clear_canonical_cache();

}  // namespace tiltfock
