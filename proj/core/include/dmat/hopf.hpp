// Copyright 2026 The Authors.
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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmat/gf2.hpp"
#include "dmat/polynomial.hpp"
#include "dmat/set_system.hpp"

namespace dmat {

/// Integer combination of delta-matroids of one ground-set size. Keys are
/// canonical forms, so isomorphic terms are merged; zero terms are dropped.
class DmCombination {
 public:
  explicit DmCombination(int grade) : grade_(grade) {}
  static DmCombination of(const DeltaMatroid& d, Coeff c = 1);

  int grade() const { return grade_; }
  const std::map<SetSystem, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const DeltaMatroid& d) const;

  /// Throws PreconditionError when d has the wrong ground-set size.
  void add(const DeltaMatroid& d, Coeff c);
  /// As add, for a key that is already a canonical form.
  void add_canonical(const SetSystem& key, Coeff c);

  DmCombination& operator+=(const DmCombination& other);
  DmCombination& operator-=(const DmCombination& other);
  DmCombination scaled(Coeff k) const;

  friend DmCombination operator+(DmCombination a, const DmCombination& b) { return a += b; }
  friend DmCombination operator-(DmCombination a, const DmCombination& b) { return a -= b; }
  /// Bilinear extension of the product of delta-matroids.
  friend DmCombination operator*(const DmCombination& a, const DmCombination& b);
  friend bool operator==(const DmCombination&, const DmCombination&) = default;

 private:
  void check_grade(const DmCombination& other) const;

  int grade_;
  std::map<SetSystem, Coeff> terms_;
};

/// Integer combination of tensors left (x) right, keyed by canonical forms.
class TensorCombination {
 public:
  using Key = std::pair<SetSystem, SetSystem>;

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const DeltaMatroid& left, const DeltaMatroid& right, Coeff c);
  void add_canonical(const Key& key, Coeff c);
  TensorCombination& operator+=(const TensorCombination& other);
  TensorCombination& operator-=(const TensorCombination& other);
  /// Exchanges the two tensor factors of every term.
  TensorCombination swapped() const;

  friend bool operator==(const TensorCombination&, const TensorCombination&) = default;

 private:
  std::map<Key, Coeff> terms_;
};

/// Sum over E' of D|E' (x) D|(E \ E').
TensorCombination coproduct(const DeltaMatroid& d);
TensorCombination coproduct(const DmCombination& c);

/// 1 (x) c + c (x) 1.
TensorCombination primitive_coproduct(const DmCombination& c);

bool is_primitive(const DmCombination& c);

/// Largest ground set accepted by the partition expansions.
inline constexpr int kProjectionBound = 10;

/// Projection onto primitives: sum over set partitions {E_1..E_k} of E of
/// (-1)^(k-1) (k-1)! D|E_1 ... D|E_k. Requires 1 <= n <= kProjectionBound.
DmCombination project_primitive(const DeltaMatroid& d);
DmCombination project_primitive(const DmCombination& c);

/// Sum of coefficient * interlace_poly(term).
IntPolynomial q_of_combination(const DmCombination& c);

/// Sum over set partitions of E, with E_1 the block holding element 1, of
/// (-1)^(k-1) (k-1)! D|(E_1 \ {1}) D|E_2 ... D|E_k. Vanishes for n >= 2.
DmCombination element_one_telescope(const DeltaMatroid& d);

enum class Family {
  AllOnes,   // M of the all-ones n x n matrix
  Tower,     // M of the all-ones n x n matrix extended k times at element 1
  Complete,  // M of the adjacency matrix of K_n
};

Gf2SymMatrix family_matrix(Family kind, int n, int k = 0);
DeltaMatroid build_family(Family kind, int n, int k = 0);

/// Interlace polynomials of the projections of AllOnes(n),
/// Tower(n-1, 1), ..., Tower(2, n-2) and Complete(n), their coefficient
/// matrix (columns are degrees 0..n) and its rank over the rationals.
struct PrimitiveValueMatrix {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<IntPolynomial> polynomials;
  std::vector<std::vector<Coeff>> coefficients;
  int rank = 0;
};

PrimitiveValueMatrix primitive_value_matrix(int n);

/// Exact rank over the rationals.
int rational_rank(const std::vector<std::vector<Coeff>>& rows);

}  // namespace dmat
