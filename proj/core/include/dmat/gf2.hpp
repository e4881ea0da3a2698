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

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dmat/set_system.hpp"

namespace dmat {

/// Symmetric matrix over GF(2). Row i is a mask whose bit (j-1) is a_ij.
/// Diagonal entries may be 1.
class Gf2SymMatrix {
 public:
  explicit Gf2SymMatrix(int n = 0);

  /// Throws PreconditionError if the rows are not symmetric.
  static Gf2SymMatrix from_rows(std::vector<Mask> rows);
  static Gf2SymMatrix all_ones(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  std::span<const Mask> rows() const { return rows_; }

  bool at(int i, int j) const { return has_element(rows_[i - 1], j); }
  /// Sets a_ij and a_ji.
  void set(int i, int j, bool value);

  /// Principal submatrix on the elements of `x`, relabeled in order.
  Gf2SymMatrix principal(Mask x) const;

  friend bool operator==(const Gf2SymMatrix&, const Gf2SymMatrix&) = default;

 private:
  std::vector<Mask> rows_;
};

/// Rank over GF(2) of the given rows (any width up to 32 columns).
int gf2_rank(std::vector<Mask> rows);

/// Full rank over GF(2); the 0x0 matrix is nondegenerate.
bool gf2_nondegenerate(const Gf2SymMatrix& a);

/// Nondegeneracy of the principal submatrix on `x`.
bool principal_nondegenerate(const Gf2SymMatrix& a, Mask x);

/// M_A: X is feasible iff the principal submatrix A[X] is nondegenerate.
DeltaMatroid matrix_delta_matroid(const Gf2SymMatrix& a);

/// Appends element n+1 joined to element 1 only, with a zero diagonal entry.
Gf2SymMatrix extend_matrix(const Gf2SymMatrix& a);

struct BinaryWitness {
  Gf2SymMatrix matrix;
  Mask twist_set;
};

/// Decides whether `s` is a twist of some M_A. Twists by the smallest
/// feasible set so that {} becomes feasible, reads the only possible A off the
/// singletons and pairs, and compares M_A with the twisted family.
std::optional<BinaryWitness> is_binary(const SetSystem& s);

/// Uniformly random symmetric matrix, diagonal included.
Gf2SymMatrix random_symmetric(int n, std::mt19937_64& rng);

/// Exhaustive search over every symmetric matrix and every feasible twist
/// set. Only for n <= kBinaryOracleBound.
inline constexpr int kBinaryOracleBound = 5;
std::optional<BinaryWitness> is_binary_brute_force(const SetSystem& s);

}  // namespace dmat
